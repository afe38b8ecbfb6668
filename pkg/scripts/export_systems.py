#!/usr/bin/env python3
"""
Export Enumerated Systems
=========================

Writes every catacondensed system of one kind and hexagon count as an
edge-list file plus a metadata companion:

    <kind>_h<h>_<index>.edges   edge list (one "u v" pair per line)
    <kind>_h<h>_<index>.meta    "key = value" block: counts, classes, faces, W_p

Usage:
    python scripts/export_systems.py --kind benzenoid --h 5 --out data/exports
    python scripts/export_systems.py --kind phenylene --h 4 --out /tmp/phenylenes
"""

import argparse
import sys
from pathlib import Path

from dotenv import load_dotenv

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

# Load environment variables (enumeration guard)
load_dotenv()

from polarity.services.chem import SystemKind, system_metadata, three_way_wiener_polarity  # noqa: E402
from polarity.services.extremal import EnumerationGuardError, enumerate_catafused, family_tags  # noqa: E402
from polarity.utils.graph_core import serialize_edge_list  # noqa: E402
from polarity.utils.records import format_block  # noqa: E402


def export_systems(kind: SystemKind, h: int, out_dir: Path) -> dict:
    """
    Enumerate and write all systems.

    Args:
        kind: benzenoid or phenylene
        h: Number of hexagons
        out_dir: Target directory (created if missing)

    Returns:
        Export statistics
    """
    print("Exporting catacondensed systems...")
    print(f"  Kind: {kind.value}")
    print(f"  Hexagons: {h}")
    print(f"  Target: {out_dir}")

    systems = enumerate_catafused(h, kind)
    tags = family_tags(systems, h, kind)
    out_dir.mkdir(parents=True, exist_ok=True)

    disagreements = 0
    for index, (system, families) in enumerate(zip(systems, tags)):
        stem = out_dir / f"{kind.value}_h{h}_{index}"
        values = three_way_wiener_polarity(system)
        if not values.agree:
            disagreements += 1

        meta = dict(system_metadata(system))
        meta["families"] = ", ".join(f.value for f in families)
        meta["wp_closed_form"] = str(values.closed_form)
        meta["wp_formula"] = str(values.formula)
        meta["wp_oracle"] = str(values.oracle)

        stem.with_suffix(".edges").write_text(serialize_edge_list(system.graph), encoding="utf-8")
        stem.with_suffix(".meta").write_text(format_block(meta), encoding="utf-8")

    print(f"  Systems written: {len(systems)}")
    return {"systems": len(systems), "disagreements": disagreements}


def main():
    parser = argparse.ArgumentParser(description="Export enumerated benzenoids / phenylenes")
    parser.add_argument("--kind", choices=[k.value for k in SystemKind], default=SystemKind.BENZENOID.value)
    parser.add_argument("--h", type=int, required=True, help="Number of hexagons")
    parser.add_argument("--out", type=Path, default=Path("data") / "exports", help="Output directory")
    args = parser.parse_args()

    try:
        stats = export_systems(SystemKind(args.kind), args.h, args.out)
    except (EnumerationGuardError, ValueError) as e:
        print(f"\n❌ Export failed: {e}")
        sys.exit(1)

    if stats["disagreements"]:
        print(f"\n❌ {stats['disagreements']} system(s) with disagreeing W_p values")
        sys.exit(1)

    print(f"\n✅ Export complete: {stats['systems']} systems")


if __name__ == "__main__":
    main()
