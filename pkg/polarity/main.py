"""
Wiener Polarity Command Line
============================

Batch commands over edge lists and hexagon blueprints:

    compute   --input FILE --method {formula,oracle,both}
    build     --spec FILE --kind {benzenoid,phenylene}
    enumerate --kind K --h N
    verify    --kind K --h N [--sweep]

Every command accepts --format {text,structured} and -v/--verbose.

Exit codes:
    0 ok, 1 usage (including the enumeration guard), 2 parse, 3 disconnected,
    4 precondition refusal, 5 unrealizable spec, 6 verification failure
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import List, Optional

from polarity import __version__
from polarity.config import settings
from polarity.services.chem import (
    ClosedFormError,
    SpecError,
    SystemKind,
    build_system,
    parse_spec,
    system_metadata,
    three_way_wiener_polarity,
)
from polarity.services.extremal import (
    EnumerationGuardError,
    agreement_sweep,
    enumerate_catafused,
    family_tags,
    verify_extremal,
)
from polarity.services.indices import PreconditionError, first_zagreb_by_edges, full_report
from polarity.utils.graph_core import DisconnectedGraphError, GraphError, GraphParseError, parse_edge_list, serialize_edge_list
from polarity.utils.records import render, render_many

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    PARSE = 2
    DISCONNECTED = 3
    PRECONDITION = 4
    UNREALIZABLE = 5
    VERIFICATION = 6


class InputReadError(Exception):
    """Input file could not be read."""


class PolarityArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    """Parsed command line."""
    command: str
    input_path: Optional[Path] = None
    spec_path: Optional[Path] = None
    method: str = "both"
    kind: SystemKind = SystemKind.BENZENOID
    h: Optional[int] = None
    output_format: str = "text"
    sweep: bool = False
    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            input_path=getattr(args, "input", None),
            spec_path=getattr(args, "spec", None),
            method=getattr(args, "method", "both"),
            kind=SystemKind(getattr(args, "kind", SystemKind.BENZENOID.value)),
            h=getattr(args, "h", None),
            output_format=args.format,
            sweep=getattr(args, "sweep", False),
            verbose=args.verbose,
        )


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputReadError(f"cannot read {path}: {exc}") from exc


def _emit(text: str) -> None:
    sys.stdout.write(text)


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_compute(config: RunConfig) -> int:
    """Indices of one edge-list graph."""
    graph = parse_edge_list(_read(config.input_path))
    report = full_report(graph)

    if config.method == "formula" and not report.preconditions_pass:
        print(f"formula refused: {report.wp_formula_reason}", file=sys.stderr)
        return ExitCode.PRECONDITION

    fields = {
        "vertices": graph.order,
        "edges": report.edge_count,
        "m1": report.m1,
        "m1_by_edges": first_zagreb_by_edges(graph),
        "m2": report.m2,
        "p3": report.p3,
        "c3": report.c3,
        "c4": report.c4,
        "c5": report.c5,
        "c6": report.c6,
        "f": report.f,
        "preconditions": report.preconditions_pass,
    }
    if config.method in ("formula", "both"):
        fields["wp_formula"] = report.wp_formula
        if report.wp_formula_reason:
            fields["wp_formula_reason"] = report.wp_formula_reason
    if config.method in ("oracle", "both"):
        fields["wp_oracle"] = report.wp_oracle

    _emit(render(str(config.input_path), fields, config.output_format))

    if config.method == "both" and not report.consistent:
        print("formula and oracle disagree", file=sys.stderr)
        return ExitCode.VERIFICATION
    return ExitCode.OK


def cmd_build(config: RunConfig) -> int:
    """Build a system from a blueprint and report W_p three ways."""
    spec = parse_spec(_read(config.spec_path), config.kind)
    system = build_system(spec)
    values = three_way_wiener_polarity(system)

    fields = dict(system_metadata(system))
    fields.update({
        "wp_closed_form": values.closed_form,
        "wp_formula": values.formula,
        "wp_oracle": values.oracle,
        "agree": values.agree,
    })
    title = f"{system.kind.value} h={system.h}"
    _emit(render_many([render(title, fields, config.output_format), serialize_edge_list(system.graph)]))

    return ExitCode.OK if values.agree else ExitCode.VERIFICATION


def cmd_enumerate(config: RunConfig) -> int:
    """One record per enumerated system."""
    systems = enumerate_catafused(config.h, config.kind)
    tags = family_tags(systems, config.h, config.kind)

    blocks = []
    all_agree = True
    for index, (system, families) in enumerate(zip(systems, tags)):
        values = three_way_wiener_polarity(system)
        all_agree = all_agree and values.agree
        fields = {"index": index, "spec": system.spec.to_text().strip().replace("\n", "; ")}
        fields.update(system.profile.counts())
        fields.update({
            "wp_closed_form": values.closed_form,
            "wp_formula": values.formula,
            "wp_oracle": values.oracle,
            "families": [f.value for f in families],
        })
        blocks.append(render(f"{config.kind.value} h={config.h} #{index}", fields, config.output_format))

    _emit(render_many(blocks))
    logger.info(f"Emitted {len(blocks)} system(s)")
    return ExitCode.OK if all_agree else ExitCode.VERIFICATION


def cmd_verify(config: RunConfig) -> int:
    """Extremal check plus agreement sweep, one summary per h."""
    heights = range(2, config.h + 1) if config.sweep else [config.h]

    blocks = []
    failed = False
    for h in heights:
        extremal = verify_extremal(h, config.kind)
        sweep = agreement_sweep(h, config.kind)
        passed = extremal.passed and sweep.passed
        failed = failed or not passed

        fields = {
            "kind": config.kind.value,
            "h": h,
            "status": "pass" if passed else "fail",
            "systems": extremal.system_count,
            "min_value": extremal.min_value,
            "min_unique_is_linear": extremal.min_unique_is_linear,
            "max_value": extremal.max_value,
            "max_witnesses": len(extremal.max_witnesses),
            "max_set_equals_family": extremal.max_set_equals_family,
            "prime_members_fall_short": extremal.prime_members_fall_short,
            "sweep_failures": len(sweep.failures),
        }
        for i, problem in enumerate(extremal.counterexamples + sweep.failures):
            fields[f"counterexample.{i}"] = problem

        title = f"{config.kind.value} h={h}: {'PASS' if passed else 'FAIL'}"
        blocks.append(render(title, fields, config.output_format))

    _emit(render_many(blocks))
    return ExitCode.VERIFICATION if failed else ExitCode.OK


COMMANDS = {
    "compute": cmd_compute,
    "build": cmd_build,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


# ============================================================================
# ENTRY POINT
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text", help="Output layout")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = PolarityArgumentParser(
        prog="polarity",
        description="Wiener polarity index of graphs, benzenoids and phenylenes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=PolarityArgumentParser)

    compute = sub.add_parser("compute", parents=[common], help="Indices of an edge-list graph")
    compute.add_argument("--input", type=Path, required=True, help="Edge-list file")
    compute.add_argument("--method", choices=["formula", "oracle", "both"], default="both")

    kinds = [k.value for k in SystemKind]

    build = sub.add_parser("build", parents=[common], help="Build a system from a blueprint")
    build.add_argument("--spec", type=Path, required=True, help="Blueprint file ('id parent direction' lines)")
    build.add_argument("--kind", choices=kinds, default=SystemKind.BENZENOID.value)

    for name, help_text in (("enumerate", "List every catacondensed system"), ("verify", "Check the extremal statements")):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.add_argument("--kind", choices=kinds, default=SystemKind.BENZENOID.value)
        command.add_argument("--h", type=int, required=True, help="Number of hexagons")
        if name == "verify":
            command.add_argument("--sweep", action="store_true", help="Verify every h from 2 to --h")

    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose or settings.debug else getattr(logging, settings.log_level)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    config = RunConfig.from_args(args)
    configure_logging(config.verbose)

    try:
        return int(COMMANDS[config.command](config))
    except (GraphParseError, InputReadError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return ExitCode.PARSE
    except DisconnectedGraphError as exc:
        print(f"disconnected input: {exc}", file=sys.stderr)
        return ExitCode.DISCONNECTED
    except GraphError as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return ExitCode.PARSE
    except PreconditionError as exc:
        print(f"formula refused: {exc}", file=sys.stderr)
        return ExitCode.PRECONDITION
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return ExitCode.PARSE if exc.line_number is not None else ExitCode.UNREALIZABLE
    except ClosedFormError as exc:
        print(f"closed forms unavailable: {exc}", file=sys.stderr)
        return ExitCode.UNREALIZABLE
    except EnumerationGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    sys.exit(main())
