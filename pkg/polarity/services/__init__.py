"""Index computation, polycyclic construction and extremal verification."""

from .cycles import (
    CycleInventory,
    PreconditionReport,
    TriangleError,
    build_inventory,
    check_preconditions,
    enumerate_cycles,
    exiting_edge_count,
    f_of,
)
from .indices import (
    IndexReport,
    PreconditionError,
    first_zagreb,
    full_report,
    path3_count,
    second_zagreb,
    wiener_polarity_formula,
    wiener_polarity_oracle,
)
from .chem import (
    BuiltSystem,
    ClosedFormError,
    HexagonClass,
    HexProfile,
    PolycyclicSpec,
    SpecError,
    SystemKind,
    UnrealizableSpecError,
    build_benzenoid,
    build_phenylene,
    build_system,
    classify_hexagons,
    closed_form_report,
    parse_spec,
)
from .extremal import (
    EnumerationGuardError,
    ExtensionError,
    ExtensionKind,
    ExtensionStep,
    ExtremalReport,
    Family,
    FamilyTag,
    SweepReport,
    agreement_sweep,
    apply_extension,
    enumerate_catafused,
    generate_family,
    linear_chain,
    verify_extremal,
)

__all__ = [
    # Cycles
    "CycleInventory",
    "PreconditionReport",
    "TriangleError",
    "build_inventory",
    "check_preconditions",
    "enumerate_cycles",
    "exiting_edge_count",
    "f_of",
    # Indices
    "IndexReport",
    "PreconditionError",
    "first_zagreb",
    "second_zagreb",
    "path3_count",
    "wiener_polarity_formula",
    "wiener_polarity_oracle",
    "full_report",
    # Benzenoids and phenylenes
    "BuiltSystem",
    "ClosedFormError",
    "HexagonClass",
    "HexProfile",
    "PolycyclicSpec",
    "SpecError",
    "SystemKind",
    "UnrealizableSpecError",
    "parse_spec",
    "build_benzenoid",
    "build_phenylene",
    "build_system",
    "classify_hexagons",
    "closed_form_report",
    # Extremal families
    "EnumerationGuardError",
    "ExtensionError",
    "ExtensionKind",
    "ExtensionStep",
    "ExtremalReport",
    "Family",
    "FamilyTag",
    "SweepReport",
    "apply_extension",
    "linear_chain",
    "generate_family",
    "enumerate_catafused",
    "verify_extremal",
    "agreement_sweep",
]
