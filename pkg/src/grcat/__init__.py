"""grcat: finite length-category data as explicit combinatorics.

Parse and validate spec files, compute Gabriel-Roiter measures and their
partition into blocks, build orthogonality towers and filtration closures,
run consistency checker suites, and generate reference instances from
GF(2) quiver representations.
"""

from .catspec import (
    ZERO,
    CategorySpec,
    Conflation,
    ObjectRef,
    SubobjectPoset,
    ValidationReport,
    Violation,
    parse_spec,
    render_spec,
    spec_from_doc,
    subobject_poset,
    theta_of,
    validate_spec,
)
from .chains import (
    Chain,
    MeasureTable,
    chain_leq,
    chain_max,
    gr_measure,
    gr_measure_bruteforce,
    gr_table,
    measure_map,
)
from .errors import (
    SizeGuardError,
    SpecError,
    SpecFormatError,
    SpecInconsistencyError,
    UnknownIdError,
)
from .filtration import (
    FiltResult,
    check_lx_is_length_function,
    default_universe,
    filt_closure,
    x_length,
)
from .generator import (
    FINAL_EXAMPLE_RENAMING,
    FIXTURE_DB_WINDOW,
    FIXTURE_FINAL_EXAMPLE,
    IntervalModule,
    bundled_fixture,
    bundled_fixture_text,
    ext_table_bruteforce,
    fixture,
    generate_an,
    intervals_an,
    write_spec_file,
)
from .report import Check, Report
from .simpleminded import (
    BrickSet,
    is_finite_type,
    is_semibrick,
    theta_infinity,
    theta_n,
    theta_one,
)
from .theorems import (
    brauer_thrall_report,
    check_ext_bound,
    check_gr_axioms,
    check_main_property,
    check_small_lemmas,
    run_all_suites,
)

__version__ = "0.1.0"

__all__ = [
    "BrickSet",
    "CategorySpec",
    "Chain",
    "Check",
    "Conflation",
    "FINAL_EXAMPLE_RENAMING",
    "FIXTURE_DB_WINDOW",
    "FIXTURE_FINAL_EXAMPLE",
    "FiltResult",
    "IntervalModule",
    "MeasureTable",
    "ObjectRef",
    "Report",
    "SizeGuardError",
    "SpecError",
    "SpecFormatError",
    "SpecInconsistencyError",
    "SubobjectPoset",
    "UnknownIdError",
    "ValidationReport",
    "Violation",
    "ZERO",
    "brauer_thrall_report",
    "bundled_fixture",
    "bundled_fixture_text",
    "chain_leq",
    "chain_max",
    "check_ext_bound",
    "check_gr_axioms",
    "check_lx_is_length_function",
    "check_main_property",
    "check_small_lemmas",
    "default_universe",
    "ext_table_bruteforce",
    "filt_closure",
    "fixture",
    "generate_an",
    "gr_measure",
    "gr_measure_bruteforce",
    "gr_table",
    "intervals_an",
    "is_finite_type",
    "is_semibrick",
    "measure_map",
    "parse_spec",
    "render_spec",
    "spec_from_doc",
    "subobject_poset",
    "theta_infinity",
    "theta_n",
    "theta_of",
    "theta_one",
    "validate_spec",
    "write_spec_file",
    "x_length",
]
