"""Exact rational reconstruction of historical square- and cube-root rules."""

from .analysis import (
    ComparisonTable,
    ErrorRow,
    compare_methods,
    decimal_oracle_root,
    error_table,
    pell_form,
)
from .rational import (
    DecimalApprox,
    DomainError,
    Rational,
    compare,
    format_rational,
    make_rational,
    parse_rational,
    to_decimal,
)
from .roots import (
    ApproximationReport,
    BoundSide,
    CircleMode,
    CircleResult,
    DegenerateChainError,
    FloorRoot,
    IterationRecord,
    RootProblem,
    Rule,
    UnitChain,
    baudhayana_series,
    brahmagupta_circle,
    classify_bound,
    floor_root,
    morouzi_approx,
    morouzi_first_correction,
    newton_neglect_step,
    residual,
    unit_chain,
)

__all__ = [
    "ApproximationReport",
    "BoundSide",
    "CircleMode",
    "CircleResult",
    "ComparisonTable",
    "DecimalApprox",
    "DegenerateChainError",
    "DomainError",
    "ErrorRow",
    "FloorRoot",
    "IterationRecord",
    "Rational",
    "RootProblem",
    "Rule",
    "UnitChain",
    "baudhayana_series",
    "brahmagupta_circle",
    "classify_bound",
    "compare",
    "compare_methods",
    "decimal_oracle_root",
    "error_table",
    "floor_root",
    "format_rational",
    "make_rational",
    "morouzi_approx",
    "morouzi_first_correction",
    "newton_neglect_step",
    "parse_rational",
    "pell_form",
    "residual",
    "to_decimal",
    "unit_chain",
]
