"""Root counting and the no-zero decision for bivariate f(t, x)."""

from .derivation import Derivation, VerificationReport, emit_gcd_derivation, verify_derivation
from .instance import BivariateInstance
from .pipeline import (
    CountReport,
    DecisionReport,
    build_g,
    count_distinct_t,
    decide_no_zero,
    moebius,
    per_degree_counts,
)

__all__ = [
    "BivariateInstance",
    "CountReport",
    "DecisionReport",
    "Derivation",
    "VerificationReport",
    "build_g",
    "count_distinct_t",
    "decide_no_zero",
    "emit_gcd_derivation",
    "moebius",
    "per_degree_counts",
    "verify_derivation",
]
