"""Shared enumerations for ffelim."""

from enum import Enum


class Strategy(str, Enum):
    """Determinant strategy for the parametric resultant."""

    AUTO = "auto"
    LEIBNIZ = "leibniz"
    PROPAGATE = "propagate"
    INTERP = "interp"


class PairStrategy(str, Enum):
    """How generators are paired within one elimination stage."""

    INPUT_ORDER = "input-order"
    MIN_DEGREE_FIRST = "min-degree-first"


class Route(str, Enum):
    """How g(t) = Res_x(f, x^p - x) is built."""

    SYLVESTER = "sylvester"
    PRODUCT = "product"


class DerivationKind(str, Enum):
    FROBENIUS_GCD = "frobenius-gcd"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"
