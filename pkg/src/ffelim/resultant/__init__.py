"""Parametric resultants: Sylvester matrices and determinant strategies."""

from .fraction import PolyFraction
from .strategies import (
    PropagationState,
    propagate,
    res,
    res_interp,
    res_propagate,
    res_resolved,
    resolve_strategy,
)
from .sylvester import SylvesterMatrix, res_leibniz, sylvester_build

__all__ = [
    "PolyFraction",
    "PropagationState",
    "SylvesterMatrix",
    "propagate",
    "res",
    "res_interp",
    "res_leibniz",
    "res_propagate",
    "res_resolved",
    "resolve_strategy",
    "sylvester_build",
]
