"""Rabin-basis elimination and the extended-Euclidean comparator."""

from .eea import eea_parametric_gcd, m_prem
from .growth import GrowthConfig, bench_growth, transcript_size
from .rabin import EliminationPlan, RabinBasis, rabin_basis, rabin_step
from .termlog import GrowthRow, TermGrowthLog

__all__ = [
    "EliminationPlan",
    "GrowthConfig",
    "GrowthRow",
    "RabinBasis",
    "TermGrowthLog",
    "bench_growth",
    "eea_parametric_gcd",
    "m_prem",
    "rabin_basis",
    "rabin_step",
    "transcript_size",
]
