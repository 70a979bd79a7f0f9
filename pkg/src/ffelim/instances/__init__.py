"""Sparse-polynomial instance generators and nonvanishing deciders."""

from .eisenstein import EisensteinInstance, IntegerSparsePoly, gen_eisenstein_sparse
from .sparse import (
    SparseFactor,
    SparsePolySpec,
    check_nonvanishing,
    decide_pair_nonvanishing,
    gen_nonresidue_product,
    gen_substitution,
    transcript_sizes,
)

__all__ = [
    "EisensteinInstance",
    "IntegerSparsePoly",
    "SparseFactor",
    "SparsePolySpec",
    "check_nonvanishing",
    "decide_pair_nonvanishing",
    "gen_eisenstein_sparse",
    "gen_nonresidue_product",
    "gen_substitution",
    "transcript_sizes",
]
