"""Brute-force ground truth over GF(p) and small extensions."""

from .brute import BruteCount, CommonRoot, brute_bivariate_roots, brute_common_root, brute_system_zeros
from .extension import ExtField, ext_make

__all__ = [
    "BruteCount",
    "CommonRoot",
    "ExtField",
    "brute_bivariate_roots",
    "brute_common_root",
    "brute_system_zeros",
    "ext_make",
]
