"""Parametric Sylvester matrix and its Leibniz expansion."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..config import LEIBNIZ_MAX_DIM
from ..errors import ArityMismatch, BothConstantInVar, DimensionTooLarge, ModulusMismatch, ZeroPolynomial
from ..logging import log_event
from ..poly.mpoly import MultiPoly, m_coeffs_in, m_degree_in

logger = logging.getLogger("ffelim.resultant")


@dataclass(frozen=True)
class SylvesterMatrix:
    """Square matrix of MultiPoly entries, none involving ``var``.

    Built by ``sylvester_build``; tests and the propagation method also
    construct arbitrary square matrices directly.
    """

    entries: Tuple[Tuple[MultiPoly, ...], ...]
    var: int
    d_alpha: int = 0
    d_beta: int = 0

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("Sylvester matrix must have dimension >= 1")
        first = self.entries[0][0]
        for row in self.entries:
            if len(row) != n:
                raise ValueError(f"Row of length {len(row)} in a {n}x{n} matrix")
            for entry in row:
                if entry.arity != first.arity:
                    raise ArityMismatch("Matrix entries differ in arity")
                if entry.modulus != first.modulus:
                    raise ModulusMismatch("Matrix entries differ in modulus")
                if not entry.is_zero() and m_degree_in(entry, self.var) > 0:
                    raise ValueError(f"Matrix entry {entry} involves x{self.var}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[MultiPoly]], var: int) -> "SylvesterMatrix":
        return cls(tuple(tuple(r) for r in rows), var)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def arity(self) -> int:
        return self.entries[0][0].arity

    @property
    def modulus(self):
        return self.entries[0][0].modulus

    def __getitem__(self, index: Tuple[int, int]) -> MultiPoly:
        r, c = index
        return self.entries[r][c]


def sylvester_build(alpha: MultiPoly, beta: MultiPoly, var: int) -> SylvesterMatrix:
    """Sylvester matrix of alpha and beta with respect to ``var``.

    Rows 0..d_beta-1 hold alpha's coefficients from highest to lowest degree,
    shifted right by the row index; rows d_beta..D-1 hold beta's likewise.

    Raises:
        ZeroPolynomial: If either polynomial is zero
        BothConstantInVar: If neither polynomial involves ``var``
    """
    if alpha.arity != beta.arity:
        raise ArityMismatch(f"Arity {alpha.arity} does not match arity {beta.arity}")
    if alpha.modulus != beta.modulus:
        raise ModulusMismatch(f"Operands live in {alpha.modulus} and {beta.modulus}")
    if alpha.is_zero() or beta.is_zero():
        raise ZeroPolynomial("Resultant with the zero polynomial")

    a = m_coeffs_in(alpha, var)
    b = m_coeffs_in(beta, var)
    d_alpha, d_beta = len(a) - 1, len(b) - 1
    if d_alpha == 0 and d_beta == 0:
        raise BothConstantInVar(f"Neither polynomial involves x{var}")

    size = d_alpha + d_beta
    zero = MultiPoly.zero(alpha.arity, alpha.modulus)
    rows: List[List[MultiPoly]] = []
    for i in range(d_beta):
        row = [zero] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)
    for j in range(d_alpha):
        row = [zero] * size
        for k, c in enumerate(reversed(b)):
            row[j + k] = c
        rows.append(row)

    return SylvesterMatrix(tuple(tuple(r) for r in rows), var, d_alpha, d_beta)


def res_leibniz(m: SylvesterMatrix, max_dim: int = LEIBNIZ_MAX_DIM) -> MultiPoly:
    """Determinant as the signed sum over permutations.

    Zero entries prune the search, so sparse Sylvester matrices expand far
    fewer than D! products.

    Raises:
        DimensionTooLarge: If D exceeds ``max_dim``
    """
    n = m.dim
    if n > max_dim:
        raise DimensionTooLarge(f"Leibniz expansion limited to D <= {max_dim}, got D = {n}")

    total = MultiPoly.zero(m.arity, m.modulus)
    used = [False] * n
    leaves = 0

    def expand(row: int, acc: MultiPoly, inversions: int) -> None:
        nonlocal total, leaves
        if row == n:
            leaves += 1
            total = total + (acc if inversions % 2 == 0 else -acc)
            return
        for col in range(n):
            if used[col]:
                continue
            entry = m.entries[row][col]
            if entry.is_zero():
                continue
            # Inversions contributed: earlier rows that took a larger column
            added = sum(1 for c in range(col + 1, n) if used[c])
            used[col] = True
            expand(row + 1, acc * entry, inversions + added)
            used[col] = False

    expand(0, MultiPoly.constant(1, m.arity, m.modulus), 0)
    log_event(logger, "leibniz_expanded", dim=n, products=leaves, terms=len(total))
    return total
