"""Determinant strategies for the parametric resultant.

``res_propagate`` grows an invertible submatrix one row and column at a
time, carrying its determinant and adjugate. ``res_interp`` specializes the
free variable of a bivariate pair and interpolates. ``res`` dispatches.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from ..config import (
    AUTO_LEIBNIZ_MAX_DIM,
    INTERP_BUDGET_FACTOR,
    INTERP_MAX_EXTENSION,
    LEIBNIZ_MAX_DIM,
)
from ..errors import (
    ArityMismatch,
    BothConstantInVar,
    DegenerateSpecialization,
    FieldTooSmall,
    ModulusMismatch,
    ZeroPolynomial,
)
from ..field.prime import FieldOps, PrimeModulus
from ..logging import log_event
from ..oracle.extension import ExtField, ext_make
from ..poly import dense
from ..poly.mpoly import MultiPoly, from_upoly, m_coeffs_in, m_degree_in, m_exquo, to_upoly
from ..poly.upoly import UniPoly
from ..types import Strategy
from .fraction import PolyFraction
from .sylvester import SylvesterMatrix, res_leibniz, sylvester_build

logger = logging.getLogger("ffelim.resultant")

Grid = List[List[MultiPoly]]


@dataclass(frozen=True)
class PropagationStep:
    """One recorded event of the propagation method."""

    k: int
    row: Optional[int]
    col: Optional[int]
    det: MultiPoly
    stalled: bool = False


@dataclass
class PropagationState:
    """Invertible k x k submatrix S_k of a matrix, with det and adjugate.

    ``adjugate`` is indexed like S_k^-1 (rows by selected column position,
    columns by selected row position), so S_k^-1 = adjugate / det.
    """

    k: int
    row_ids: List[int]
    col_ids: List[int]
    det: MultiPoly
    adjugate: Grid
    history: List[PropagationStep] = field(default_factory=list)
    stall_k: Optional[int] = None

    def submatrix(self, m: SylvesterMatrix) -> Grid:
        return [[m[r, c] for c in self.col_ids] for r in self.row_ids]

    def inverse(self) -> List[List[PolyFraction]]:
        """S_k^-1 over the fraction field."""
        return [[PolyFraction(a, self.det).reduce() for a in row] for row in self.adjugate]


def _permutation_sign(order: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j]
    )
    return -1 if inversions % 2 else 1


def _dot(a: Sequence[MultiPoly], b: Sequence[MultiPoly], zero: MultiPoly) -> MultiPoly:
    total = zero
    for x, y in zip(a, b):
        if not x.is_zero() and not y.is_zero():
            total = total + x * y
    return total


def _border(state: PropagationState, m: SylvesterMatrix, row: int, col: int,
            new_det: MultiPoly, adj_u: List[MultiPoly], zero: MultiPoly) -> None:
    """Extend the state by (row, col) using the Sylvester-identity update."""
    k = state.k
    v = [m[row, c] for c in state.col_ids]
    # v^T A, indexed by selected-row position
    v_adj = [_dot(v, [state.adjugate[i][j] for i in range(k)], zero) for j in range(k)]

    old_det = state.det
    top_left = [
        [
            m_exquo(new_det * state.adjugate[i][j] + adj_u[i] * v_adj[j], old_det)
            for j in range(k)
        ]
        for i in range(k)
    ]
    adjugate = [top_left[i] + [-adj_u[i]] for i in range(k)]
    adjugate.append([-x for x in v_adj] + [old_det])

    state.adjugate = adjugate
    state.det = new_det
    state.row_ids.append(row)
    state.col_ids.append(col)
    state.k = k + 1
    state.history.append(PropagationStep(state.k, row, col, new_det))


def propagate(m: SylvesterMatrix) -> PropagationState:
    """Run the propagation method and return the final state.

    Columns are tried lowest index first; for each column the lowest
    unselected row whose bordered determinant is nonzero is accepted.
    """
    n = m.dim
    zero = MultiPoly.zero(m.arity, m.modulus)
    one = MultiPoly.constant(1, m.arity, m.modulus)
    state = PropagationState(k=0, row_ids=[], col_ids=[], det=one, adjugate=[])

    while state.k < n:
        free_rows = [r for r in range(n) if r not in state.row_ids]
        free_cols = [c for c in range(n) if c not in state.col_ids]
        chosen = None
        for col in free_cols:
            u = [m[r, col] for r in state.row_ids]
            adj_u = [_dot(state.adjugate[i], u, zero) for i in range(state.k)]
            for row in free_rows:
                v = [m[row, c] for c in state.col_ids]
                new_det = m[row, col] * state.det - _dot(v, adj_u, zero)
                if not new_det.is_zero():
                    chosen = (row, col, new_det, adj_u)
                    break
            if chosen is not None:
                break

        if chosen is None:
            state.stall_k = state.k
            state.history.append(PropagationStep(state.k, None, None, zero, stalled=True))
            log_event(logger, "propagation_stalled", k=state.k, dim=n)
            return state

        row, col, new_det, adj_u = chosen
        _border(state, m, row, col, new_det, adj_u, zero)

    return state


def res_propagate(m: SylvesterMatrix) -> MultiPoly:
    """Determinant by incremental propagation; a rank stall gives zero."""
    state = propagate(m)
    if state.stall_k is not None:
        return MultiPoly.zero(m.arity, m.modulus)
    # det(S_D) is det(M) with rows and columns permuted
    sign = _permutation_sign(state.row_ids) * _permutation_sign(state.col_ids)
    return state.det if sign == 1 else -state.det


def _smallest_extension(p: int, n_points: int) -> int:
    e = 1
    while p**e < n_points:
        e += 1
    return e


def _sample_field(modulus: PrimeModulus, e: int) -> Union[PrimeModulus, ExtField]:
    if e == 1:
        return modulus
    return ext_make(modulus, e, seed=0, limit=modulus.p**e)


def _field_point(fld: FieldOps, index: int):
    if isinstance(fld, ExtField):
        return fld.element(index)
    return index


def _to_base(fld: FieldOps, value) -> int:
    if isinstance(fld, ExtField):
        return fld.to_base(value)
    return value


def res_interp(
    alpha: MultiPoly,
    beta: MultiPoly,
    var: int,
    budget_factor: int = INTERP_BUDGET_FACTOR,
    max_extension: int = INTERP_MAX_EXTENSION,
) -> MultiPoly:
    """Resultant of a bivariate pair by evaluation and interpolation.

    The free variable t is specialized at N = D * deg_t + 1 points, in GF(p)
    when it is large enough and otherwise in the smallest GF(p^e) that is.
    Points where both leading coefficients vanish are skipped.

    Raises:
        ArityMismatch: If the pair is not bivariate
        FieldTooSmall: If no extension up to ``max_extension`` has N usable points
        DegenerateSpecialization: If more than budget_factor * N points were tried
    """
    if alpha.arity != 2 or beta.arity != 2:
        raise ArityMismatch("Interpolation strategy needs bivariate polynomials")
    if alpha.modulus != beta.modulus:
        raise ModulusMismatch(f"Operands live in {alpha.modulus} and {beta.modulus}")
    if alpha.is_zero() or beta.is_zero():
        raise ZeroPolynomial("Resultant with the zero polynomial")

    t = 1 - var
    modulus = alpha.modulus
    a = [to_upoly(c, t) for c in m_coeffs_in(alpha, var)]
    b = [to_upoly(c, t) for c in m_coeffs_in(beta, var)]
    dim = len(a) + len(b) - 2
    if dim == 0:
        raise BothConstantInVar(f"Neither polynomial involves x{var}")

    delta_t = max(m_degree_in(alpha, t), m_degree_in(beta, t))
    n_points = dim * delta_t + 1
    budget = budget_factor * n_points

    e = _smallest_extension(modulus.p, n_points)
    while e <= max_extension:
        fld = _sample_field(modulus, e)
        if e > 1:
            log_event(logger, "interp_extension_lift", p=modulus.p, e=e, points=n_points)

        a_lifted = [[fld.embed(c) for c in u.coeffs] for u in a]
        b_lifted = [[fld.embed(c) for c in u.coeffs] for u in b]

        xs, ys = [], []
        tried = 0
        for index in range(fld.size):
            if len(xs) == n_points:
                break
            if tried >= budget:
                raise DegenerateSpecialization(
                    f"Tried {tried} points, found {len(xs)} of {n_points} usable"
                )
            tried += 1
            point = _field_point(fld, index)
            a_vals = [dense.horner(fld, c, point) for c in a_lifted]
            b_vals = [dense.horner(fld, c, point) for c in b_lifted]
            if fld.is_zero(a_vals[-1]) and fld.is_zero(b_vals[-1]):
                log_event(logger, "interp_point_skipped", point=point)
                continue
            rows = dense.sylvester_rows(fld, a_vals, b_vals)
            xs.append(point)
            ys.append(dense.determinant(fld, rows))

        if len(xs) == n_points:
            coeffs = dense.interpolate(fld, xs, ys)
            base = UniPoly(tuple(_to_base(fld, c) for c in coeffs), modulus)
            return from_upoly(base, t, 2)
        e += 1

    raise FieldTooSmall(
        f"Need {n_points} sample points; GF({modulus.p}^{max_extension}) is too small"
    )


def interp_point_count(alpha: MultiPoly, beta: MultiPoly, var: int) -> int:
    """N = D * deg_t + 1 sample points needed by ``res_interp``."""
    t = 1 - var
    dim = m_degree_in(alpha, var) + m_degree_in(beta, var)
    delta_t = max(m_degree_in(alpha, t), m_degree_in(beta, t))
    return dim * delta_t + 1


def resolve_strategy(
    alpha: MultiPoly,
    beta: MultiPoly,
    var: int,
    strategy: Strategy = Strategy.AUTO,
    *,
    auto_leibniz_max_dim: int = AUTO_LEIBNIZ_MAX_DIM,
    interp_max_extension: int = INTERP_MAX_EXTENSION,
) -> Strategy:
    """The concrete strategy ``res`` runs for this pair.

    ``auto`` takes leibniz for D <= auto_leibniz_max_dim, interp for
    bivariate input whose sample points fit in GF(p^max_extension), and
    propagate otherwise. Explicit strategies are returned unchanged.
    """
    strategy = Strategy(strategy)
    if strategy != Strategy.AUTO:
        return strategy
    dim = m_degree_in(alpha, var) + m_degree_in(beta, var)
    if dim <= auto_leibniz_max_dim:
        return Strategy.LEIBNIZ
    if alpha.arity == 2:
        n_points = interp_point_count(alpha, beta, var)
        if _smallest_extension(alpha.modulus.p, n_points) <= interp_max_extension:
            return Strategy.INTERP
    return Strategy.PROPAGATE


def res_resolved(
    alpha: MultiPoly,
    beta: MultiPoly,
    var: int,
    strategy: Strategy = Strategy.AUTO,
    *,
    leibniz_max_dim: int = LEIBNIZ_MAX_DIM,
    auto_leibniz_max_dim: int = AUTO_LEIBNIZ_MAX_DIM,
    interp_budget_factor: int = INTERP_BUDGET_FACTOR,
    interp_max_extension: int = INTERP_MAX_EXTENSION,
) -> Tuple[MultiPoly, Strategy]:
    """Res_var(alpha, beta) together with the strategy that produced it.

    Under ``auto`` an interpolation that runs out of usable points falls
    back to propagation, and the returned strategy says so.
    """
    requested = Strategy(strategy)
    m = sylvester_build(alpha, beta, var)
    strategy = resolve_strategy(
        alpha,
        beta,
        var,
        requested,
        auto_leibniz_max_dim=auto_leibniz_max_dim,
        interp_max_extension=interp_max_extension,
    )
    log_event(logger, "resultant_strategy", strategy=strategy.value, dim=m.dim, var=var)

    if strategy == Strategy.LEIBNIZ:
        return res_leibniz(m, max_dim=leibniz_max_dim), strategy
    if strategy == Strategy.INTERP:
        try:
            r = res_interp(
                alpha,
                beta,
                var,
                budget_factor=interp_budget_factor,
                max_extension=interp_max_extension,
            )
            return r, strategy
        except (DegenerateSpecialization, FieldTooSmall):
            if requested != Strategy.AUTO:
                raise
            log_event(logger, "resultant_fallback", strategy=Strategy.PROPAGATE.value, dim=m.dim)
            strategy = Strategy.PROPAGATE
    return res_propagate(m), strategy


def res(
    alpha: MultiPoly,
    beta: MultiPoly,
    var: int,
    strategy: Strategy = Strategy.AUTO,
    *,
    leibniz_max_dim: int = LEIBNIZ_MAX_DIM,
    auto_leibniz_max_dim: int = AUTO_LEIBNIZ_MAX_DIM,
    interp_budget_factor: int = INTERP_BUDGET_FACTOR,
    interp_max_extension: int = INTERP_MAX_EXTENSION,
) -> MultiPoly:
    """Res_var(alpha, beta) with the chosen determinant strategy."""
    r, _ = res_resolved(
        alpha,
        beta,
        var,
        strategy,
        leibniz_max_dim=leibniz_max_dim,
        auto_leibniz_max_dim=auto_leibniz_max_dim,
        interp_budget_factor=interp_budget_factor,
        interp_max_extension=interp_max_extension,
    )
    return r


def resultant_dimension(alpha: MultiPoly, beta: MultiPoly, var: int) -> Tuple[int, int, int]:
    """(D, d_alpha, d_beta) without building the matrix."""
    da, db = m_degree_in(alpha, var), m_degree_in(beta, var)
    return da + db, da, db
