"""Counting t-values with GF(p)-rational x-roots, and the no-zero decision."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from sympy import factorint

from ..config import DECIDE_MAX_P, PRODUCT_ROUTE_MAX_P, SYLVESTER_ROUTE_MAX_DIM
from ..errors import DegenerateInstance, DegreeBoundExceeded, DimensionTooLarge, FieldTooLarge
from ..logging import log_event
from ..poly.mpoly import MultiPoly, m_eval_partial, to_upoly
from ..poly.upoly import UniPoly, u_frobenius_gcd, u_squarefree_part
from ..resultant.strategies import res_propagate
from ..resultant.sylvester import sylvester_build
from ..types import DerivationKind, Route
from .derivation import Derivation, emit_gcd_derivation
from .instance import T_VAR, X_VAR, BivariateInstance

logger = logging.getLogger("ffelim.count")

SCHEMA_VERSION = "1"


@dataclass
class CountReport:
    """g(t), its squarefree part and the per-degree counts C_d, E_d."""

    p: int
    n: int
    m: int
    g: UniPoly
    squarefree: UniPoly
    cumulative: Dict[int, int] = field(default_factory=dict)
    exact: Dict[int, int] = field(default_factory=dict)
    transcript: Optional[Derivation] = None

    @property
    def distinct_t(self) -> int:
        return self.squarefree.degree

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "deg_g": self.g.degree,
            "distinct_t": self.distinct_t,
            "cumulative": {str(d): c for d, c in sorted(self.cumulative.items())},
            "exact": {str(d): e for d, e in sorted(self.exact.items())},
            "transcript_len": len(self.transcript.steps) if self.transcript else 0,
        }
        if self.transcript is not None:
            out["transcript"] = self.transcript.to_dict(var="t")
        return out


@dataclass
class DecisionReport:
    """Answer to "f(t, x) != 0 for all t, x in GF(p)" with its derivation."""

    p: int
    no_zero: bool
    g: Optional[UniPoly]
    transcript: Optional[Derivation] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "p": self.p,
            "no_zero": self.no_zero,
            "deg_g": self.g.degree if self.g is not None else -1,
            "transcript_len": len(self.transcript.steps) if self.transcript else 0,
        }
        if self.transcript is not None:
            out["gcd"] = self.transcript.gcd.render("t")
            out["transcript"] = self.transcript.to_dict(var="t")
        return out


def moebius(k: int) -> int:
    """Moebius function mu(k) for k >= 1."""
    if k < 1:
        raise ValueError(f"Moebius function needs k >= 1, got {k}")
    exponents = factorint(k).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def _product_route(inst: BivariateInstance, max_p: int) -> UniPoly:
    if inst.p > max_p:
        raise FieldTooLarge(f"Product route limited to p <= {max_p}, got p = {inst.p}")
    g = UniPoly.constant(1, inst.modulus)
    for c in range(inst.p):
        g = g * to_upoly(m_eval_partial(inst.f, {X_VAR: c}), T_VAR)
        if g.is_zero():
            break
    # Res_x(f, x^p - x) = (-1)^(n p) prod_c f(t, c)
    if (inst.n * inst.p) % 2:
        g = -g
    return g


def _sylvester_route(inst: BivariateInstance, max_dim: int) -> UniPoly:
    dim = inst.p + inst.n
    if dim > max_dim:
        raise DimensionTooLarge(
            f"Sylvester route limited to p + n <= {max_dim}, got {dim}"
        )
    x = MultiPoly.var(X_VAR, 2, inst.modulus)
    frobenius_poly = x**inst.p - x
    return to_upoly(res_propagate(sylvester_build(inst.f, frobenius_poly, X_VAR)), T_VAR)


def build_g(
    inst: BivariateInstance,
    route: Route = Route.PRODUCT,
    *,
    product_route_max_p: int = PRODUCT_ROUTE_MAX_P,
    sylvester_route_max_dim: int = SYLVESTER_ROUTE_MAX_DIM,
) -> UniPoly:
    """g(t) = Res_x(f(t, x), x^p - x).

    Raises:
        DimensionTooLarge: Sylvester route with p + n above the guard
        FieldTooLarge: Product route with p above the guard
        DegenerateInstance: If g vanishes identically
    """
    route = Route(route)
    if route == Route.SYLVESTER:
        g = _sylvester_route(inst, sylvester_route_max_dim)
    else:
        g = _product_route(inst, product_route_max_p)

    log_event(logger, "g_built", route=route.value, p=inst.p, n=inst.n, m=inst.m, deg_g=g.degree)
    if g.is_zero():
        raise DegenerateInstance(
            "g(t) vanishes identically: some x in GF(p) is a root of f for every t"
        )
    return g


def count_distinct_t(
    inst: BivariateInstance, route: Route = Route.PRODUCT, **limits: Any
) -> CountReport:
    """Number of distinct t (in the algebraic closure) with a root x in GF(p)."""
    g = build_g(inst, route, **limits)
    h = u_squarefree_part(g)
    return CountReport(p=inst.p, n=inst.n, m=inst.m, g=g, squarefree=h)


def exact_from_cumulative(cumulative: Dict[int, int]) -> Dict[int, int]:
    """E_d = sum over e | d of mu(d / e) * C_e."""
    return {
        d: sum(moebius(d // e) * cumulative[e] for e in range(1, d + 1) if d % e == 0)
        for d in sorted(cumulative)
    }


def per_degree_counts(
    inst: BivariateInstance,
    dmax: int,
    route: Route = Route.PRODUCT,
    transcript: bool = False,
    **limits: Any,
) -> CountReport:
    """Counts C_d of t-values in GF(p^d) and E_d of exact degree d, d <= dmax.

    Raises:
        DegreeBoundExceeded: If dmax is outside 1..max(m, 1)
    """
    bound = max(inst.m, 1)
    if not 1 <= dmax <= bound:
        raise DegreeBoundExceeded(f"dmax must be in 1..{bound}, got {dmax}")

    report = count_distinct_t(inst, route, **limits)
    h = report.squarefree
    for d in range(1, dmax + 1):
        report.cumulative[d] = u_frobenius_gcd(h, d).degree
    report.exact = exact_from_cumulative(report.cumulative)

    if transcript and h.degree >= 1:
        report.transcript = emit_gcd_derivation(h, DerivationKind.FROBENIUS_GCD)

    log_event(
        logger,
        "counts_computed",
        p=inst.p,
        dmax=dmax,
        distinct_t=report.distinct_t,
        cumulative=report.cumulative,
    )
    return report


def decide_no_zero(
    inst: BivariateInstance,
    route: Route = Route.PRODUCT,
    decide_max_p: int = DECIDE_MAX_P,
    **limits: Any,
) -> DecisionReport:
    """True iff f(t, x) != 0 for every (t, x) in GF(p)^2.

    Step one builds g = Res_x(f, x^p - x); step two tests whether
    gcd(g, t^p - t) is constant, recorded as a derivation.

    Raises:
        FieldTooLarge: If p exceeds ``decide_max_p``
    """
    if inst.p > decide_max_p:
        raise FieldTooLarge(f"Decision limited to p <= {decide_max_p}, got p = {inst.p}")

    try:
        g = build_g(inst, route, **limits)
    except DegenerateInstance:
        # f(t, c) = 0 for every t, so every t gives a zero
        log_event(logger, "decision", p=inst.p, no_zero=False, reason="g vanishes")
        return DecisionReport(p=inst.p, no_zero=False, g=None)

    if g.degree < 1:
        return DecisionReport(p=inst.p, no_zero=True, g=g)

    derivation = emit_gcd_derivation(g, DerivationKind.FROBENIUS_GCD)
    answer = derivation.gcd.degree == 0
    log_event(logger, "decision", p=inst.p, no_zero=answer, deg_g=g.degree)
    return DecisionReport(p=inst.p, no_zero=answer, g=g, transcript=derivation)
