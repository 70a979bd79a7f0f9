"""Fraction-free Euclidean comparator for parametric gcds."""

import logging
import time
from typing import Optional, Tuple

from ..errors import ArityMismatch, ModulusMismatch, ZeroDivisor
from ..logging import log_event
from ..poly.mpoly import MultiPoly, m_degree_in, m_lc_in
from .termlog import TermGrowthLog

logger = logging.getLogger("ffelim.eliminate")

EEA_METHOD = "eea-expansion"


def m_prem(a: MultiPoly, b: MultiPoly, var: int) -> MultiPoly:
    """Pseudo-remainder r with lc(b)^(deg a - deg b + 1) * a = q*b + r in ``var``.

    Returns a unchanged when deg a < deg b.
    """
    if b.is_zero():
        raise ZeroDivisor("Pseudo-division by the zero polynomial")
    db = m_degree_in(b, var)
    da = m_degree_in(a, var)
    if da < db:
        return a

    lb = m_lc_in(b, var)
    r = a
    e = da - db + 1
    while not r.is_zero() and m_degree_in(r, var) >= db:
        shift = MultiPoly.var(var, a.arity, a.modulus, m_degree_in(r, var) - db)
        r = lb * r - m_lc_in(r, var) * shift * b
        e -= 1
    return lb**e * r


def eea_parametric_gcd(
    alpha: MultiPoly,
    beta: MultiPoly,
    var: int,
    log: Optional[TermGrowthLog] = None,
    trial: int = 0,
    record_timing: bool = False,
) -> Tuple[MultiPoly, TermGrowthLog]:
    """Last nonzero pseudo-remainder of alpha and beta in ``var``.

    Arguments are swapped when deg alpha < deg beta. Each remainder is
    logged with the ``eea-expansion`` tag.

    Returns:
        (gcd-like polynomial, log)

    Raises:
        ZeroDivisor: If beta is zero
    """
    if alpha.arity != beta.arity:
        raise ArityMismatch(f"Arity {alpha.arity} does not match arity {beta.arity}")
    if alpha.modulus != beta.modulus:
        raise ModulusMismatch(f"Operands live in {alpha.modulus} and {beta.modulus}")
    if beta.is_zero():
        raise ZeroDivisor("Euclidean sequence needs a nonzero divisor")
    if log is None:
        log = TermGrowthLog()

    a, b = alpha, beta
    if not a.is_zero() and m_degree_in(a, var) < m_degree_in(b, var):
        a, b = b, a

    step = 0
    while True:
        started = time.perf_counter_ns() if record_timing else 0
        r = m_prem(a, b, var)
        micros = (time.perf_counter_ns() - started) // 1000 if record_timing else 0
        log.record(step, EEA_METHOD, var, r, micros=micros, trial=trial)
        step += 1
        if r.is_zero():
            log_event(logger, "eea_finished", var=var, steps=step, terms=len(b))
            return b, log
        a, b = b, r
