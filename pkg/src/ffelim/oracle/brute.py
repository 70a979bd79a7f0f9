"""Exhaustive enumeration over GF(p), GF(p)^n and small extensions."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from ..config import ENUMERATION_LIMIT
from ..errors import ArityMismatch, EnumerationTooLarge, ModulusMismatch
from ..field.prime import FieldOps, PrimeModulus
from ..logging import log_event
from ..poly import dense
from ..poly.mpoly import MultiPoly, m_coeffs_in, to_upoly
from ..poly.upoly import UniPoly
from .extension import ExtField, ext_make

logger = logging.getLogger("ffelim.oracle")

Point = Tuple[int, ...]
Element = Union[int, UniPoly]


@dataclass
class BruteCount:
    """Ground-truth counts of t-values admitting a root x in GF(p).

    ``witnesses`` pairs each counted t (an int for GF(p), a residue
    polynomial for extensions) with its smallest root x.
    """

    distinct_t: int = 0
    cumulative: Dict[int, int] = field(default_factory=dict)
    exact: Dict[int, int] = field(default_factory=dict)
    witnesses: List[Tuple[int, Element, int]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "distinct_t": self.distinct_t,
            "cumulative": {str(d): c for d, c in sorted(self.cumulative.items())},
            "exact": {str(d): e for d, e in sorted(self.exact.items())},
            "witnesses": [
                {"degree": d, "t": _render_element(t), "x": x} for d, t, x in self.witnesses
            ],
        }


@dataclass(frozen=True)
class CommonRoot:
    degree: int
    element: Element
    field: Union[PrimeModulus, ExtField]


def _render_element(e: Element) -> str:
    return e.render("a") if isinstance(e, UniPoly) else str(e)


def _field_for(modulus: PrimeModulus, d: int, seed: int, limit: int) -> FieldOps:
    if d == 1:
        return modulus
    return ext_make(modulus, d, seed=seed, limit=limit)


def _elements_of_degree(fld: FieldOps, d: int):
    """Elements whose minimal subfield is GF(p^d)."""
    if isinstance(fld, ExtField):
        for e in fld.elements():
            if fld.element_degree(e) == d:
                yield e
    else:
        yield from range(fld.size)


def _as_vector(fld: FieldOps, value: Element, d: int) -> List[int]:
    if isinstance(fld, ExtField):
        return [value.coeff(i) for i in range(d)]
    return [value]


def _guard(p: int, d: int, limit: int) -> None:
    if p**d > limit:
        raise EnumerationTooLarge(f"{p}^{d} points exceed the enumeration limit {limit}")


def brute_bivariate_roots(
    f: MultiPoly,
    dmax: int,
    seed: int = 0,
    limit: int = ENUMERATION_LIMIT,
) -> BruteCount:
    """Count t in GF(p^d), d <= dmax, such that f(t, x) = 0 for some x in GF(p).

    Each t is attributed to the degree of its minimal subfield. For a given
    t the coefficients of f in x are vectors over GF(p), so all p choices
    of x are tested at once with numpy.

    Raises:
        EnumerationTooLarge: If p^dmax exceeds ``limit``
    """
    if f.arity != 2:
        raise ArityMismatch(f"Bivariate enumeration needs arity 2, got {f.arity}")
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    modulus = f.modulus
    p = modulus.p
    _guard(p, dmax, limit)

    a_coeffs = [list(to_upoly(c, 0).coeffs) for c in m_coeffs_in(f, 1)]
    xs = np.arange(p, dtype=np.int64)
    x_powers = [np.ones(p, dtype=np.int64)]
    for _ in range(1, len(a_coeffs)):
        x_powers.append(x_powers[-1] * xs % p)

    result = BruteCount()
    for d in range(1, dmax + 1):
        fld = _field_for(modulus, d, seed, limit)
        lifted_coeffs = [[fld.embed(c) for c in coeffs] for coeffs in a_coeffs]
        count = 0
        for t in _elements_of_degree(fld, d):
            values = np.zeros((p, d), dtype=np.int64)
            for i, lifted in enumerate(lifted_coeffs):
                a_t = np.array(_as_vector(fld, dense.horner(fld, lifted, t), d), dtype=np.int64)
                values = (values + np.outer(x_powers[i], a_t)) % p
            roots = np.flatnonzero(~values.any(axis=1))
            if roots.size:
                count += 1
                result.witnesses.append((d, t, int(roots[0])))
        result.exact[d] = count
        result.cumulative[d] = sum(result.exact[e] for e in range(1, d + 1) if d % e == 0)

    result.distinct_t = sum(result.exact.values())
    log_event(logger, "brute_bivariate", p=p, dmax=dmax, exact=result.exact)
    return result


def brute_common_root(
    alpha: UniPoly,
    beta: UniPoly,
    kmax: int,
    seed: int = 0,
    limit: int = ENUMERATION_LIMIT,
) -> Optional[CommonRoot]:
    """A common root of smallest extension degree k <= kmax, or None.

    Raises:
        EnumerationTooLarge: If p^kmax exceeds ``limit``
    """
    if alpha.modulus != beta.modulus:
        raise ModulusMismatch(f"Operands live in {alpha.modulus} and {beta.modulus}")
    modulus = alpha.modulus
    _guard(modulus.p, kmax, limit)

    for k in range(1, kmax + 1):
        fld = _field_for(modulus, k, seed, limit)
        a = [fld.embed(c) for c in alpha.coeffs]
        b = [fld.embed(c) for c in beta.coeffs]
        for e in _elements_of_degree(fld, k):
            if fld.is_zero(dense.horner(fld, a, e)) and fld.is_zero(dense.horner(fld, b, e)):
                return CommonRoot(k, e, fld)
    return None


def _power_table(p: int, e: int) -> np.ndarray:
    return np.array([pow(x, e, p) for x in range(p)], dtype=np.int64)


def brute_system_zeros(
    system: Sequence[MultiPoly],
    p: Optional[Union[int, PrimeModulus]] = None,
    arity: Optional[int] = None,
    limit: int = ENUMERATION_LIMIT,
) -> Set[Point]:
    """All common zeros of the system in GF(p)^n.

    ``p`` and ``arity`` default to the system's own and are required for an
    empty system, whose zero set is every point.

    Raises:
        EnumerationTooLarge: If p^n exceeds ``limit``
    """
    if system:
        modulus = system[0].modulus
        n = system[0].arity
        for f in system:
            if f.modulus != modulus:
                raise ModulusMismatch(f"System mixes {modulus} and {f.modulus}")
            if f.arity != n:
                raise ArityMismatch(f"System mixes arity {n} and {f.arity}")
    else:
        if p is None or arity is None:
            raise ValueError("An empty system needs explicit p and arity")
        modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
        n = arity
    q = modulus.p
    _guard(q, n, limit)

    # Every point of GF(q)^n, last coordinate varying fastest
    grid = np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(-1, n)
    alive = np.ones(len(grid), dtype=bool)
    tables: Dict[int, np.ndarray] = {}

    for f in system:
        values = np.zeros(len(grid), dtype=np.int64)
        for exps, c in f.terms.items():
            term = np.full(len(grid), c, dtype=np.int64)
            for var, e in enumerate(exps):
                if e:
                    if e not in tables:
                        tables[e] = _power_table(q, e)
                    term = term * tables[e][grid[:, var]] % q
            values = (values + term) % q
        alive &= values == 0

    zeros = {tuple(int(v) for v in row) for row in grid[alive]}
    log_event(logger, "brute_system", p=q, arity=n, equations=len(system), zeros=len(zeros))
    return zeros
