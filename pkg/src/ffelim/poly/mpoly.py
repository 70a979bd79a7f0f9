"""Sparse multivariate polynomials over GF(p).

A ``MultiPoly`` maps exponent vectors to nonzero residues. Iteration and
rendering follow graded lexicographic order, highest term first.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from ..config import MAX_EXPONENT
from ..errors import (
    ArityMismatch,
    DivisionByZero,
    ExponentOverflow,
    InexactDivision,
    ModulusMismatch,
)
from ..field.prime import FieldElement, PrimeModulus
from .upoly import UniPoly

Exps = Tuple[int, ...]
Scalar = Union[int, FieldElement]


def glex_key(exps: Exps) -> Tuple[int, Exps]:
    """Sort key for graded lexicographic order (x0 > x1 > ...)."""
    return (sum(exps), exps)


@dataclass(frozen=True, eq=False)
class MultiPoly:
    """Polynomial in ``arity`` variables x0..x(arity-1) with residue coefficients."""

    terms: Mapping[Exps, int]
    arity: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ArityMismatch(f"Arity must be >= 1, got {self.arity}")
        p = self.modulus.p
        clean: Dict[Exps, int] = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.arity:
                raise ArityMismatch(
                    f"Exponent vector {exps} does not match arity {self.arity}"
                )
            for e in exps:
                if e < 0:
                    raise ValueError(f"Negative exponent in {exps}")
                if e > MAX_EXPONENT:
                    raise ExponentOverflow(f"Exponent {e} exceeds 2^31-1")
            c = int(c) % p
            if c:
                clean[exps] = c
        object.__setattr__(self, "terms", clean)

    # Constructors

    @classmethod
    def zero(cls, arity: int, modulus: PrimeModulus) -> "MultiPoly":
        return cls({}, arity, modulus)

    @classmethod
    def constant(cls, c: Scalar, arity: int, modulus: PrimeModulus) -> "MultiPoly":
        return cls({(0,) * arity: int(c)}, arity, modulus)

    @classmethod
    def var(cls, index: int, arity: int, modulus: PrimeModulus, power: int = 1) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ArityMismatch(f"Variable x{index} outside arity {arity}")
        exps = [0] * arity
        exps[index] = power
        return cls({tuple(exps): 1}, arity, modulus)

    # Queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def constant_value(self) -> int:
        """Coefficient of the constant monomial."""
        return self.terms.get((0,) * self.arity, 0)

    def coefficient(self, exps: Exps) -> FieldElement:
        return FieldElement(self.terms.get(tuple(exps), 0), self.modulus)

    def sorted_terms(self) -> List[Tuple[Exps, int]]:
        """Terms from highest to lowest in graded lex order."""
        return sorted(self.terms.items(), key=lambda kv: glex_key(kv[0]), reverse=True)

    def leading_term(self) -> Tuple[Exps, int]:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading term")
        exps = max(self.terms, key=glex_key)
        return exps, self.terms[exps]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def max_degrees(self) -> Tuple[int, ...]:
        """Per-variable maximum exponent (all zeros for a constant, -1s for zero)."""
        if not self.terms:
            return (-1,) * self.arity
        return tuple(max(e[i] for e in self.terms) for i in range(self.arity))

    def variables(self) -> Tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.max_degrees()) if d > 0)

    def __iter__(self) -> Iterator[Tuple[Exps, int]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.modulus == other.modulus
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.modulus.p, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return m_render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({m_render(self)!r}, arity={self.arity}, p={self.modulus.p})"

    # Arithmetic

    def _coerce(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            _check_compatible(self, other)
            return other
        return MultiPoly.constant(other, self.arity, self.modulus)

    def __add__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return m_add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return m_sub(self, self._coerce(other))

    def __rsub__(self, other: int) -> "MultiPoly":
        return m_sub(self._coerce(other), self)

    def __neg__(self) -> "MultiPoly":
        return m_neg(self)

    def __mul__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return m_mul(self, other)
        return m_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        return m_pow(self, e)


def _check_compatible(a: MultiPoly, b: MultiPoly) -> None:
    if a.arity != b.arity:
        raise ArityMismatch(f"Arity {a.arity} does not match arity {b.arity}")
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"Operands live in {a.modulus} and {b.modulus}")


def m_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    _check_compatible(a, b)
    p = a.modulus.p
    out = dict(a.terms)
    for exps, c in b.terms.items():
        v = (out.get(exps, 0) + c) % p
        if v:
            out[exps] = v
        else:
            out.pop(exps, None)
    return MultiPoly(out, a.arity, a.modulus)


def m_neg(a: MultiPoly) -> MultiPoly:
    p = a.modulus.p
    return MultiPoly({e: p - c for e, c in a.terms.items()}, a.arity, a.modulus)


def m_sub(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return m_add(a, m_neg(b))


def m_scale(a: MultiPoly, c: Scalar) -> MultiPoly:
    c = int(c) % a.modulus.p
    return MultiPoly({e: v * c for e, v in a.terms.items()}, a.arity, a.modulus)


def m_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    _check_compatible(a, b)
    p = a.modulus.p
    out: Dict[Exps, int] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            exps = tuple(x + y for x, y in zip(ea, eb))
            out[exps] = (out.get(exps, 0) + ca * cb) % p
    return MultiPoly(out, a.arity, a.modulus)


def m_pow(a: MultiPoly, e: int) -> MultiPoly:
    if e < 0:
        raise ValueError("Exponent must be nonnegative")
    if len(a.terms) == 1:
        # Monomials power in closed form, which keeps x^(2^31-1) cheap
        (exps, c), = a.terms.items()
        return MultiPoly(
            {tuple(x * e for x in exps): pow(c, e, a.modulus.p)}, a.arity, a.modulus
        )
    result = MultiPoly.constant(1, a.arity, a.modulus)
    base = a
    while e:
        if e & 1:
            result = m_mul(result, base)
        e >>= 1
        if e:
            base = m_mul(base, base)
    return result


def m_degree_in(f: MultiPoly, var: int) -> int:
    """Maximum exponent of ``var``; -1 for the zero polynomial."""
    _check_var(f, var)
    return max((e[var] for e in f.terms), default=-1)


def m_term_count(f: MultiPoly) -> int:
    return len(f.terms)


def _check_var(f: MultiPoly, var: int) -> None:
    if not 0 <= var < f.arity:
        raise ArityMismatch(f"Variable x{var} outside arity {f.arity}")


def m_coeffs_in(f: MultiPoly, var: int) -> List[MultiPoly]:
    """Coefficients c_0..c_d with f = sum(c_i * var^i); empty for zero."""
    deg = m_degree_in(f, var)
    buckets: List[Dict[Exps, int]] = [{} for _ in range(deg + 1)]
    for exps, c in f.terms.items():
        i = exps[var]
        rest = exps[:var] + (0,) + exps[var + 1 :]
        buckets[i][rest] = c
    return [MultiPoly(b, f.arity, f.modulus) for b in buckets]


def m_from_coeffs(coeffs: Sequence[MultiPoly], var: int) -> MultiPoly:
    """Inverse of ``m_coeffs_in``: sum(coeffs[i] * var^i)."""
    if not coeffs:
        raise ValueError("At least one coefficient is required")
    arity, modulus = coeffs[0].arity, coeffs[0].modulus
    out: Dict[Exps, int] = {}
    for i, c in enumerate(coeffs):
        for exps, v in c.terms.items():
            shifted = list(exps)
            shifted[var] += i
            out[tuple(shifted)] = v
    return MultiPoly(out, arity, modulus)


def m_lc_in(f: MultiPoly, var: int) -> MultiPoly:
    """Leading coefficient of f viewed as a polynomial in ``var``."""
    coeffs = m_coeffs_in(f, var)
    return coeffs[-1] if coeffs else f


def m_eval_partial(f: MultiPoly, bindings: Mapping[int, Scalar]) -> MultiPoly:
    """Substitute values for some variables; bound exponents become zero."""
    if not bindings:
        return f
    p = f.modulus.p
    values = {}
    for var, v in bindings.items():
        _check_var(f, var)
        if isinstance(v, FieldElement) and v.modulus != f.modulus:
            raise ModulusMismatch(f"Binding for x{var} not in {f.modulus}")
        values[var] = int(v) % p

    out: Dict[Exps, int] = {}
    for exps, c in f.terms.items():
        rest = list(exps)
        for var, v in values.items():
            c = c * pow(v, exps[var], p) % p
            rest[var] = 0
            if not c:
                break
        if c:
            key = tuple(rest)
            out[key] = (out.get(key, 0) + c) % p
    return MultiPoly(out, f.arity, f.modulus)


def m_eval(f: MultiPoly, point: Sequence[int]) -> int:
    """Full evaluation at a point of GF(p)^arity."""
    p = f.modulus.p
    total = 0
    for exps, c in f.terms.items():
        for x, e in zip(point, exps):
            if e:
                c = c * pow(x, e, p) % p
        total += c
    return total % p


def m_exquo(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact quotient a / b by graded lex division.

    Raises:
        DivisionByZero: If b is zero
        InexactDivision: If b does not divide a
    """
    _check_compatible(a, b)
    if b.is_zero():
        raise DivisionByZero("Multivariate division by zero")
    p = a.modulus.p
    lead_b, lc_b = b.leading_term()
    inv_lc = pow(lc_b, -1, p)

    remainder = dict(a.terms)
    quotient: Dict[Exps, int] = {}
    while remainder:
        lead = max(remainder, key=glex_key)
        shift = tuple(x - y for x, y in zip(lead, lead_b))
        if any(s < 0 for s in shift):
            raise InexactDivision("Divisor does not divide dividend")
        c = remainder[lead] * inv_lc % p
        quotient[shift] = c
        for exps, v in b.terms.items():
            key = tuple(x + y for x, y in zip(exps, shift))
            r = (remainder.get(key, 0) - c * v) % p
            if r:
                remainder[key] = r
            else:
                remainder.pop(key, None)
    return MultiPoly(quotient, a.arity, a.modulus)


def to_upoly(f: MultiPoly, var: int) -> UniPoly:
    """View f as a univariate polynomial in ``var``; f must not involve other variables."""
    _check_var(f, var)
    deg = m_degree_in(f, var)
    coeffs = [0] * (deg + 1)
    for exps, c in f.terms.items():
        if any(e for i, e in enumerate(exps) if i != var):
            raise ValueError(f"Polynomial {m_render(f)} involves variables besides x{var}")
        coeffs[exps[var]] = c
    return UniPoly(tuple(coeffs), f.modulus)


def from_upoly(u: UniPoly, var: int, arity: int) -> MultiPoly:
    terms = {}
    for i, c in enumerate(u.coeffs):
        if c:
            exps = [0] * arity
            exps[var] = i
            terms[tuple(exps)] = c
    return MultiPoly(terms, arity, u.modulus)


def _render_monomial(exps: Exps) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def m_render(f: MultiPoly) -> str:
    """Canonical text: graded lex, highest first, e.g. ``3*x0^2*x1 + x1 + 4``."""
    if f.is_zero():
        return "0"
    parts = []
    for exps, c in f.sorted_terms():
        mono = _render_monomial(exps)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)
