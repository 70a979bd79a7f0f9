"""Dense univariate polynomials over GF(p).

``UniPoly`` stores canonical residues indexed by exponent. It is also the
element type of the extension fields built by ``ffelim.oracle.extension``,
so it is immutable and hashable.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import (
    BothZero,
    ConstantModulus,
    DivisionByZero,
    ModulusMismatch,
    NotMonic,
    ZeroPolynomial,
)
from ..field.prime import FieldElement, PrimeModulus
from . import dense


@dataclass(frozen=True)
class UniPoly:
    """Polynomial sum(coeffs[i] * x^i) with trailing zeros stripped."""

    coeffs: Tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        p = self.modulus.p
        reduced = [int(c) % p for c in self.coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        object.__setattr__(self, "coeffs", tuple(reduced))

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> "UniPoly":
        return cls((), modulus)

    @classmethod
    def constant(cls, c: int, modulus: PrimeModulus) -> "UniPoly":
        return cls((c,), modulus)

    @classmethod
    def monomial(cls, e: int, modulus: PrimeModulus, c: int = 1) -> "UniPoly":
        """c * x^e."""
        return cls((0,) * e + (c,), modulus)

    @classmethod
    def from_elements(
        cls, elements: Sequence[FieldElement], modulus: PrimeModulus
    ) -> "UniPoly":
        for e in elements:
            if e.modulus != modulus:
                raise ModulusMismatch(f"Coefficient {e} not in {modulus}")
        return cls(tuple(e.value for e in elements), modulus)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficients(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(c, self.modulus) for c in self.coeffs)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ZeroPolynomial("The zero polynomial has no monic associate")
        if self.lc == 1:
            return self
        return self.scale(self.modulus.inv(self.lc))

    def scale(self, c: int) -> "UniPoly":
        p = self.modulus.p
        return UniPoly(tuple(a * c % p for a in self.coeffs), self.modulus)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly((0,) * k + self.coeffs, self.modulus)

    def eval_int(self, x: int) -> int:
        return dense.horner(self.modulus, self.coeffs, x % self.modulus.p)

    def _coerce(self, other: Union["UniPoly", int]) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly.constant(other, self.modulus)
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"Operands live in {self.modulus} and {other.modulus}")
        return other

    def __add__(self, other: Union["UniPoly", int]) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(tuple(out), self.modulus)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs), self.modulus)

    def __sub__(self, other: Union["UniPoly", int]) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["UniPoly", int]) -> "UniPoly":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.modulus)
        p = self.modulus.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % p
        return UniPoly(tuple(out), self.modulus)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        return u_divmod(self, other)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return u_divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return u_divmod(self, other)[1]

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("Exponent must be nonnegative")
        result = UniPoly.constant(1, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def render(self, var: str = "x") -> str:
        """Descending-degree text, e.g. ``x^2 + 3*x + 1``."""
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mono = var if i == 1 else f"{var}^{i}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class PowStep:
    """One recorded residue of a square-and-multiply run.

    ``kind`` is ``"square"`` for base^(2^index) mod phi and ``"assemble"``
    for the final product. ``round`` counts p-th powerings in a Frobenius
    computation and is 1 for a plain exponentiation.
    """

    kind: str
    index: int
    residue: UniPoly
    round: int = 1


def _same(a: UniPoly, b: UniPoly) -> None:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"Operands live in {a.modulus} and {b.modulus}")


def u_divmod(num: UniPoly, den: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Quotient and remainder with num = den*q + r and deg r < deg den.

    Raises:
        DivisionByZero: If den is the zero polynomial
    """
    _same(num, den)
    if den.is_zero():
        raise DivisionByZero("Polynomial division by zero")

    m = num.modulus
    p = m.p
    dd = den.degree
    if num.degree < dd:
        return UniPoly.zero(m), num

    inv_lc = m.inv(den.lc)
    r = list(num.coeffs)
    q = [0] * (len(r) - dd)
    for k in range(len(r) - 1 - dd, -1, -1):
        c = r[k + dd] * inv_lc % p
        q[k] = c
        if c:
            for j, dc in enumerate(den.coeffs):
                r[k + j] = (r[k + j] - c * dc) % p
    return UniPoly(tuple(q), m), UniPoly(tuple(r[:dd]), m)


def u_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor.

    Raises:
        BothZero: If a and b are both zero
    """
    _same(a, b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, u_divmod(a, b)[1]
    return a.monic()


def u_xgcd(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly, UniPoly]:
    """Extended Euclid: (g, s, t) with s*a + t*b = g and g monic."""
    _same(a, b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    m = a.modulus
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(1, m), UniPoly.zero(m)
    t0, t1 = UniPoly.zero(m), UniPoly.constant(1, m)
    while not r1.is_zero():
        q, r = u_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv_lc = m.inv(r0.lc)
    return r0.scale(inv_lc), s0.scale(inv_lc), t0.scale(inv_lc)


def u_derivative(f: UniPoly) -> UniPoly:
    return UniPoly(tuple(i * c for i, c in enumerate(f.coeffs))[1:], f.modulus)


def _pth_root(g: UniPoly) -> UniPoly:
    """u with g(t) = u(t^p); requires g' = 0 (coefficients are fixed by Frobenius)."""
    return UniPoly(g.coeffs[:: g.modulus.p], g.modulus)


def u_squarefree_part(g: UniPoly) -> UniPoly:
    """Monic squarefree polynomial with the same roots as g.

    When g' vanishes, g(t) = u(t^p) = u(t)^p over GF(p), so the radical
    of g is the radical of u.

    Raises:
        ZeroPolynomial: If g is zero
    """
    if g.is_zero():
        raise ZeroPolynomial("Squarefree part of the zero polynomial")
    g = g.monic()
    if g.degree <= 0:
        return g

    dg = u_derivative(g)
    if dg.is_zero():
        return u_squarefree_part(_pth_root(g))

    c = u_gcd(g, dg)
    w = u_divmod(g, c)[0]
    # w carries every root whose multiplicity is prime to p; strip them
    # from c so that only roots of p-divisible multiplicity remain.
    while True:
        y = u_gcd(c, w)
        if y.degree <= 0:
            break
        c = u_divmod(c, y)[0]
    if c.degree > 0:
        w = w * u_squarefree_part(_pth_root(c))
    return w.monic()


def u_powmod(
    base: UniPoly,
    e: int,
    modulus_poly: UniPoly,
    transcript: Optional[List[PowStep]] = None,
    round_index: int = 1,
) -> UniPoly:
    """base^e mod modulus_poly by right-to-left square-and-multiply.

    Squarings base^(2^i) for i = 1..floor(log2 e) are appended to the
    transcript, followed by the assembled result.
    """
    _same(base, modulus_poly)
    if modulus_poly.degree < 1:
        raise ConstantModulus("Reduction modulus must have degree >= 1")
    if e < 0:
        raise ValueError("Exponent must be nonnegative")

    m = base.modulus
    result = UniPoly.constant(1, m)
    square = base % modulus_poly
    i = 0
    while e:
        if e & 1:
            result = (result * square) % modulus_poly
        e >>= 1
        if not e:
            break
        square = (square * square) % modulus_poly
        i += 1
        if transcript is not None:
            transcript.append(PowStep("square", i, square, round_index))

    if transcript is not None:
        transcript.append(PowStep("assemble", i, result, round_index))
    return result


def u_modpow_frobenius(
    modulus_poly: UniPoly, d: int, transcript: Optional[List[PowStep]] = None
) -> UniPoly:
    """x^(p^d) mod modulus_poly via d rounds of p-th powering.

    Raises:
        ConstantModulus: If deg modulus_poly < 1
    """
    if modulus_poly.degree < 1:
        raise ConstantModulus("Frobenius modulus must have degree >= 1")
    if d < 1:
        raise ValueError("Frobenius power d must be >= 1")

    m = modulus_poly.modulus
    r = UniPoly.monomial(1, m) % modulus_poly
    for k in range(1, d + 1):
        r = u_powmod(r, m.p, modulus_poly, transcript, round_index=k)
    return r


def u_frobenius_gcd(f: UniPoly, d: int = 1) -> UniPoly:
    """gcd(f, x^(p^d) - x): the product of distinct roots of f in GF(p^d)."""
    if f.is_zero():
        raise ZeroPolynomial("Frobenius gcd of the zero polynomial")
    if f.degree == 0:
        return UniPoly.constant(1, f.modulus)
    xpd = u_modpow_frobenius(f, d)
    return u_gcd(f, xpd - UniPoly.monomial(1, f.modulus))


def u_resultant(f: UniPoly, g: UniPoly) -> FieldElement:
    """Determinant of the Sylvester matrix of f and g.

    Two constants give the empty determinant 1.

    Raises:
        ZeroPolynomial: If either argument is zero
    """
    _same(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("Resultant with the zero polynomial")
    m = f.modulus
    rows = dense.sylvester_rows(m, f.coeffs, g.coeffs)
    return FieldElement(dense.determinant(m, rows), m)


def u_eval(f: UniPoly, x0: FieldElement) -> FieldElement:
    if x0.modulus != f.modulus:
        raise ModulusMismatch(f"Point {x0} not in {f.modulus}")
    return FieldElement(f.eval_int(x0.value), f.modulus)


def u_interpolate(points: Sequence[Tuple[FieldElement, FieldElement]]) -> UniPoly:
    """Unique polynomial of degree < len(points) through the points.

    Raises:
        DuplicateAbscissa: If two points share an abscissa
    """
    if not points:
        raise ValueError("At least one point is required")
    m = points[0][0].modulus
    for x, y in points:
        if x.modulus != m or y.modulus != m:
            raise ModulusMismatch("Interpolation points live in different fields")
    xs = [x.value for x, _ in points]
    ys = [y.value for _, y in points]
    return UniPoly(tuple(dense.interpolate(m, xs, ys)), m)


def u_irreducible(f: UniPoly) -> bool:
    """Irreducibility over GF(p) by gcd(f, x^(p^k) - x) = 1 for k <= deg/2.

    Raises:
        ConstantModulus: If deg f < 1
        NotMonic: If f is not monic
    """
    if f.degree < 1:
        raise ConstantModulus("Irreducibility needs degree >= 1")
    if not f.is_monic():
        raise NotMonic(f"Polynomial {f} is not monic")

    m = f.modulus
    x = UniPoly.monomial(1, m)
    r = x % f
    for _ in range(1, f.degree // 2 + 1):
        r = u_powmod(r, m.p, f)
        if u_gcd(f, r - x).degree > 0:
            return False
    return True
