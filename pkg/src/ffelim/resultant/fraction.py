"""Fractions of multivariate polynomials over GF(p)."""

from dataclasses import dataclass
from typing import Dict, Union

from ..errors import DivisionByZero, InexactDivision
from ..poly.mpoly import Exps, MultiPoly, m_exquo


def _monomial_content(f: MultiPoly) -> Exps:
    return tuple(min(e[i] for e in f.terms) for i in range(f.arity))


def _divide_monomial(f: MultiPoly, mono: Exps) -> MultiPoly:
    terms: Dict[Exps, int] = {
        tuple(x - y for x, y in zip(e, mono)): c for e, c in f.terms.items()
    }
    return MultiPoly(terms, f.arity, f.modulus)


@dataclass(frozen=True, eq=False)
class PolyFraction:
    """num / den with den nonzero.

    Reduction only removes common monomial content, normalizes the
    denominator's leading coefficient to 1 and collapses exact quotients.
    No multivariate gcd is taken, so equal fractions may differ in form;
    compare with ``==``, which cross-multiplies.
    """

    num: MultiPoly
    den: MultiPoly

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise DivisionByZero("Fraction with zero denominator")

    @classmethod
    def of(cls, f: MultiPoly) -> "PolyFraction":
        return cls(f, MultiPoly.constant(1, f.arity, f.modulus))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> MultiPoly:
        """The fraction as a polynomial; raises InexactDivision if it is not one."""
        return m_exquo(self.num, self.den)

    def reduce(self) -> "PolyFraction":
        num, den = self.num, self.den
        if num.is_zero():
            return PolyFraction(num, MultiPoly.constant(1, den.arity, den.modulus))

        content = tuple(
            min(a, b) for a, b in zip(_monomial_content(num), _monomial_content(den))
        )
        if any(content):
            num = _divide_monomial(num, content)
            den = _divide_monomial(den, content)

        try:
            quotient = m_exquo(num, den)
            return PolyFraction(quotient, MultiPoly.constant(1, den.arity, den.modulus))
        except InexactDivision:
            pass

        lc = den.leading_term()[1]
        if lc != 1:
            inv = den.modulus.inv(lc)
            num, den = num * inv, den * inv
        return PolyFraction(num, den)

    def __add__(self, other: Union["PolyFraction", MultiPoly]) -> "PolyFraction":
        other = _lift(other)
        if self.den == other.den:
            return PolyFraction(self.num + other.num, self.den).reduce()
        return PolyFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        ).reduce()

    def __neg__(self) -> "PolyFraction":
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other: Union["PolyFraction", MultiPoly]) -> "PolyFraction":
        return self + (-_lift(other))

    def __mul__(self, other: Union["PolyFraction", MultiPoly]) -> "PolyFraction":
        other = _lift(other)
        return PolyFraction(self.num * other.num, self.den * other.den).reduce()

    def inverse(self) -> "PolyFraction":
        if self.num.is_zero():
            raise DivisionByZero("Zero fraction has no inverse")
        return PolyFraction(self.den, self.num).reduce()

    def __truediv__(self, other: Union["PolyFraction", MultiPoly]) -> "PolyFraction":
        return self * _lift(other).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            other = PolyFraction.of(other)
        if not isinstance(other, PolyFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if self.den == MultiPoly.constant(1, self.den.arity, self.den.modulus):
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _lift(value: Union[PolyFraction, MultiPoly]) -> PolyFraction:
    if isinstance(value, MultiPoly):
        return PolyFraction.of(value)
    return value
