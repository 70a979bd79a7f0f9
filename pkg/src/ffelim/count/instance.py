"""Bivariate counting instances f(t, x) = sum a_i(t) x^i + x^n."""

from dataclasses import dataclass
from typing import List

from ..errors import ArityMismatch, ConditionViolated, NotMonicInX
from ..field.prime import PrimeModulus
from ..poly.mpoly import MultiPoly, m_coeffs_in, m_degree_in, m_lc_in, to_upoly
from ..poly.upoly import UniPoly

T_VAR = 0
X_VAR = 1


@dataclass(frozen=True)
class BivariateInstance:
    """f in GF(p)[t, x] with t = x0 and x = x1, monic in x of degree n >= 1.

    ``strict`` enforces the conventions that every a_i(t) is nonzero and
    exactly one a_i has the maximal degree m.
    """

    f: MultiPoly
    strict: bool = False

    def __post_init__(self) -> None:
        if self.f.arity != 2:
            raise ArityMismatch(f"Counting instances are bivariate, got arity {self.f.arity}")
        if self.f.is_zero() or m_degree_in(self.f, X_VAR) < 1:
            raise NotMonicInX("f must have degree >= 1 in x")
        lc = m_lc_in(self.f, X_VAR)
        if not lc.is_constant():
            raise NotMonicInX(f"Leading coefficient {lc} in x depends on t")
        if lc.constant_value() != 1:
            object.__setattr__(
                self, "f", self.f * self.modulus.inv(lc.constant_value())
            )
        if self.strict:
            self._check_conventions()

    def _check_conventions(self) -> None:
        coeffs = self.coefficients()
        for i, a in enumerate(coeffs):
            if a.is_zero():
                raise ConditionViolated(f"Coefficient a_{i}(t) is zero", i)
        top = [i for i, a in enumerate(coeffs) if a.degree == self.m]
        if len(top) != 1:
            raise ConditionViolated(
                f"{len(top)} coefficients share the maximal t-degree {self.m}", top[-1]
            )

    @property
    def modulus(self) -> PrimeModulus:
        return self.f.modulus

    @property
    def p(self) -> int:
        return self.f.modulus.p

    @property
    def n(self) -> int:
        return m_degree_in(self.f, X_VAR)

    @property
    def m(self) -> int:
        return max([0] + [a.degree for a in self.coefficients()])

    def coefficients(self) -> List[UniPoly]:
        """a_0(t) .. a_{n-1}(t); the monic x^n term is excluded."""
        return [to_upoly(c, T_VAR) for c in m_coeffs_in(self.f, X_VAR)[:-1]]

    @property
    def a0_has_degree_m(self) -> bool:
        return self.coefficients()[0].degree == self.m
