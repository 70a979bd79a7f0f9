"""Sparse integer polynomials satisfying Eisenstein's criterion, reduced mod p."""

import logging
import random
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

from sympy import isprime

from ..errors import BadPrime, EisensteinViolation
from ..field.prime import PrimeModulus
from ..logging import log_event
from ..poly.upoly import UniPoly, u_frobenius_gcd

logger = logging.getLogger("ffelim.instances")

MAX_PI = 2**31
DEFAULT_COEFF_BOUND = 2**20


@dataclass(frozen=True)
class IntegerSparsePoly:
    """Integer polynomial as sorted (exponent, coefficient) pairs, zeros dropped."""

    terms: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_dict(cls, terms: Dict[int, int]) -> "IntegerSparsePoly":
        return cls(tuple(sorted((e, c) for e, c in terms.items() if c)))

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    def coeff(self, e: int) -> int:
        return dict(self.terms).get(e, 0)

    def eisenstein_violation(self, pi: int) -> Optional[str]:
        """Reason the criterion fails at pi, or None when it holds."""
        if self.degree < 1:
            return "degree must be at least 1"
        if self.terms[-1][1] % pi == 0:
            return f"{pi} divides the leading coefficient"
        for e, c in self.terms[:-1]:
            if c % pi:
                return f"{pi} does not divide the coefficient of x^{e}"
        a0 = self.coeff(0)
        if a0 == 0:
            return "constant term is zero"
        if a0 % (pi * pi) == 0:
            return f"{pi}^2 divides the constant term"
        return None

    def satisfies_eisenstein(self, pi: int) -> bool:
        return self.eisenstein_violation(pi) is None

    def reduce_mod(self, modulus: PrimeModulus) -> UniPoly:
        coeffs = [0] * (self.degree + 1)
        for e, c in self.terms:
            coeffs[e] = c
        return UniPoly(tuple(coeffs), modulus)

    def render(self) -> str:
        parts = []
        for e, c in reversed(self.terms):
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class EisensteinInstance:
    over_z: IntegerSparsePoly
    modp: UniPoly
    pi: int
    nonvanishing: bool


def _coprime_multiplier(rng: random.Random, pi: int, bound: int) -> int:
    while True:
        a = rng.randint(1, bound)
        if a % pi:
            return a


def gen_eisenstein_sparse(
    p: Union[int, PrimeModulus],
    pi: int,
    exponents: Sequence[int],
    seed: int = 0,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> EisensteinInstance:
    """a_0 + sum a_k x^(i_k) + x^(i_m) with pi | a_k, pi || a_0.

    ``exponents`` are i_1 < ... < i_m with i_m < p - 1. The mod-p view is
    returned alongside; whether it has a root in GF(p) is measured, not
    promised.

    Raises:
        BadPrime: If pi is not a prime below 2^31 different from p
        EisensteinViolation: If the exponents are not increasing in 1..p-2
    """
    modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    if pi > MAX_PI or not isprime(pi):
        raise BadPrime(f"pi = {pi} is not a prime below 2^31")
    if pi == modulus.p:
        raise BadPrime(f"pi must differ from p = {modulus.p}")

    exps = list(exponents)
    if not exps or exps[0] < 1 or exps[-1] >= modulus.p - 1:
        raise EisensteinViolation(f"Exponents must lie in 1..{modulus.p - 2}, got {exps}")
    if any(a >= b for a, b in zip(exps, exps[1:])):
        raise EisensteinViolation(f"Exponents must be strictly increasing, got {exps}")

    rng = random.Random(seed)
    terms = {0: pi * _coprime_multiplier(rng, pi, coeff_bound)}
    for e in exps[:-1]:
        terms[e] = pi * _coprime_multiplier(rng, pi, coeff_bound)
    terms[exps[-1]] = 1
    over_z = IntegerSparsePoly.from_dict(terms)

    violation = over_z.eisenstein_violation(pi)
    if violation is not None:
        raise EisensteinViolation(violation)

    modp = over_z.reduce_mod(modulus)
    nonvanishing = u_frobenius_gcd(modp, 1).degree == 0
    log_event(
        logger,
        "eisenstein_generated",
        p=modulus.p,
        pi=pi,
        degree=over_z.degree,
        nonvanishing=nonvanishing,
    )
    return EisensteinInstance(over_z=over_z, modp=modp, pi=pi, nonvanishing=nonvanishing)
