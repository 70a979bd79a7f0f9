"""Sparse univariate instances that never vanish on GF(p), and their deciders."""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Sequence, Tuple

from ..errors import ConditionViolated, MathDomainError, NotCoprime, NotDivisor, PreconditionGcd, ZeroPolynomial
from ..field.prime import PrimeModulus
from ..logging import log_event
from ..count.derivation import emit_gcd_derivation
from ..poly.upoly import UniPoly, u_frobenius_gcd, u_gcd, u_powmod

logger = logging.getLogger("ffelim.instances")


def reduce_exponent(e: int, p: int) -> int:
    """Exponent with x^e = x^reduced on all of GF(p), using x^(p-1) = 1 off zero.

    Positive exponents map into 1..p-1 so that x = 0 still evaluates to 0.
    """
    if e == 0:
        return 0
    return (e - 1) % (p - 1) + 1


def _from_sparse(terms: Dict[int, int], modulus: PrimeModulus) -> UniPoly:
    size = max(terms, default=-1) + 1
    coeffs = [0] * size
    for e, c in terms.items():
        coeffs[e] = c
    return UniPoly(tuple(coeffs), modulus)


@dataclass(frozen=True)
class SparseFactor:
    """gamma * x^r - delta."""

    gamma: int
    delta: int
    r: int


@dataclass(frozen=True)
class SparsePolySpec:
    modulus: PrimeModulus
    factors: Tuple[SparseFactor, ...]

    @property
    def kappa(self) -> int:
        return len(self.factors)

    def validate(self) -> None:
        """Check every factor's non-residue condition.

        Raises:
            ConditionViolated: Naming the first failing factor (0-based)
        """
        p = self.modulus.p
        if not self.factors:
            raise ConditionViolated("At least one factor is required", 0)
        for i, fac in enumerate(self.factors):
            label = f"factor {i} (gamma={fac.gamma}, delta={fac.delta}, r={fac.r})"
            if fac.gamma % p == 0 or fac.delta % p == 0:
                raise ConditionViolated(f"{label}: gamma and delta must be nonzero", i)
            if fac.r < 1:
                raise ConditionViolated(f"{label}: r must be positive", i)
            g = gcd(fac.r, p - 1)
            if g <= 1:
                raise ConditionViolated(f"{label}: gcd(r, p-1) = 1", i)
            ratio = fac.delta * pow(fac.gamma, -1, p) % p
            if pow(ratio, (p - 1) // g, p) == 1:
                raise ConditionViolated(
                    f"{label}: delta/gamma is an r-th power residue", i
                )


def gen_nonresidue_product(spec: SparsePolySpec) -> UniPoly:
    """Expand prod(gamma_i x^r_i - delta_i) with exponents reduced mod p-1.

    Raises:
        ConditionViolated: If a factor fails the acceptance condition
    """
    spec.validate()
    p = spec.modulus.p
    terms: Dict[int, int] = {0: 1}
    for fac in spec.factors:
        r = reduce_exponent(fac.r, p)
        product: Dict[int, int] = {}
        for e, c in terms.items():
            for fe, fc in ((r, fac.gamma), (0, -fac.delta)):
                key = reduce_exponent(e + fe, p)
                product[key] = (product.get(key, 0) + c * fc) % p
        terms = {e: c for e, c in product.items() if c}

    f = _from_sparse(terms, spec.modulus)
    if f.eval_int(0) == 0:
        raise MathDomainError("Reduced product vanishes at x = 0")
    log_event(logger, "nonresidue_product", p=p, kappa=spec.kappa, degree=f.degree, terms=len(terms))
    return f


def gen_substitution(h: UniPoly, r: int) -> UniPoly:
    """h(x^r) with exponents reduced mod p-1.

    Raises:
        NotCoprime: If gcd(r, p-1) != 1
        ZeroPolynomial: If h is zero
        PreconditionGcd: If h has a root in GF(p)
    """
    p = h.modulus.p
    if r < 1 or gcd(r, p - 1) != 1:
        raise NotCoprime(f"r = {r} is not coprime to p-1 = {p - 1}")
    if h.is_zero():
        raise ZeroPolynomial("Substitution into the zero polynomial")
    if h.degree >= 1 and u_frobenius_gcd(h, 1).degree > 0:
        raise PreconditionGcd(f"h = {h.render('t')} has a root in GF({p})")

    terms: Dict[int, int] = {}
    for i, c in enumerate(h.coeffs):
        if c:
            key = reduce_exponent(i * r, p)
            terms[key] = (terms.get(key, 0) + c) % p
    return _from_sparse(terms, h.modulus)


def decide_pair_nonvanishing(f: UniPoly, g: UniPoly) -> bool:
    """True iff f and g share no root in GF(p).

    Raises:
        ZeroPolynomial: If f or g is zero
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("Nonvanishing decision needs nonzero polynomials")
    common = u_gcd(f, g)
    if common.degree < 1:
        return True
    return u_frobenius_gcd(common, 1).degree == 0


def check_nonvanishing(f: UniPoly, nu: int) -> bool:
    """True iff gcd(f, x^nu - 1) is constant (no root of order dividing nu).

    Raises:
        NotDivisor: If nu does not divide p-1
    """
    p = f.modulus.p
    if nu < 1 or (p - 1) % nu:
        raise NotDivisor(f"nu = {nu} does not divide p-1 = {p - 1}")
    if f.is_zero():
        raise ZeroPolynomial("Nonvanishing check of the zero polynomial")
    if f.degree < 1:
        return True
    x_nu = u_powmod(UniPoly.monomial(1, f.modulus), nu, f)
    return u_gcd(f, x_nu - 1).degree == 0


@dataclass(frozen=True)
class TranscriptSize:
    degree: int
    steps: int
    size: int
    squaring_size: int


def transcript_sizes(instances: Sequence[UniPoly]) -> List[TranscriptSize]:
    """Derivation sizes of gcd(f, x^p - x) for each instance, in input order."""
    sizes = []
    for f in instances:
        derivation = emit_gcd_derivation(f)
        sizes.append(
            TranscriptSize(
                degree=f.degree,
                steps=len(derivation.steps),
                size=derivation.size,
                squaring_size=derivation.squaring_size,
            )
        )
    return sizes
