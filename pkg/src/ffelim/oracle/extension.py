"""Small extension fields GF(p^d) as residues modulo an irreducible polynomial."""

import logging
import random
from dataclasses import dataclass
from typing import Iterator, Union

from ..config import ENUMERATION_LIMIT, EXT_CANDIDATE_FACTOR
from ..errors import (
    BudgetExhausted,
    ConstantModulus,
    DivisionByZero,
    EnumerationTooLarge,
    NotMonic,
)
from ..field.prime import PrimeModulus
from ..logging import log_event
from ..poly.upoly import UniPoly, u_irreducible, u_powmod, u_xgcd

logger = logging.getLogger("ffelim.oracle")


@dataclass(frozen=True)
class ExtField:
    """GF(p^d) = GF(p)[x] / (modulus_poly).

    Elements are ``UniPoly`` residues of degree < d. The object implements
    the same field-ops protocol as ``PrimeModulus``.
    """

    modulus: PrimeModulus
    d: int
    modulus_poly: UniPoly

    def __post_init__(self) -> None:
        if self.modulus_poly.degree != self.d:
            raise ConstantModulus(
                f"Modulus polynomial has degree {self.modulus_poly.degree}, expected {self.d}"
            )
        if not self.modulus_poly.is_monic():
            raise NotMonic(f"Modulus polynomial {self.modulus_poly} is not monic")
        if not u_irreducible(self.modulus_poly):
            raise ValueError(f"Modulus polynomial {self.modulus_poly} is reducible")

    @property
    def p(self) -> int:
        return self.modulus.p

    def __str__(self) -> str:
        return f"GF({self.p}^{self.d}) mod {self.modulus_poly}"

    @property
    def zero(self) -> UniPoly:
        return UniPoly.zero(self.modulus)

    @property
    def one(self) -> UniPoly:
        return UniPoly.constant(1, self.modulus)

    @property
    def size(self) -> int:
        return self.p**self.d

    @property
    def generator(self) -> UniPoly:
        """The class of x."""
        return UniPoly.monomial(1, self.modulus) % self.modulus_poly

    def embed(self, c: Union[int, UniPoly]) -> UniPoly:
        if isinstance(c, UniPoly):
            return c % self.modulus_poly
        return UniPoly.constant(c, self.modulus)

    def add(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return a + b

    def sub(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return a - b

    def neg(self, a: UniPoly) -> UniPoly:
        return -a

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return (a * b) % self.modulus_poly

    def inv(self, a: UniPoly) -> UniPoly:
        if a.is_zero():
            raise DivisionByZero(f"Zero has no inverse in GF({self.p}^{self.d})")
        _, s, _ = u_xgcd(a, self.modulus_poly)
        return s % self.modulus_poly

    def pow(self, a: UniPoly, e: int) -> UniPoly:
        return u_powmod(a, e, self.modulus_poly)

    def is_zero(self, a: UniPoly) -> bool:
        return a.is_zero()

    def element(self, index: int) -> UniPoly:
        """The element whose coefficients are the base-p digits of ``index``."""
        digits = []
        for _ in range(self.d):
            index, digit = divmod(index, self.p)
            digits.append(digit)
        return UniPoly(tuple(digits), self.modulus)

    def elements(self) -> Iterator[UniPoly]:
        for i in range(self.size):
            yield self.element(i)

    def frobenius(self, a: UniPoly, times: int = 1) -> UniPoly:
        for _ in range(times):
            a = self.pow(a, self.p)
        return a

    def element_degree(self, a: UniPoly) -> int:
        """Degree of the smallest subfield GF(p^e) containing a."""
        image = a
        for e in range(1, self.d + 1):
            image = self.frobenius(image)
            if image == a:
                return e
        return self.d

    def to_base(self, a: UniPoly) -> int:
        """The GF(p) value of a; raises ValueError when a is not in the base field."""
        if a.degree > 0:
            raise ValueError(f"Element {a} does not lie in GF({self.p})")
        return a.coeff(0)


def ext_make(
    p: Union[int, PrimeModulus],
    d: int,
    seed: int = 0,
    limit: int = ENUMERATION_LIMIT,
) -> ExtField:
    """Build GF(p^d) from a random monic irreducible of degree d.

    Args:
        p: Characteristic
        d: Extension degree (>= 1)
        seed: Seed for the candidate search
        limit: Largest allowed field size

    Returns:
        ExtField, deterministic per (p, d, seed)

    Raises:
        EnumerationTooLarge: If p^d exceeds ``limit``
        BudgetExhausted: If no irreducible turns up within 64*d candidates
    """
    modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    if d < 1:
        raise ValueError("Extension degree must be >= 1")
    if modulus.p**d > limit:
        raise EnumerationTooLarge(
            f"GF({modulus.p}^{d}) has more than {limit} elements"
        )

    rng = random.Random(seed)
    budget = EXT_CANDIDATE_FACTOR * d
    for attempt in range(1, budget + 1):
        lower = tuple(rng.randrange(modulus.p) for _ in range(d))
        candidate = UniPoly(lower + (1,), modulus)
        if u_irreducible(candidate):
            log_event(
                logger,
                "extension_built",
                p=modulus.p,
                d=d,
                modulus_poly=candidate,
                attempts=attempt,
            )
            return ExtField(modulus, d, candidate)

    raise BudgetExhausted(
        f"No irreducible of degree {d} over GF({modulus.p}) in {budget} candidates"
    )
