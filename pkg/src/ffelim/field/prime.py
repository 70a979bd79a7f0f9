"""Exact arithmetic in the prime field GF(p)."""

import random
from dataclasses import dataclass
from typing import Any, Protocol

from sympy import isprime

from ..config import MAX_PRIME
from ..errors import DivisionByZero, ModulusMismatch, NotPrime


class FieldOps(Protocol):
    """Element-level operations shared by GF(p) and its extensions.

    Dense algorithms in ``ffelim.poly.dense`` are written against this
    protocol so they run unchanged over base and extension fields.
    """

    @property
    def zero(self) -> Any: ...

    @property
    def one(self) -> Any: ...

    @property
    def size(self) -> int: ...

    def embed(self, c: int) -> Any: ...

    def add(self, a: Any, b: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any: ...

    def neg(self, a: Any) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def inv(self, a: Any) -> Any: ...

    def pow(self, a: Any, e: int) -> Any: ...

    def is_zero(self, a: Any) -> bool: ...


@dataclass(frozen=True)
class PrimeModulus:
    """The prime p of GF(p), checked at construction.

    Also acts as the field-ops object for GF(p), with elements represented
    as canonical residues (plain ints in [0, p-1]).
    """

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotPrime(f"Modulus must be an integer, got {self.p!r}")
        if not 2 <= self.p <= MAX_PRIME:
            raise NotPrime(f"Modulus {self.p} outside supported range 2..2^61")
        # Deterministic for p < 2^64
        if not isprime(self.p):
            raise NotPrime(f"Modulus {self.p} is not prime")

    def __str__(self) -> str:
        return f"GF({self.p})"

    def element(self, value: int) -> "FieldElement":
        """Wrap an integer as a field element, reducing mod p."""
        return FieldElement(value % self.p, self)

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(rng.randrange(self.p), self)

    # Field-ops protocol over canonical residues

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def size(self) -> int:
        return self.p

    def embed(self, c: int) -> int:
        return c % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero(f"Zero has no inverse in GF({self.p})")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        # Python's three-argument pow is square-and-multiply; 0^0 = 1
        return pow(a, e, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p) in canonical least-nonnegative form."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(
                f"Residue {self.value} not canonical for modulus {self.modulus.p}"
            )

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return ff_add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return ff_sub(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return ff_mul(self, other)

    def __neg__(self) -> "FieldElement":
        return ff_neg(self)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return ff_mul(self, ff_inv(other))

    def __pow__(self, e: int) -> "FieldElement":
        return ff_pow(self, e)

    def is_zero(self) -> bool:
        return self.value == 0


def _same_modulus(a: FieldElement, b: FieldElement) -> PrimeModulus:
    if a.modulus != b.modulus:
        raise ModulusMismatch(
            f"Operands live in GF({a.modulus.p}) and GF({b.modulus.p})"
        )
    return a.modulus


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    m = _same_modulus(a, b)
    return FieldElement(m.add(a.value, b.value), m)


def ff_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    m = _same_modulus(a, b)
    return FieldElement(m.sub(a.value, b.value), m)


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    m = _same_modulus(a, b)
    return FieldElement(m.mul(a.value, b.value), m)


def ff_neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.modulus.neg(a.value), a.modulus)


def ff_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises DivisionByZero for 0."""
    return FieldElement(a.modulus.inv(a.value), a.modulus)


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    """a^e by repeated squaring, with 0^0 = 1."""
    if e < 0:
        raise ValueError("Exponent must be nonnegative")
    return FieldElement(a.modulus.pow(a.value, e), a.modulus)
