"""Checkable derivations of gcd(f, x^p - x) by repeated squaring.

A derivation lists the squaring residues x^(2^i) mod f, the assembled
x^p mod f, the reduced x^p - x, each Euclidean division, and the monic gcd.
Every step can be re-checked from the steps before it.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..errors import ConstantModulus
from ..poly.upoly import PowStep, UniPoly, u_divmod, u_powmod
from ..types import DerivationKind

SQUARE = "square"
ASSEMBLE = "assemble"
SUBTRACT_X = "subtract-x"
EUCLID = "euclid"
GCD = "gcd"


@dataclass(frozen=True)
class DerivationStep:
    kind: str
    index: int
    residue: UniPoly
    quotient: Optional[UniPoly] = None

    def to_dict(self, var: str = "x") -> Dict[str, Any]:
        out = {"kind": self.kind, "index": self.index, "residue": self.residue.render(var)}
        if self.quotient is not None:
            out["quotient"] = self.quotient.render(var)
        return out


@dataclass
class Derivation:
    f: UniPoly
    kind: DerivationKind
    steps: List[DerivationStep] = field(default_factory=list)

    @property
    def gcd(self) -> UniPoly:
        return self.steps[-1].residue

    @property
    def size(self) -> int:
        """Field elements stated, one deg-f slot per polynomial."""
        width = self.f.degree
        return sum(width * (2 if s.quotient is not None else 1) for s in self.steps)

    @property
    def squaring_size(self) -> int:
        return self.f.degree * sum(1 for s in self.steps if s.kind == SQUARE)

    def to_dict(self, var: str = "x") -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "f": self.f.render(var),
            "steps": [s.to_dict(var) for s in self.steps],
            "size": self.size,
            "squaring_size": self.squaring_size,
        }


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failed_step: Optional[int] = None
    reason: str = ""


def emit_gcd_derivation(
    f: UniPoly, special: DerivationKind = DerivationKind.FROBENIUS_GCD
) -> Derivation:
    """Derivation of gcd(f, x^p - x mod f).

    Raises:
        ConstantModulus: If deg f < 1
    """
    special = DerivationKind(special)
    if f.degree < 1:
        raise ConstantModulus("Derivation needs deg f >= 1")

    m = f.modulus
    x = UniPoly.monomial(1, m)
    powers: List[PowStep] = []
    xp = u_powmod(x, m.p, f, powers)

    derivation = Derivation(f=f, kind=special)
    for s in powers:
        derivation.steps.append(DerivationStep(s.kind, s.index, s.residue))

    reduced = (xp - x) % f
    derivation.steps.append(DerivationStep(SUBTRACT_X, 0, reduced))

    a, b = f, reduced
    index = 0
    while not b.is_zero():
        index += 1
        q, r = u_divmod(a, b)
        derivation.steps.append(DerivationStep(EUCLID, index, r, q))
        a, b = b, r

    derivation.steps.append(DerivationStep(GCD, 0, a.monic()))
    return derivation


def verify_derivation(derivation: Derivation) -> VerificationReport:
    """Re-check every step of a derivation against its predecessors."""
    f = derivation.f
    m = f.modulus
    x = UniPoly.monomial(1, m)
    steps = derivation.steps

    def fail(i: int, reason: str) -> VerificationReport:
        return VerificationReport(ok=False, failed_step=i, reason=reason)

    squares = [x % f]
    i = 0
    while i < len(steps) and steps[i].kind == SQUARE:
        expected = (squares[-1] * squares[-1]) % f
        if steps[i].residue != expected or steps[i].index != len(squares):
            return fail(i, "squaring residue does not match")
        squares.append(expected)
        i += 1

    if i >= len(steps) or steps[i].kind != ASSEMBLE:
        return fail(i, "missing assembled power")
    assembled = UniPoly.constant(1, m) % f
    for bit, s in enumerate(squares):
        if (m.p >> bit) & 1:
            assembled = (assembled * s) % f
    if m.p >> len(squares) or steps[i].residue != assembled:
        return fail(i, "assembled power does not match the squarings")
    i += 1

    if i >= len(steps) or steps[i].kind != SUBTRACT_X:
        return fail(i, "missing reduced x^p - x")
    if steps[i].residue != (assembled - x) % f:
        return fail(i, "x^p - x residue does not match")
    a, b = f, steps[i].residue
    i += 1

    while i < len(steps) and steps[i].kind == EUCLID:
        step = steps[i]
        if b.is_zero() or step.quotient is None:
            return fail(i, "division by zero remainder")
        if step.quotient * b + step.residue != a or step.residue.degree >= b.degree:
            return fail(i, "division identity fails")
        a, b = b, step.residue
        i += 1

    if i != len(steps) - 1 or steps[i].kind != GCD:
        return fail(i, "missing final gcd")
    if not b.is_zero():
        return fail(i, "Euclidean chain stops before a zero remainder")
    if steps[i].residue != a.monic():
        return fail(i, "gcd is not the monic last divisor")
    return VerificationReport(ok=True)
