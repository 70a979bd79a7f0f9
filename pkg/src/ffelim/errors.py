"""Exception hierarchy.

Two families: ``InputError`` for problems in polynomial text and command
arguments (CLI exit code 2) and ``MathDomainError`` for everything the
mathematics rejects (CLI exit code 3).
"""

from typing import Optional


class FFElimError(Exception):
    """Base class for all ffelim errors."""


class InputError(FFElimError, ValueError):
    """Malformed user input."""


class PolySyntaxError(InputError):
    """Polynomial text does not match the grammar."""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariable(InputError):
    """Variable name outside the declared arity."""


class ExponentOverflow(InputError):
    """Exponent above the per-variable cap, or a power whose expansion is too large."""


class MathDomainError(FFElimError, ValueError):
    """Mathematically invalid operation or instance."""


class ModulusMismatch(MathDomainError):
    pass


class DivisionByZero(MathDomainError, ZeroDivisionError):
    pass


class NotPrime(MathDomainError):
    pass


class ZeroPolynomial(MathDomainError):
    pass


class BothZero(MathDomainError):
    pass


class ConstantModulus(MathDomainError):
    pass


class NotMonic(MathDomainError):
    pass


class DuplicateAbscissa(MathDomainError):
    pass


class ArityMismatch(MathDomainError):
    pass


class BothConstantInVar(MathDomainError):
    pass


class DimensionTooLarge(MathDomainError):
    pass


class FieldTooSmall(MathDomainError):
    pass


class DegenerateSpecialization(MathDomainError):
    pass


class EmptySystem(MathDomainError):
    pass


class ZeroDivisor(MathDomainError):
    pass


class ConfigOutOfRange(MathDomainError):
    pass


class ConditionViolated(MathDomainError):
    """A sparse factor fails the non-residue acceptance condition."""

    def __init__(self, message: str, factor_index: int):
        self.factor_index = factor_index
        super().__init__(message)


class BadPrime(MathDomainError):
    pass


class NotCoprime(MathDomainError):
    pass


class PreconditionGcd(MathDomainError):
    pass


class NotDivisor(MathDomainError):
    pass


class EnumerationTooLarge(MathDomainError):
    pass


class BudgetExhausted(MathDomainError):
    pass


class DegenerateInstance(MathDomainError):
    pass


class NotMonicInX(MathDomainError):
    pass


class DegreeBoundExceeded(MathDomainError):
    pass


class EisensteinViolation(MathDomainError):
    pass


class InexactDivision(MathDomainError):
    """Multivariate division left a nonzero remainder."""


class InvalidPlan(InputError):
    """Elimination order names a variable twice or one outside the arity."""


class FieldTooLarge(MathDomainError):
    """Characteristic above a desk-scale guard."""
