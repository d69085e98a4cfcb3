"""Exception hierarchy shared by every module.

Mathematical disagreements are never raised: they end up in a
CongruenceCertificate. Exceptions are reserved for inputs outside the
domain of an operation and for rationals that cannot be reduced mod p^l.
"""

from fractions import Fraction


class MockEisensteinError(Exception):
    """Base class for all errors raised by mock_eisenstein."""


class DomainError(MockEisensteinError, ValueError):
    """An argument lies outside the domain of the operation."""


class WeightOutOfRangeError(DomainError):
    """A half-integral weight is not admissible for the Cohen coefficient formula."""

    def __init__(self, twice_k: int, reason: str):
        self.twice_k = twice_k
        self.reason = reason
        super().__init__(f"Weight {twice_k}/2 is out of range: {reason}")

    def __reduce__(self):
        return (type(self), (self.twice_k, self.reason))


class UnsupportedPrimeError(DomainError):
    """The prime is not supported by the requested check (p = 3, composite, or p < 5)."""

    def __init__(self, p: int, reason: str):
        self.p = p
        self.reason = reason
        super().__init__(f"Prime p={p} is not supported: {reason}")

    def __reduce__(self):
        return (type(self), (self.p, self.reason))


class PDividesDenominatorError(MockEisensteinError, ArithmeticError):
    """A coefficient is not p-integral, so it has no residue mod p^l."""

    def __init__(self, p: int, value: Fraction, exponent: int | None = None):
        self.p = p
        self.value = value
        self.exponent = exponent
        where = f" at exponent {exponent}" if exponent is not None else ""
        super().__init__(f"{p} divides the denominator of {value}{where}")

    def __reduce__(self):
        return (type(self), (self.p, self.value, self.exponent))

    def at_exponent(self, exponent: int) -> "PDividesDenominatorError":
        return PDividesDenominatorError(self.p, self.value, exponent)


class ModulusMismatchError(MockEisensteinError, ValueError):
    """Two residue series reduced modulo different prime powers were compared."""

    def __init__(self, left: tuple[int, int], right: tuple[int, int]):
        self.left = left
        self.right = right
        super().__init__(
            f"Cannot compare residues mod {left[0]}^{left[1]} with residues mod {right[0]}^{right[1]}"
        )

    def __reduce__(self):
        return (type(self), (self.left, self.right))


class CacheCorruptionError(MockEisensteinError):
    """The on-disk Bernoulli cache is unreadable or inconsistent."""
