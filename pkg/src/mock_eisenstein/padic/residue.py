"""Residues of rationals mod p^l and Teichmueller representatives."""

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from mock_eisenstein.core.errors import DomainError, PDividesDenominatorError, UnsupportedPrimeError


@dataclass(frozen=True)
class Residue:
    """Canonical representative value in [0, p^l)."""
    p: int
    l: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.p ** self.l:
            raise DomainError(f"{self.value} is not canonical mod {self.p}^{self.l}")

    @property
    def modulus(self) -> int:
        return self.p ** self.l

    def __int__(self) -> int:
        return self.value


def require_odd_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise UnsupportedPrimeError(p, "an odd prime is required")


def require_prime_at_least_five(p: int) -> None:
    """Checks that follow the proof need p >= 5: at p = 3 the exponent 2 collides with p - 1."""
    require_odd_prime(p)
    if p < 5:
        raise UnsupportedPrimeError(p, "the congruences are only established for p >= 5")


def reduce_rational(x: Fraction | int, p: int, l: int) -> Residue:
    """x mod p^l; the denominator of x must be prime to p."""
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise PDividesDenominatorError(p, x)
    modulus = p ** l
    value = x.numerator * pow(x.denominator, -1, modulus) % modulus
    return Residue(p=p, l=l, value=value)


def teichmuller(a: int, p: int, l: int) -> Residue:
    """omega(a) mod p^l: the (p-1)-th root of unity congruent to a mod p.

    x -> x^p converges to it from x = a in at most l steps.
    """
    if a % p == 0:
        raise DomainError(f"teichmuller needs a unit, but {p} divides {a}")
    modulus = p ** l
    x = a % modulus
    while True:
        nxt = pow(x, p, modulus)
        if nxt == x:
            return Residue(p=p, l=l, value=x)
        x = nxt
