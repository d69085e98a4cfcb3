"""Integer arithmetic: factorization, multiplicative functions, Kronecker symbol,
and the n = D0 * f^2 decomposition of discriminants."""

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, jacobi_symbol

from mock_eisenstein.core.errors import DomainError


@lru_cache(maxsize=65536)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, primes increasing.

    sympy's factorint does trial division first and falls back to Pollard rho.
    """
    if n < 1:
        raise DomainError(f"factorize expects n >= 1, got {n}")
    if n == 1:
        return []
    return list(_factor_tuple(n))


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    divs = [1]
    for prime, exponent in factorize(n):
        divs = [d * prime ** e for d in divs for e in range(exponent + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def sigma(r: int, n: int) -> int:
    """Sum of d^r over the positive divisors d of n."""
    if r < 0:
        raise DomainError(f"sigma expects r >= 0, got {r}")
    if n < 1:
        raise DomainError(f"sigma expects n >= 1, got {n}")
    total = 1
    for prime, exponent in factorize(n):
        if r == 0:
            total *= exponent + 1
        else:
            pr = prime ** r
            total *= (pr ** (exponent + 1) - 1) // (pr - 1)
    return total


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol (a/b), the full extension of the Jacobi symbol to all integers b."""
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0

    result = 1
    v = (b & -b).bit_length() - 1 if b else 0
    b_odd = b >> v
    if v % 2 == 1:
        # (a/2) = 0 for even a, +1 for a = ±1 mod 8, -1 for a = ±3 mod 8
        if a % 8 in (3, 5):
            result = -result
    if b_odd < 0:
        b_odd = -b_odd
        if a < 0:
            result = -result
    if b_odd == 1:
        return result
    return result * jacobi_symbol(a % b_odd, b_odd)


def is_fundamental_discriminant(d: int) -> bool:
    """True for discriminants of quadratic fields: d = 1 mod 4 squarefree, or d = 4m with
    m = 2, 3 mod 4 squarefree."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return moebius(abs(d)) != 0
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and moebius(abs(m)) != 0
    return False


@dataclass(frozen=True)
class QuadraticCharacter:
    """The odd quadratic character chi_{-D0}(m) = (-D0/m) of a negative fundamental discriminant."""
    discriminant: int

    def __post_init__(self):
        if self.discriminant >= 0 or not is_fundamental_discriminant(self.discriminant):
            raise DomainError(
                f"{self.discriminant} is not a negative fundamental discriminant"
            )

    @classmethod
    def from_D0(cls, D0: int) -> "QuadraticCharacter":
        return cls(-D0)

    @property
    def D0(self) -> int:
        return -self.discriminant

    @property
    def conductor(self) -> int:
        return -self.discriminant

    def __call__(self, m: int) -> int:
        return kronecker(self.discriminant, m)

    def __str__(self) -> str:
        return f"chi_{self.discriminant}"


@dataclass(frozen=True)
class Decomposition:
    """n = D0 * f^2 with -D0 a fundamental discriminant."""
    n: int
    D0: int
    f: int

    @property
    def character(self) -> QuadraticCharacter:
        return QuadraticCharacter.from_D0(self.D0)


def fundamental_decomposition(n: int) -> Decomposition:
    """Split n = 0, 3 mod 4 as D0 * f^2 where -D0 is the discriminant of Q(sqrt(-n))."""
    if n < 3 or n % 4 not in (0, 3):
        raise DomainError(f"{n} is not a positive integer congruent to 0 or 3 mod 4")

    squarefree, square_root = 1, 1
    for prime, exponent in factorize(n):
        if exponent % 2:
            squarefree *= prime
        square_root *= prime ** (exponent // 2)

    if squarefree % 4 == 3:
        return Decomposition(n=n, D0=squarefree, f=square_root)
    # squarefree = 1, 2 mod 4 forces an even square root, since n = 0, 3 mod 4
    return Decomposition(n=n, D0=4 * squarefree, f=square_root // 2)


def negative_fundamental_discriminants(max_d0: int) -> list[QuadraticCharacter]:
    """Characters chi_{-D0} for every negative fundamental discriminant with D0 <= max_d0."""
    return [
        QuadraticCharacter.from_D0(D0)
        for D0 in range(3, max_d0 + 1)
        if is_fundamental_discriminant(-D0)
    ]
