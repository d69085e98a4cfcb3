"""The correction coefficients a_m that turn E_{3/2} into a p-adic modular form.

a_0 = -(1 + p)/2 and, for m = D0 f^2 > 0,

    a_m = 12 H(m) - 6 (1 - chi_{-D0}(p)) L(0, chi_{-D0})
                  * sum_{d | f, p not | d} mu(d) chi_{-D0}(d) sigma_1^(p)(f/d),

where sigma_1^(p) sums the divisors prime to p. When p does not divide f this is

    a_m = 6 H(m)    if p | m,
    a_m = 12 H(m)   if p does not divide m and m = -n^2 mod p,
    a_m = 0         otherwise,

and it is the limit of 12 H(m) + (1 - p)/2 c_{m,k_l} as l grows, so the congruence
holds at every level, including exponents with p | f.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.eisenstein.hurwitz import hurwitz_L, zagier_series
from mock_eisenstein.numtheory.arithmetic import divisors, fundamental_decomposition, kronecker, moebius
from mock_eisenstein.numtheory.special_values import dirichlet_L_nonpositive
from mock_eisenstein.padic.residue import require_prime_at_least_five
from mock_eisenstein.qseries.expansion import QExpansion, add


def is_neg_square_mod(m: int, p: int) -> bool:
    """True iff m = -n^2 mod p for some integer n, by enumerating n in [0, p/2]."""
    target = m % p
    return any((-n * n) % p == target for n in range(p // 2 + 1))


def _sigma_one_prime_to(n: int, p: int) -> int:
    return sum(d for d in divisors(n) if d % p)


def _limit_term(m: int, p: int) -> Fraction:
    """-6 (1 - chi_{-D0}(p)) L(0, chi_{-D0}) sum_{d | f, p not | d} mu(d) chi(d) sigma_1^(p)(f/d)."""
    decomposition = fundamental_decomposition(m)
    chi = decomposition.character
    if chi(p) == 1:
        return Fraction(0)
    f = decomposition.f
    divisor_sum = sum(
        moebius(d) * chi(d) * _sigma_one_prime_to(f // d, p)
        for d in divisors(f)
        if d % p
    )
    return -6 * (1 - chi(p)) * dirichlet_L_nonpositive(0, chi) * divisor_sum


def correction_coefficient(m: int, p: int) -> Fraction:
    require_prime_at_least_five(p)
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if m == 0:
        return Fraction(-(1 + p), 2)
    if m % 4 in (1, 2):
        return Fraction(0)
    return 12 * hurwitz_L(m).value + _limit_term(m, p)


@dataclass(frozen=True)
class CorrectionSeries:
    """The a_m for m = 0..precision; zero values are not stored."""
    p: int
    precision: int
    values: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {m: Fraction(v) for m, v in sorted(self.values.items()) if v != 0}
        for m, value in cleaned.items():
            if not is_neg_square_mod(m, self.p):
                raise DomainError(f"a_{m} = {value} but {m} is not -n^2 mod {self.p}")
            if 12 % value.denominator or value.denominator % self.p == 0:
                raise DomainError(f"a_{m} = {value} is not {self.p}-integral with denominator dividing 12")
        object.__setattr__(self, "values", MappingProxyType(cleaned))

    @property
    def support(self) -> list[int]:
        return list(self.values)

    def as_qexpansion(self) -> QExpansion:
        return QExpansion(precision=self.precision, coefficients=dict(self.values))


def correction_series(p: int, N: int) -> CorrectionSeries:
    require_prime_at_least_five(p)
    return CorrectionSeries(
        p=p,
        precision=N,
        values={m: correction_coefficient(m, p) for m in range(N + 1)},
    )


def completed_series(p: int, N: int, workers: int = 1) -> QExpansion:
    """E_{3/2} + sum_m a_m q^m."""
    return add(zagier_series(N, workers=workers), correction_series(p, N).as_qexpansion())


def legendre_reading_support(p: int, N: int) -> list[int]:
    """Exponents 0 < m <= N with H(m) != 0 that a literal "(m/p) = 1" condition would correct,
    together with the multiples of p."""
    require_prime_at_least_five(p)
    return [
        m
        for m in range(1, N + 1)
        if hurwitz_L(m).value != 0 and (m % p == 0 or kronecker(m, p) == 1)
    ]
