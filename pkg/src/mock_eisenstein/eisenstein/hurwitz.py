"""Hurwitz class numbers H(n) and Zagier's weight 3/2 series sum -12 H(n) q^n.

H(n) is computed two independent ways: by counting reduced binary quadratic
forms, and through L(0, chi_{-D0}) and a twisted divisor sum.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.core.parallel import parallel_map
from mock_eisenstein.eisenstein.cohen import plus_space_exponents, twisted_divisor_sum
from mock_eisenstein.numtheory.arithmetic import fundamental_decomposition
from mock_eisenstein.numtheory.special_values import dirichlet_L_nonpositive
from mock_eisenstein.qseries.expansion import QExpansion

logger = logging.getLogger(__name__)

H_ZERO = Fraction(-1, 12)


@dataclass(frozen=True)
class HurwitzValue:
    n: int
    value: Fraction

    def __post_init__(self):
        if (12 * self.value).denominator != 1:
            raise ValueError(f"12*H({self.n}) = {12 * self.value} is not an integer")
        if self.n == 0 and self.value != H_ZERO:
            raise ValueError(f"H(0) must be -1/12, got {self.value}")
        if self.n > 0 and self.value < 0:
            raise ValueError(f"H({self.n}) = {self.value} is negative")

    @property
    def scaled(self) -> int:
        """12 * H(n)."""
        return int(12 * self.value)


def _check_argument(n: int) -> None:
    if n < 0:
        raise DomainError(f"Hurwitz class numbers need n >= 0, got {n}")


def hurwitz_forms(n: int) -> HurwitzValue:
    """Weighted count of reduced positive definite forms (a, b, c) with b^2 - 4ac = -n.

    Reduced means |b| <= a <= c with b >= 0 when |b| = a or a = c. Forms proportional
    to x^2 + xy + y^2 weigh 1/3, those proportional to x^2 + y^2 weigh 1/2.
    """
    _check_argument(n)
    if n == 0:
        return HurwitzValue(0, H_ZERO)
    if n % 4 in (1, 2):
        return HurwitzValue(n, Fraction(0))

    total = Fraction(0)
    b = n % 2
    # a >= b and c >= a force n = 4ac - b^2 >= 3b^2
    while 3 * b * b <= n:
        ac = (b * b + n) // 4
        a = max(b, 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                if a == b == c:
                    total += Fraction(1, 3)
                elif b == 0 and a == c:
                    total += Fraction(1, 2)
                elif b == 0 or b == a or a == c:
                    total += 1
                else:
                    # (a, b, c) and (a, -b, c) are both reduced
                    total += 2
            a += 1
        b += 2
    return HurwitzValue(n, total)


@lru_cache(maxsize=65536)
def _hurwitz_L_value(n: int) -> Fraction:
    if n == 0:
        return H_ZERO
    if n % 4 in (1, 2):
        return Fraction(0)
    decomposition = fundamental_decomposition(n)
    l_zero = dirichlet_L_nonpositive(0, decomposition.character)
    return l_zero * twisted_divisor_sum(decomposition, divisor_power=0, sigma_power=1)


def hurwitz_L(n: int) -> HurwitzValue:
    """H(n) = L(0, chi_{-D0}) sum_{d | f} mu(d) chi_{-D0}(d) sigma_1(f/d)."""
    _check_argument(n)
    return HurwitzValue(n, _hurwitz_L_value(n))


def hurwitz_class_number(n: int) -> Fraction:
    return hurwitz_L(n).value


def _zagier_term(n: int) -> tuple[int, Fraction]:
    return n, -12 * _hurwitz_L_value(n)


def zagier_series(N: int, workers: int = 1) -> QExpansion:
    """E_{3/2} = -12 sum_{m >= 0} H(m) q^m = 1 - 4q^3 - 6q^4 - 12q^7 - ..."""
    logger.debug(f"Computing E_3/2 to precision {N}")
    coefficients = {0: Fraction(1)}
    coefficients.update(parallel_map(_zagier_term, plus_space_exponents(N), workers=workers))
    return QExpansion(precision=N, coefficients=coefficients)


def kronecker_hurwitz_sides(n: int) -> tuple[Fraction, int]:
    """Both sides of sum_{r^2 <= 4n} H(4n - r^2) = sum_{d | n} max(d, n/d), for n >= 1."""
    if n < 1:
        raise DomainError(f"the class number relation needs n >= 1, got {n}")
    lhs = Fraction(0)
    r = 0
    while r * r <= 4 * n:
        value = hurwitz_class_number(4 * n - r * r)
        lhs += value if r == 0 else 2 * value
        r += 1
    rhs = sum(max(d, n // d) for d in range(1, n + 1) if n % d == 0)
    return lhs, rhs
