"""Cohen Eisenstein series E_k for k >= 7/2, k in 3/2 + 2Z.

c_{0,k} = 1 and, for n = 0, 3 mod 4 with n = D0 f^2,

    c_{n,k} = L(3/2 - k, chi_{-D0}) / zeta(2 - 2k)
              * sum_{d | f} mu(d) chi_{-D0}(d) d^(k - 3/2) sigma_{2k-2}(f/d).
"""

import logging
from fractions import Fraction
from functools import partial

from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.core.parallel import parallel_map
from mock_eisenstein.eisenstein.weights import HalfIntWeight
from mock_eisenstein.numtheory.arithmetic import Decomposition, divisors, fundamental_decomposition, moebius, sigma
from mock_eisenstein.numtheory.special_values import dirichlet_L_nonpositive, zeta_nonpositive
from mock_eisenstein.qseries.expansion import QExpansion

logger = logging.getLogger(__name__)


def plus_space_exponents(N: int) -> list[int]:
    """Exponents 1..N congruent to 0 or 3 mod 4."""
    return [n for n in range(1, N + 1) if n % 4 in (0, 3)]


def twisted_divisor_sum(decomposition: Decomposition, divisor_power: int, sigma_power: int) -> int:
    """sum_{d | f} mu(d) chi_{-D0}(d) d^divisor_power sigma_{sigma_power}(f/d)."""
    chi = decomposition.character
    f = decomposition.f
    total = 0
    for d in divisors(f):
        mu = moebius(d)
        if mu == 0:
            continue
        twist = chi(d)
        if twist == 0:
            continue
        total += mu * twist * d ** divisor_power * sigma(sigma_power, f // d)
    return total


def _coefficient(n: int, weight: HalfIntWeight, zeta_inverse: Fraction) -> Fraction:
    if n == 0:
        return Fraction(1)
    if n % 4 in (1, 2):
        return Fraction(0)
    decomposition = fundamental_decomposition(n)
    l_value = dirichlet_L_nonpositive(1 - weight.l_value_index, decomposition.character)
    if l_value == 0:
        return Fraction(0)
    divisor_sum = twisted_divisor_sum(decomposition, weight.divisor_power, weight.sigma_power)
    return zeta_inverse * l_value * divisor_sum


def _coefficient_term(n: int, twice_k: int, zeta_inverse: Fraction) -> tuple[int, Fraction]:
    return n, _coefficient(n, HalfIntWeight(twice_k), zeta_inverse)


def inverse_zeta_factor(weight: HalfIntWeight) -> Fraction:
    """1 / zeta(2 - 2k)."""
    return 1 / zeta_nonpositive(weight.zeta_argument)


def cohen_coefficient(n: int, k: HalfIntWeight) -> Fraction:
    """The coefficient c_{n,k} of q^n in E_k."""
    k.require_cohen_range()
    if n < 0:
        raise DomainError(f"exponent must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    return _coefficient(n, k, inverse_zeta_factor(k))


def cohen_series(k: HalfIntWeight, N: int, workers: int = 1) -> QExpansion:
    """E_k up to q^N; 1/zeta(2 - 2k) is computed once and shared by all exponents."""
    k.require_cohen_range()
    zeta_inverse = inverse_zeta_factor(k)
    logger.debug(f"Computing E_{k} to precision {N} with {workers} worker(s)")
    terms = parallel_map(
        partial(_coefficient_term, twice_k=k.twice_k, zeta_inverse=zeta_inverse),
        plus_space_exponents(N),
        workers=workers,
    )
    coefficients = {0: Fraction(1)}
    coefficients.update(terms)
    return QExpansion(precision=N, coefficients=coefficients)
