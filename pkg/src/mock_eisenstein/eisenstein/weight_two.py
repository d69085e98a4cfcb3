"""The level one analogue: E_2 is congruent to E_{p+1} mod p."""

from fractions import Fraction

from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.numtheory.arithmetic import sigma
from mock_eisenstein.numtheory.bernoulli import bernoulli
from mock_eisenstein.padic.residue import require_odd_prime
from mock_eisenstein.qseries.certify import certify_series_congruence
from mock_eisenstein.qseries.expansion import QExpansion


def level_one_eisenstein_series(k: int, N: int) -> QExpansion:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 2 (k = 2 is quasimodular)."""
    if k < 2 or k % 2:
        raise DomainError(f"level one Eisenstein series need an even weight >= 2, got {k}")
    factor = -Fraction(2 * k) / bernoulli(k)
    coefficients = {0: Fraction(1)}
    coefficients.update({n: factor * sigma(k - 1, n) for n in range(1, N + 1)})
    return QExpansion(precision=N, coefficients=coefficients)


def weight_two_series(N: int) -> QExpansion:
    """E_2 = 1 - 24 sum sigma_1(n) q^n."""
    return level_one_eisenstein_series(2, N)


def weight_two_congruence_check(p: int, N: int) -> CongruenceCertificate:
    require_odd_prime(p)
    return certify_series_congruence(
        "weight-two",
        weight_two_series(N),
        level_one_eisenstein_series(p + 1, N),
        p=p,
        l=1,
        notes=[f"E_2 vs E_{p + 1} mod {p}"],
    )
