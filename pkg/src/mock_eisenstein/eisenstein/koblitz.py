"""Congruences E_k = E_{k+p-1} mod p between Cohen Eisenstein series, and the
failure of the same congruence at k = 3/2."""

import logging

from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.eisenstein.cohen import cohen_series
from mock_eisenstein.eisenstein.hurwitz import zagier_series
from mock_eisenstein.eisenstein.weights import HalfIntWeight
from mock_eisenstein.padic.residue import require_odd_prime
from mock_eisenstein.qseries.certify import certify_series_congruence

logger = logging.getLogger(__name__)


def koblitz_congruence_check(k: HalfIntWeight, p: int, N: int, workers: int = 1) -> CongruenceCertificate:
    """Certify cohen_series(k, N) = cohen_series(k + (p-1), N) mod p."""
    k.require_cohen_range()
    require_odd_prime(p)
    shifted = k.shifted(p - 1)
    certificate = certify_series_congruence(
        "koblitz",
        cohen_series(k, N, workers=workers),
        cohen_series(shifted, N, workers=workers),
        p=p,
        l=1,
        weight_twice_k=k.twice_k,
        notes=[f"E_{k} vs E_{shifted} mod {p}"],
    )
    logger.info(certificate.summary_line())
    return certificate


def mock_koblitz_check(p: int, N: int, workers: int = 1) -> CongruenceCertificate:
    """E_{3/2} against E_{3/2+p-1} mod p; this congruence does not hold (e.g. q^3 at p = 5)."""
    require_odd_prime(p)
    shifted = HalfIntWeight(3).shifted(p - 1)
    certificate = certify_series_congruence(
        "koblitz-negative",
        zagier_series(N, workers=workers),
        cohen_series(shifted, N, workers=workers),
        p=p,
        l=1,
        weight_twice_k=3,
        notes=[f"E_3/2 vs E_{shifted} mod {p}; expected to fail"],
    )
    logger.info(certificate.summary_line())
    return certificate
