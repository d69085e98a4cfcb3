"""Verification that E_{3/2} + sum a_m q^m agrees with (1-p)/2 E_{k_l} mod p^l,
k_l = 3/2 + p^(l-1)(p-1)."""

import logging
from fractions import Fraction

from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.eisenstein.cohen import cohen_series
from mock_eisenstein.eisenstein.hurwitz import zagier_series
from mock_eisenstein.eisenstein.weights import HalfIntWeight
from mock_eisenstein.completion.correction import (
    correction_series,
    is_neg_square_mod,
    legendre_reading_support,
)
from mock_eisenstein.padic.residue import require_prime_at_least_five
from mock_eisenstein.qseries.certify import certify_series_congruence
from mock_eisenstein.qseries.expansion import QExpansion, add, scale

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 100
MAX_DEFAULT_LEVEL = 2


def scaled_cohen_series(p: int, l: int, N: int, workers: int = 1) -> tuple[HalfIntWeight, QExpansion]:
    """(k_l, (1 - p)/2 * E_{k_l}) up to q^N."""
    weight = HalfIntWeight.cohen_weight_for_level(p, l)
    return weight, scale(Fraction(1 - p, 2), cohen_series(weight, N, workers=workers))


def _check_level(l: int, allow_deep: bool) -> None:
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    if l > MAX_DEFAULT_LEVEL and not allow_deep:
        raise DomainError(
            f"l={l} needs Bernoulli numbers of very large index; pass allow_deep to run it"
        )


def _reading_notes(p: int, N: int, corrected: list[int]) -> list[str]:
    notes = ["support follows m = -n^2 mod p; the literal reading (m/p) = 1 is not used"]
    legendre = set(legendre_reading_support(p, N))
    positive = {m for m in corrected if m > 0}
    only_neg_square = sorted(positive - legendre)
    only_legendre = sorted(legendre - positive)
    if only_neg_square or only_legendre:
        notes.append(
            f"readings disagree: corrected only under -n^2 reading {only_neg_square}, "
            f"only under (m/p) = 1 reading {only_legendre}"
        )
    return notes


def verify_completion(
    p: int,
    l: int,
    N: int = DEFAULT_PRECISION,
    workers: int = 1,
    uncorrected: bool = False,
    allow_deep: bool = False,
) -> CongruenceCertificate:
    """Certify E_{3/2} + sum a_m q^m = (1 - p)/2 E_{k_l} mod p^l for every exponent 0..N.

    With uncorrected=True the bare E_{3/2} is compared instead, which fails exactly
    where the correction is needed.
    """
    require_prime_at_least_five(p)
    _check_level(l, allow_deep)
    weight, rhs = scaled_cohen_series(p, l, N, workers=workers)

    lhs = zagier_series(N, workers=workers)
    corrected: list[int] = []
    notes: list[str] = []
    if not uncorrected:
        correction = correction_series(p, N)
        lhs = add(lhs, correction.as_qexpansion())
        corrected = correction.support
        notes = _reading_notes(p, N, corrected)
        logger.info(
            "The closing sentence of the argument places the differences at m not of the form "
            "-n^2 mod p; the certificate tests the opposite (proposition) direction"
        )

    certificate = certify_series_congruence(
        "completion-uncorrected" if uncorrected else "completion",
        lhs,
        rhs,
        p=p,
        l=l,
        weight_twice_k=weight.twice_k,
        corrected_exponents=corrected,
        notes=notes,
    )
    logger.info(certificate.summary_line())
    return certificate


def difference_support(p: int, l: int, N: int = DEFAULT_PRECISION, workers: int = 1, allow_deep: bool = False) -> list[int]:
    """Exponents where bare E_{3/2} and (1 - p)/2 E_{k_l} differ mod p^l."""
    certificate = verify_completion(p, l, N, workers=workers, uncorrected=True, allow_deep=allow_deep)
    support = certificate.diff_exponents()
    outside = [m for m in support if not is_neg_square_mod(m, p)]
    if outside:
        logger.warning(f"Differences outside the -n^2 classes mod {p}: {outside}")
    return support
