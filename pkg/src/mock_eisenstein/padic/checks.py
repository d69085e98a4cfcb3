"""Finite-level checks of the steps that relate E_{3/2} to Cohen Eisenstein series."""

import logging
from fractions import Fraction

from mock_eisenstein.core.certificate import CertificateDiff, CongruenceCertificate
from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.eisenstein.cohen import cohen_coefficient, inverse_zeta_factor
from mock_eisenstein.eisenstein.hurwitz import hurwitz_L
from mock_eisenstein.eisenstein.weights import HalfIntWeight
from mock_eisenstein.numtheory.arithmetic import QuadraticCharacter, fundamental_decomposition, kronecker
from mock_eisenstein.numtheory.special_values import zeta_nonpositive
from mock_eisenstein.padic.lp_values import (
    kummer_index,
    lp_special_value,
    lp_zero_cases,
    teichmuller_exponent_identity,
)
from mock_eisenstein.padic.residue import reduce_rational, require_prime_at_least_five

logger = logging.getLogger(__name__)


def _scalar_certificate(
    check: str,
    index: int,
    lhs: Fraction,
    rhs: Fraction,
    p: int,
    l: int,
    weight_twice_k: int | None = None,
    notes: list[str] | None = None,
) -> CongruenceCertificate:
    lhs_residue = reduce_rational(lhs, p, l).value
    rhs_residue = reduce_rational(rhs, p, l).value
    diffs = [] if lhs_residue == rhs_residue else [CertificateDiff(index, lhs_residue, rhs_residue)]
    return CongruenceCertificate(
        check=check,
        p=p,
        l=l,
        weight_twice_k=weight_twice_k,
        diffs=diffs,
        notes=notes or [],
    )


def kummer_chain_check(chi: QuadraticCharacter, p: int, l: int) -> CongruenceCertificate:
    """L_p(0, chi omega) = L_p(1 - n, chi omega^n) mod p^l with n = 1 + p^(l-1)(p-1).

    p^(n-1) vanishes mod p^l, so the right side reduces to L(1 - n, chi).
    """
    require_prime_at_least_five(p)
    n = kummer_index(p, l)
    lhs = lp_special_value(1, chi, p)
    rhs = lp_special_value(n, chi, p)
    notes = [
        f"case table for L_p(0) agrees with the interpolation identity: {lhs == lp_zero_cases(chi, p)}",
        f"{chi}: chi(p)={chi(p)}, L_p(0)={lhs}, L_p(1-{n})={rhs}",
        f"omega^{n} = omega mod {p}^{l}: {teichmuller_exponent_identity(p, l)}",
    ]
    certificate = _scalar_certificate("kummer", n, lhs, rhs, p, l, notes=notes)
    logger.debug(certificate.summary_line())
    return certificate


def zeta_scaling_check(p: int, l: int) -> CongruenceCertificate:
    """-6 zeta(-1 - p^(l-1)(p-1)) = (1 - p)/2 mod p^l."""
    require_prime_at_least_five(p)
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    s = -1 - p ** (l - 1) * (p - 1)
    lhs = -6 * zeta_nonpositive(s)
    rhs = Fraction(1 - p, 2)
    certificate = _scalar_certificate(
        "zeta", 1 - s, lhs, rhs, p, l, notes=[f"-6*zeta({s}) vs (1-{p})/2"]
    )
    logger.debug(certificate.summary_line())
    return certificate


def proof_coefficient_congruence(m: int, p: int, l: int) -> CongruenceCertificate:
    """c_{m,k} = (1 - chi_{-m}(p)) H(m) / zeta(2 - 2k) mod p^l for k = 3/2 + p^(l-1)(p-1).

    chi_{-m} is read as chi_{-D0} with m = D0 f^2. When p | f that reading and the
    literal Kronecker symbol (-m/p) can differ, and the congruence is reported in the
    notes instead of being asserted.
    """
    require_prime_at_least_five(p)
    if m < 1 or m % 4 not in (0, 3):
        raise DomainError(f"m must be a positive integer congruent to 0 or 3 mod 4, got {m}")
    weight = HalfIntWeight.cohen_weight_for_level(p, l)
    decomposition = fundamental_decomposition(m)
    chi_decomposed = decomposition.character(p)
    chi_literal = kronecker(-m, p)

    lhs = cohen_coefficient(m, weight)
    rhs = (1 - chi_decomposed) * inverse_zeta_factor(weight) * hurwitz_L(m).value
    notes = [f"chi_-D0(p)={chi_decomposed} (D0={decomposition.D0}, f={decomposition.f}); (-m/p)={chi_literal}"]

    if decomposition.f % p == 0:
        lhs_residue = reduce_rational(lhs, p, l).value
        rhs_residue = reduce_rational(rhs, p, l).value
        literal_rhs = reduce_rational(
            (1 - chi_literal) * inverse_zeta_factor(weight) * hurwitz_L(m).value, p, l
        ).value
        notes.append(
            f"flagged: p divides f; c_m={lhs_residue}, decomposition reading={rhs_residue}, "
            f"literal reading={literal_rhs} mod {p}^{l}"
        )
        return CongruenceCertificate(
            check="proof", p=p, l=l, weight_twice_k=weight.twice_k, notes=notes
        )

    return _scalar_certificate("proof", m, lhs, rhs, p, l, weight_twice_k=weight.twice_k, notes=notes)
