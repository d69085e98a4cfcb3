from typing import Iterable

from mock_eisenstein.core.certificate import CertificateDiff, CongruenceCertificate
from mock_eisenstein.qseries.expansion import QExpansion
from mock_eisenstein.qseries.residues import ResidueSeries, compare, reduce_mod


def certify_residues(
    check: str,
    lhs: ResidueSeries,
    rhs: ResidueSeries,
    weight_twice_k: int | None = None,
    corrected_exponents: Iterable[int] = (),
    notes: Iterable[str] = (),
) -> CongruenceCertificate:
    """Certificate comparing two residue series exponent by exponent, ascending."""
    differing = compare(lhs, rhs)
    precision = min(lhs.precision, rhs.precision)
    return CongruenceCertificate(
        check=check,
        p=lhs.p,
        l=lhs.l,
        N=precision,
        weight_twice_k=weight_twice_k,
        diffs=[CertificateDiff(e, lhs.residue(e), rhs.residue(e)) for e in differing],
        corrected_exponents=sorted(corrected_exponents),
        notes=list(notes),
        lhs_table=lhs.table(list(range(precision + 1))),
        rhs_table=rhs.table(list(range(precision + 1))),
    )


def certify_series_congruence(
    check: str,
    lhs: QExpansion,
    rhs: QExpansion,
    p: int,
    l: int,
    weight_twice_k: int | None = None,
    corrected_exponents: Iterable[int] = (),
    notes: Iterable[str] = (),
) -> CongruenceCertificate:
    """Reduce both series mod p^l and certify lhs = rhs coefficientwise."""
    return certify_residues(
        check,
        reduce_mod(lhs, p, l),
        reduce_mod(rhs, p, l),
        weight_twice_k=weight_twice_k,
        corrected_exponents=corrected_exponents,
        notes=notes,
    )
