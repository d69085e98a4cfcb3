"""Tests for QExpansion arithmetic, serialization and reduction mod p^l."""
import json
import random
from fractions import Fraction

import pytest

from mock_eisenstein.core.errors import DomainError, ModulusMismatchError, PDividesDenominatorError
from mock_eisenstein.qseries.certify import certify_series_congruence
from mock_eisenstein.qseries.expansion import QExpansion, add, format_series, parse_rational, scale
from mock_eisenstein.qseries.residues import ResidueSeries, compare, reduce_mod

ZAGIER_EXPONENTS = [0, 3, 4, 7, 8, 11, 12, 15, 16]


@pytest.fixture
def zagier_prefix() -> QExpansion:
    """1 - 4q^3 - 6q^4 - 12q^7 - 12q^8 - 12q^11 - 16q^12 - 24q^15 - 18q^16."""
    return QExpansion(
        precision=16,
        coefficients={0: 1, 3: -4, 4: -6, 7: -12, 8: -12, 11: -12, 12: -16, 15: -24, 16: -18},
    )


def random_series(rng: random.Random, precision: int, p: int) -> QExpansion:
    coefficients = {}
    for exponent in range(precision + 1):
        if rng.random() < 0.3:
            continue
        denominator = rng.choice([d for d in range(1, 30) if d % p])
        coefficients[exponent] = Fraction(rng.randint(-500, 500), denominator)
    return QExpansion(precision=precision, coefficients=coefficients)


class TestQExpansion:
    def test_zeros_are_not_stored(self):
        series = QExpansion(precision=5, coefficients={0: 1, 2: 0, 3: Fraction(-4)})
        assert dict(series.coefficients) == {0: Fraction(1), 3: Fraction(-4)}
        assert series.coefficient(2) == 0

    def test_rejects_exponent_beyond_precision(self):
        with pytest.raises(DomainError):
            QExpansion(precision=2, coefficients={3: 1})
        with pytest.raises(DomainError):
            QExpansion(precision=2).coefficient(3)

    def test_truncate(self, zagier_prefix):
        truncated = zagier_prefix.truncate(4)
        assert truncated.precision == 4
        assert dict(truncated.coefficients) == {0: 1, 3: -4, 4: -6}

    def test_format_series(self, zagier_prefix):
        assert format_series(zagier_prefix.truncate(4)) == "1 - 4q^3 - 6q^4 + O(q^5)"
        assert format_series(QExpansion(precision=0)) == "0 + O(q^1)"

    def test_parse_rational(self):
        assert parse_rational("-1/12") == Fraction(-1, 12)
        assert parse_rational("56") == Fraction(56)


class TestLinearOperations:
    def test_additive_identity(self, zagier_prefix):
        zero = QExpansion(precision=16)
        assert add(zagier_prefix, zero) == zagier_prefix

    def test_additive_inverse(self, zagier_prefix):
        assert add(zagier_prefix, scale(-1, zagier_prefix)).is_zero()
        assert (zagier_prefix - zagier_prefix).is_zero()

    def test_precision_is_minimum(self, zagier_prefix):
        short = QExpansion(precision=3, coefficients={3: 4})
        total = add(zagier_prefix, short)
        assert total.precision == 3
        assert dict(total.coefficients) == {0: Fraction(1)}

    def test_scale(self, zagier_prefix):
        assert scale(0, zagier_prefix).is_zero()
        assert scale(1, zagier_prefix) == zagier_prefix
        assert scale(Fraction(1, 2), zagier_prefix)[4] == -3
        assert scale(2, zagier_prefix).precision == 16


class TestSerialization:
    def test_json_layout(self):
        series = QExpansion(precision=4, coefficients={0: Fraction(-1, 12), 3: Fraction(1, 3)})
        assert json.loads(series.to_json()) == {"precision": 4, "coeffs": [[0, "-1/12"], [3, "1/3"]]}

    def test_json_round_trip_keeps_big_integers(self):
        big = Fraction(2 ** 200 + 1, 3 ** 50)
        series = QExpansion(precision=2, coefficients={2: big})
        assert QExpansion.from_json(series.to_json()) == series

    def test_csv_lists_every_exponent(self):
        series = QExpansion(precision=3, coefficients={0: 1, 3: -4})
        assert series.to_csv() == "exponent,value\n0,1/1\n1,0/1\n2,0/1\n3,-4/1\n"

    def test_residue_series_json(self):
        residues = ResidueSeries(p=7, l=1, precision=4, residues={0: 1, 3: 3})
        assert ResidueSeries.from_json(residues.to_json()) == residues


class TestReduceMod:
    @pytest.mark.golden
    def test_zagier_prefix_mod_7(self, zagier_prefix):
        residues = reduce_mod(zagier_prefix, 7, 1)
        assert [r for _, r in residues.table(ZAGIER_EXPONENTS)] == [1, 3, 1, 2, 2, 2, 5, 4, 3]

    @pytest.mark.golden
    def test_zagier_prefix_mod_49(self, zagier_prefix):
        residues = reduce_mod(zagier_prefix, 7, 2)
        assert [r for _, r in residues.table(ZAGIER_EXPONENTS)] == [1, 45, 43, 37, 37, 37, 33, 25, 31]

    def test_rejects_p_in_denominator(self):
        series = QExpansion(precision=5, coefficients={0: 1, 5: Fraction(1, 7)})
        with pytest.raises(PDividesDenominatorError) as info:
            reduce_mod(series, 7, 1)
        assert info.value.exponent == 5

    def test_rational_coefficients(self):
        series = QExpansion(precision=1, coefficients={0: Fraction(-1, 12)})
        # 12 * 4 = 48 = -1 mod 49
        assert reduce_mod(series, 7, 2).residue(0) == 4

    def test_homomorphism(self):
        rng = random.Random(20240601)
        for p, l in [(5, 1), (7, 2), (11, 1), (13, 3)]:
            for _ in range(10):
                a = random_series(rng, 20, p)
                b = random_series(rng, 15, p)
                c = Fraction(rng.randint(-50, 50), rng.choice([1, 2, 3, 4]))
                assert reduce_mod(add(a, b), p, l) == reduce_mod(a, p, l).add(reduce_mod(b, p, l))
                c_residue = reduce_mod(QExpansion(precision=0, coefficients={0: c}), p, l).residue(0)
                assert reduce_mod(scale(c, a), p, l) == reduce_mod(a, p, l).scale(c_residue)


class TestCompare:
    def test_identical_series(self, zagier_prefix):
        residues = reduce_mod(zagier_prefix, 7, 1)
        assert compare(residues, residues) == []

    def test_lists_differing_exponents(self, zagier_prefix):
        other = add(zagier_prefix, QExpansion(precision=16, coefficients={3: 7, 8: 1, 12: 14, 16: 2}))
        assert compare(reduce_mod(zagier_prefix, 7, 1), reduce_mod(other, 7, 1)) == [8, 16]

    def test_up_to_minimum_precision(self):
        a = ResidueSeries(p=5, l=1, precision=10, residues={9: 1})
        b = ResidueSeries(p=5, l=1, precision=4)
        assert compare(a, b) == []

    def test_modulus_mismatch(self, zagier_prefix):
        with pytest.raises(ModulusMismatchError):
            compare(reduce_mod(zagier_prefix, 7, 1), reduce_mod(zagier_prefix, 7, 2))

    def test_certificate_from_series(self, zagier_prefix):
        shifted = add(zagier_prefix, QExpansion(precision=16, coefficients={4: 1}))
        certificate = certify_series_congruence("demo", zagier_prefix, shifted, p=7, l=1)
        assert certificate.verdict == "fail"
        assert [d.to_list() for d in certificate.diffs] == [[4, 1, 2]]
        assert certificate.N == 16
        assert len(certificate.lhs_table) == 17
