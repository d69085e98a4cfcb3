"""Tests for the correction coefficients and the completed-series verifier."""
import json
from fractions import Fraction

import pytest

from mock_eisenstein.completion.correction import (
    CorrectionSeries,
    completed_series,
    correction_coefficient,
    correction_series,
    is_neg_square_mod,
    legendre_reading_support,
)
from mock_eisenstein.completion.verifier import difference_support, scaled_cohen_series, verify_completion
from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.errors import DomainError, UnsupportedPrimeError
from mock_eisenstein.eisenstein.hurwitz import hurwitz_class_number, zagier_series
from mock_eisenstein.numtheory.arithmetic import fundamental_decomposition
from mock_eisenstein.qseries.residues import compare, reduce_mod

TABLE_EXPONENTS = [0, 3, 4, 7, 8, 11, 12, 15, 16]


def residues_at(table: list[tuple[int, int]], exponents: list[int]) -> list[int]:
    lookup = dict(table)
    return [lookup[e] for e in exponents]


class TestCorrectionCoefficients:
    def test_neg_square_classes_mod_7(self):
        assert [m for m in range(7) if is_neg_square_mod(m, 7)] == [0, 3, 5, 6]

    @pytest.mark.parametrize("m,p,expected", [
        (0, 7, Fraction(-4)),
        (3, 7, Fraction(4)),
        (4, 7, Fraction(0)),
        (7, 7, Fraction(6)),
        (12, 7, Fraction(16)),
        (0, 5, Fraction(-3)),
        (3, 5, Fraction(0)),
        (4, 5, Fraction(6)),
        (20, 5, Fraction(12)),
        (75, 5, Fraction(24)),
        (3, 11, Fraction(0)),
        (7, 11, Fraction(12)),
        (1, 13, Fraction(0)),
    ])
    def test_examples(self, m, p, expected):
        assert correction_coefficient(m, p) == expected

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_matches_six_and_twelve_hurwitz_when_p_misses_f(self, p):
        for m in range(1, 120):
            if m % 4 not in (0, 3) or fundamental_decomposition(m).f % p == 0:
                continue
            if m % p == 0:
                expected = 6 * hurwitz_class_number(m)
            elif is_neg_square_mod(m, p):
                expected = 12 * hurwitz_class_number(m)
            else:
                expected = Fraction(0)
            assert correction_coefficient(m, p) == expected, m

    def test_p_dividing_f_departs_from_six_hurwitz_mod_p_squared(self):
        a_75 = correction_coefficient(75, 5)
        six_h = 6 * hurwitz_class_number(75)
        assert six_h == 14
        assert (a_75 - six_h) % 5 == 0
        assert (a_75 - six_h) % 25 != 0

    def test_rejects_three(self):
        with pytest.raises(UnsupportedPrimeError):
            correction_coefficient(3, 3)

    def test_support_is_neg_squares(self):
        for p in (5, 7, 11, 13):
            series = correction_series(p, 200)
            assert all(is_neg_square_mod(m, p) for m in series.support)
            assert all(12 % v.denominator == 0 for v in series.values.values())

    def test_series_validates_support(self):
        with pytest.raises(DomainError):
            CorrectionSeries(p=7, precision=10, values={4: Fraction(1)})
        with pytest.raises(DomainError):
            CorrectionSeries(p=7, precision=10, values={3: Fraction(1, 7)})

    def test_completed_series_kills_q3_at_7(self):
        assert completed_series(7, 16)[3] == 0
        assert completed_series(7, 16)[0] == -3

    def test_legendre_reading_differs(self):
        neg_square = {m for m in correction_series(7, 40).support if m > 0}
        legendre = set(legendre_reading_support(7, 40))
        # 3 is -2^2 mod 7 but not a square mod 7
        assert 3 in neg_square and 3 not in legendre
        assert neg_square != legendre


class TestVerifyCompletion:
    @pytest.mark.golden
    def test_mod_7_table(self):
        certificate = verify_completion(7, 1, 16)
        assert certificate.passed
        assert certificate.weight_twice_k == 15
        assert residues_at(certificate.lhs_table, TABLE_EXPONENTS) == [4, 0, 1, 1, 2, 2, 0, 4, 3]
        assert certificate.lhs_table == certificate.rhs_table

    @pytest.mark.golden
    def test_mod_49_table(self):
        certificate = verify_completion(7, 2, 16)
        assert certificate.passed
        assert certificate.weight_twice_k == 87
        assert residues_at(certificate.rhs_table, TABLE_EXPONENTS) == [46, 0, 43, 43, 37, 37, 0, 25, 31]

    @pytest.mark.golden
    def test_uncorrected_tables(self):
        lhs = reduce_mod(zagier_series(16), 7, 1)
        assert [r for _, r in lhs.table(TABLE_EXPONENTS)] == [1, 3, 1, 2, 2, 2, 5, 4, 3]
        _, rhs = scaled_cohen_series(7, 1, 16)
        assert compare(lhs, reduce_mod(rhs, 7, 1)) == [0, 3, 7, 12]

    @pytest.mark.golden
    def test_difference_support(self):
        assert difference_support(7, 1, 16) == [0, 3, 7, 12]

    def test_uncorrected_certificate_fails(self):
        certificate = verify_completion(7, 1, 16, uncorrected=True)
        assert certificate.verdict == "fail"
        assert certificate.check == "completion-uncorrected"
        assert certificate.diff_exponents() == [0, 3, 7, 12]
        assert certificate.corrected_exponents == []

    def test_certificate_json(self):
        certificate = verify_completion(7, 1, 16)
        data = json.loads(certificate.to_json())
        assert data["p"] == 7 and data["l"] == 1 and data["N"] == 16
        assert data["weight_twice_k"] == 15
        assert data["verdict"] == "pass"
        assert data["diffs"] == []
        assert data["corrected_exponents"] == [0, 3, 7, 12]
        assert CongruenceCertificate.from_dict(data).to_dict() == data

    def test_corrected_exponents_are_the_support(self):
        certificate = verify_completion(7, 1, 16)
        assert certificate.corrected_exponents == correction_series(7, 16).support
        assert 3 in certificate.corrected_exponents and 12 in certificate.corrected_exponents

    def test_rejects_small_primes(self):
        with pytest.raises(UnsupportedPrimeError):
            verify_completion(3, 1, 16)

    def test_deep_levels_need_opt_in(self):
        with pytest.raises(DomainError):
            verify_completion(5, 3, 4)

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_level_one_small_precision(self, p):
        assert verify_completion(p, 1, 60).passed

    @pytest.mark.parametrize("p,l,N", [(5, 2, 100), (5, 2, 200), (7, 2, 200), (13, 2, 100)])
    def test_level_two_through_p_dividing_f(self, p, l, N):
        certificate = verify_completion(p, l, N)
        assert certificate.passed, certificate.summary_line()

    def test_level_three_with_opt_in(self):
        assert verify_completion(5, 3, 60, allow_deep=True).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    @pytest.mark.parametrize("l,N", [(1, 200), (2, 100)])
    def test_property_grid(self, p, l, N):
        certificate = verify_completion(p, l, N, workers=2)
        assert certificate.passed, certificate.summary_line()
        assert all(is_neg_square_mod(m, p) for m in difference_support(p, l, N, workers=2))
