"""Tests for residues mod p^l, Teichmueller lifts, p-adic L-values and the proof-step checks."""
from fractions import Fraction

import pytest

from mock_eisenstein.core.errors import DomainError, PDividesDenominatorError, UnsupportedPrimeError
from mock_eisenstein.numtheory.arithmetic import QuadraticCharacter, negative_fundamental_discriminants
from mock_eisenstein.padic.checks import kummer_chain_check, proof_coefficient_congruence, zeta_scaling_check
from mock_eisenstein.padic.lp_values import (
    kummer_index,
    lp_special_value,
    lp_zero_cases,
    teichmuller_exponent_identity,
)
from mock_eisenstein.padic.residue import Residue, reduce_rational, teichmuller


class TestReduceRational:
    def test_examples(self):
        assert reduce_rational(Fraction(-1, 12), 7, 2).value == 4
        assert reduce_rational(-3, 7, 1).value == 4
        assert reduce_rational(Fraction(1, 2), 5, 1).value == 3

    def test_rejects_p_in_denominator(self):
        with pytest.raises(PDividesDenominatorError):
            reduce_rational(Fraction(1, 7), 7, 1)

    def test_rejects_level_zero(self):
        with pytest.raises(DomainError):
            reduce_rational(1, 7, 0)

    def test_residue_is_canonical(self):
        with pytest.raises(DomainError):
            Residue(p=7, l=1, value=7)
        assert int(Residue(p=7, l=2, value=48)) == 48


class TestTeichmuller:
    def test_example(self):
        assert teichmuller(2, 7, 2).value == 30

    @pytest.mark.parametrize("p,l", [(3, 2), (5, 1), (5, 3), (7, 2), (11, 2)])
    def test_roots_of_unity(self, p, l):
        modulus = p ** l
        for a in range(1, p):
            omega = teichmuller(a, p, l).value
            assert omega % p == a
            assert pow(omega, p - 1, modulus) == 1

    def test_minus_one(self):
        assert teichmuller(6, 7, 3).value == 7 ** 3 - 1

    def test_rejects_non_unit(self):
        with pytest.raises(DomainError):
            teichmuller(14, 7, 1)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    @pytest.mark.parametrize("l", [1, 2, 3])
    def test_exponent_identity(self, p, l):
        assert teichmuller_exponent_identity(p, l)


class TestLpValues:
    def test_kummer_index(self):
        assert kummer_index(7, 1) == 7
        assert kummer_index(7, 2) == 43
        with pytest.raises(DomainError):
            kummer_index(7, 0)

    @pytest.mark.parametrize("p,expected", [
        (7, Fraction(0)),      # chi_-3(7) = 1
        (5, Fraction(2, 3)),   # chi_-3(5) = -1
        (3, Fraction(1, 3)),   # chi_-3(3) = 0
    ])
    def test_zero_cases(self, p, expected):
        chi = QuadraticCharacter(-3)
        assert lp_zero_cases(chi, p) == expected

    def test_case_table_matches_interpolation(self):
        for chi in negative_fundamental_discriminants(100):
            for p in (3, 5, 7, 11):
                assert lp_zero_cases(chi, p) == lp_special_value(1, chi, p)

    def test_special_value_euler_factor(self):
        chi = QuadraticCharacter(-4)
        # (1 - chi(5) 5^2) L(-2, chi_-4), chi_-4(5) = 1, L(-2, chi_-4) = -1/2
        assert lp_special_value(3, chi, 5) == -24 * Fraction(-1, 2)

    def test_rejects_composite(self):
        with pytest.raises(UnsupportedPrimeError):
            lp_special_value(1, QuadraticCharacter(-3), 15)


class TestZetaScaling:
    @pytest.mark.parametrize("p", [5, 7])
    @pytest.mark.parametrize("l", [1, 2])
    def test_passes(self, p, l):
        certificate = zeta_scaling_check(p, l)
        assert certificate.passed
        assert certificate.check == "zeta"

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    @pytest.mark.parametrize("l", [1, 2, 3])
    def test_full_grid(self, p, l):
        assert zeta_scaling_check(p, l).passed

    def test_rejects_three(self):
        with pytest.raises(UnsupportedPrimeError):
            zeta_scaling_check(3, 1)


class TestKummerChain:
    def test_small_grid(self):
        for chi in negative_fundamental_discriminants(40):
            for p in (5, 7):
                certificate = kummer_chain_check(chi, p, 1)
                assert certificate.passed, certificate.summary_line()
                assert "agrees with the interpolation identity: True" in certificate.notes[0]

    @pytest.mark.slow
    def test_full_grid(self):
        for chi in negative_fundamental_discriminants(100):
            for p in (5, 7):
                for l in (1, 2):
                    assert kummer_chain_check(chi, p, l).passed

    def test_rejects_three(self):
        with pytest.raises(UnsupportedPrimeError):
            kummer_chain_check(QuadraticCharacter(-4), 3, 1)


class TestProofCoefficientCongruence:
    def test_example(self):
        certificate = proof_coefficient_congruence(4, 7, 1)
        assert certificate.passed
        assert certificate.weight_twice_k == 15

    def test_grid_level_one(self):
        for m in range(3, 101):
            if m % 4 in (0, 3):
                assert proof_coefficient_congruence(m, 7, 1).passed

    @pytest.mark.slow
    def test_grid_level_two(self):
        for m in range(3, 101):
            if m % 4 in (0, 3):
                assert proof_coefficient_congruence(m, 7, 2).passed

    def test_p_dividing_f_is_flagged(self):
        # 75 = 3 * 5^2
        certificate = proof_coefficient_congruence(75, 5, 1)
        assert certificate.diffs == []
        assert any(note.startswith("flagged: p divides f") for note in certificate.notes)

    @pytest.mark.parametrize("m", [0, 5, 6, -4])
    def test_rejects_invalid_exponent(self, m):
        with pytest.raises(DomainError):
            proof_coefficient_congruence(m, 7, 1)
