"""Kubota-Leopoldt p-adic L-values at the special points used by the congruences.

Only the interpolation identity

    L_p(1 - n, chi omega^n) = (1 - chi(p) p^(n-1)) L(1 - n, chi),   n >= 1,

is evaluated; L_p is never treated as a function of a p-adic variable.
"""

from fractions import Fraction

from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.numtheory.arithmetic import QuadraticCharacter
from mock_eisenstein.numtheory.special_values import dirichlet_L_nonpositive
from mock_eisenstein.padic.residue import require_odd_prime, teichmuller


def lp_special_value(n: int, chi: QuadraticCharacter, p: int) -> Fraction:
    """(1 - chi(p) p^(n-1)) L(1 - n, chi)."""
    if n < 1:
        raise DomainError(f"lp_special_value expects n >= 1, got {n}")
    require_odd_prime(p)
    euler_factor = 1 - chi(p) * p ** (n - 1)
    return euler_factor * dirichlet_L_nonpositive(1 - n, chi)


def lp_zero_cases(chi: QuadraticCharacter, p: int) -> Fraction:
    """L_p(0, chi omega): 2L(0, chi) if chi(p) = -1, L(0, chi) if chi(p) = 0, 0 if chi(p) = 1."""
    require_odd_prime(p)
    l_zero = dirichlet_L_nonpositive(0, chi)
    match chi(p):
        case -1:
            return 2 * l_zero
        case 0:
            return l_zero
        case _:
            return Fraction(0)


def kummer_index(p: int, l: int) -> int:
    """n = 1 + p^(l-1) (p-1), the index paired with n = 1 modulo p^(l-1)(p-1)."""
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    return 1 + p ** (l - 1) * (p - 1)


def teichmuller_exponent_identity(p: int, l: int) -> bool:
    """omega(a)^(1 + p^(l-1)(p-1)) = omega(a) mod p^l for every unit a mod p."""
    exponent = kummer_index(p, l)
    modulus = p ** l
    for a in range(1, p):
        omega = teichmuller(a, p, l).value
        if pow(omega, exponent, modulus) != omega:
            return False
    return True
