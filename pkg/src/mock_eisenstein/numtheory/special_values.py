"""Values of zeta and of Dirichlet L-functions at non-positive integers."""

from fractions import Fraction

from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.numtheory.arithmetic import QuadraticCharacter
from mock_eisenstein.numtheory.bernoulli import bernoulli, generalized_bernoulli


def zeta_nonpositive(s: int) -> Fraction:
    """zeta(s) = -B_{1-s}/(1-s) for odd s <= -1."""
    if s > -1 or s % 2 == 0:
        raise DomainError(f"zeta_nonpositive expects an odd integer s <= -1, got {s}")
    return -bernoulli(1 - s) / (1 - s)


def dirichlet_L_nonpositive(one_minus_n: int, chi: QuadraticCharacter) -> Fraction:
    """L(1-n, chi) = -B_{n,chi}/n for n >= 1."""
    if one_minus_n > 0:
        raise DomainError(f"dirichlet_L_nonpositive expects 1-n <= 0, got {one_minus_n}")
    n = 1 - one_minus_n
    return -generalized_bernoulli(n, chi) / n
