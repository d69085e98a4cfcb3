from mock_eisenstein.numtheory.arithmetic import (
    Decomposition,
    QuadraticCharacter,
    divisors,
    factorize,
    fundamental_decomposition,
    is_fundamental_discriminant,
    kronecker,
    moebius,
    negative_fundamental_discriminants,
    sigma,
)
from mock_eisenstein.numtheory.bernoulli import (
    bernoulli,
    bernoulli_polynomial,
    configure_bernoulli_cache,
    generalized_bernoulli,
)
from mock_eisenstein.numtheory.special_values import dirichlet_L_nonpositive, zeta_nonpositive

__all__ = [
    "Decomposition",
    "QuadraticCharacter",
    "bernoulli",
    "bernoulli_polynomial",
    "configure_bernoulli_cache",
    "dirichlet_L_nonpositive",
    "divisors",
    "factorize",
    "fundamental_decomposition",
    "generalized_bernoulli",
    "is_fundamental_discriminant",
    "kronecker",
    "moebius",
    "negative_fundamental_discriminants",
    "sigma",
    "zeta_nonpositive",
]
