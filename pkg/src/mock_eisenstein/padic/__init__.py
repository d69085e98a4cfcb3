from mock_eisenstein.padic.lp_values import (
    kummer_index,
    lp_special_value,
    lp_zero_cases,
    teichmuller_exponent_identity,
)
from mock_eisenstein.padic.residue import Residue, reduce_rational, teichmuller

__all__ = [
    "Residue",
    "kummer_index",
    "lp_special_value",
    "lp_zero_cases",
    "reduce_rational",
    "teichmuller",
    "teichmuller_exponent_identity",
]
