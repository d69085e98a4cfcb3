from mock_eisenstein.eisenstein.cohen import cohen_coefficient, cohen_series
from mock_eisenstein.eisenstein.hurwitz import HurwitzValue, hurwitz_forms, hurwitz_L, zagier_series
from mock_eisenstein.eisenstein.koblitz import koblitz_congruence_check, mock_koblitz_check
from mock_eisenstein.eisenstein.weight_two import weight_two_congruence_check, weight_two_series
from mock_eisenstein.eisenstein.weights import HalfIntWeight

__all__ = [
    "HalfIntWeight",
    "HurwitzValue",
    "cohen_coefficient",
    "cohen_series",
    "hurwitz_L",
    "hurwitz_forms",
    "koblitz_congruence_check",
    "mock_koblitz_check",
    "weight_two_congruence_check",
    "weight_two_series",
    "zagier_series",
]
