from mock_eisenstein.completion.correction import (
    CorrectionSeries,
    completed_series,
    correction_coefficient,
    correction_series,
    is_neg_square_mod,
    legendre_reading_support,
)
from mock_eisenstein.completion.verifier import difference_support, scaled_cohen_series, verify_completion

__all__ = [
    "CorrectionSeries",
    "completed_series",
    "correction_coefficient",
    "correction_series",
    "difference_support",
    "is_neg_square_mod",
    "legendre_reading_support",
    "scaled_cohen_series",
    "verify_completion",
]
