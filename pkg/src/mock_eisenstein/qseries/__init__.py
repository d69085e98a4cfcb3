from mock_eisenstein.qseries.certify import certify_residues, certify_series_congruence
from mock_eisenstein.qseries.expansion import QExpansion, add, format_series, scale
from mock_eisenstein.qseries.residues import ResidueSeries, compare, reduce_mod

__all__ = [
    "QExpansion",
    "ResidueSeries",
    "add",
    "certify_residues",
    "certify_series_congruence",
    "compare",
    "format_series",
    "reduce_mod",
    "scale",
]
