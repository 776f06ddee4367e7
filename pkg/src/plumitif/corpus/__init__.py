"""Synthetic gold-annotated corpus generation and evaluation harnesses."""

from .evaluation import (
    DistrictErrorRates,
    ErrorRateReport,
    ExtractionReport,
    evaluate_error_rates,
    evaluate_extraction,
    format_rate,
)
from .generator import (
    FIGURE_EDGE_LINES,
    GoldPlumitif,
    OracleTagger,
    default_store,
    render_conviction_lines,
    synthesize,
)
from .profiles import DEFAULT_PROFILES, DistrictProfile, load_profiles

__all__ = [
    "DEFAULT_PROFILES",
    "DistrictErrorRates",
    "DistrictProfile",
    "ErrorRateReport",
    "ExtractionReport",
    "FIGURE_EDGE_LINES",
    "GoldPlumitif",
    "OracleTagger",
    "default_store",
    "evaluate_error_rates",
    "evaluate_extraction",
    "format_rate",
    "load_profiles",
    "render_conviction_lines",
    "synthesize",
]
