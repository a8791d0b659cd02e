"""Configuration data for isovset."""

from config.checks import DEFAULT_CHECK_SUITE
from config.formats import DOCUMENT_FORMATS, EXPORT_FORMATS, FACE_KEY, LOG_FORMAT, SWAP_KEY
from config.limits import DEFAULT_MAX_N, MAX_N, SEARCH_LIMITS, TOLERANCE, require_bound

__all__ = [
    "DEFAULT_CHECK_SUITE",
    "DEFAULT_MAX_N",
    "DOCUMENT_FORMATS",
    "EXPORT_FORMATS",
    "FACE_KEY",
    "LOG_FORMAT",
    "MAX_N",
    "SEARCH_LIMITS",
    "SWAP_KEY",
    "TOLERANCE",
    "require_bound",
]
