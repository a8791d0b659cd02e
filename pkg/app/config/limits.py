"""Enumeration bounds and numeric tolerances."""

import logging
import os

from exceptions import IndexOutOfRange

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6


def _read_max_n() -> int:
    raw = os.environ.get("ISOSET_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring ISOSET_MAX_N=%r, using %d", raw, DEFAULT_MAX_N)
        return DEFAULT_MAX_N
    if value < 0:
        logger.warning("Ignoring negative ISOSET_MAX_N=%d", value)
        return DEFAULT_MAX_N
    return value


MAX_N = _read_max_n()

SEARCH_LIMITS = {
    # elementary homotopies allowed per side of an equivalence
    "homotopy_depth": 1,
    # level tried first by the retract search when no table applies
    "retract_levels": (1, 0),
}

TOLERANCE = 1e-12


def require_bound(max_n: int) -> int:
    """Refuse enumeration bounds above MAX_N."""
    if max_n > MAX_N:
        raise IndexOutOfRange(f"bound {max_n} exceeds ISOSET_MAX_N={MAX_N}")
    return max_n
