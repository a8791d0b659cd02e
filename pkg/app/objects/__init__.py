"""The distinguished subobjects of Delta^{n,k}."""

from objects.standard import (
    boundary,
    face_image,
    horn,
    horn_by_predicate,
    in_horn,
    notation,
    parse_notation,
    terminal,
)

__all__ = [
    "boundary",
    "face_image",
    "horn",
    "horn_by_predicate",
    "in_horn",
    "notation",
    "parse_notation",
    "terminal",
]
