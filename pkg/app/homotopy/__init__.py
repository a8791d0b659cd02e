"""Admissible horns, elementary homotopies and normality."""

from homotopy.admissibility import is_admissible, is_admissible_by_definition
from homotopy.deformation import Deformation, certify_horn, deformation
from homotopy.fillers import horn_fillers, horn_filling_report
from homotopy.homotopies import (
    EquivalenceResult,
    Homotopy,
    find_elementary_homotopy,
    homotopy_classes,
    is_elementary_homotopy_equivalence,
)
from homotopy.normality import aut_group, is_dominant, is_normal, is_normal_mono

__all__ = [
    "is_admissible",
    "is_admissible_by_definition",
    "Deformation",
    "certify_horn",
    "deformation",
    "horn_fillers",
    "horn_filling_report",
    "EquivalenceResult",
    "Homotopy",
    "find_elementary_homotopy",
    "homotopy_classes",
    "is_elementary_homotopy_equivalence",
    "aut_group",
    "is_dominant",
    "is_normal",
    "is_normal_mono",
]
