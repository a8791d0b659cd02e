"""Thickenings, interval presheaves and the cylinder IX."""

from cylinder.bundle import (
    CylinderBundle,
    ExactnessReport,
    cylinder,
    cylinder_inclusion,
    cylinder_map,
    verify_exactness,
)
from cylinder.interval import interval_of_representable, top_census
from gdelta.thickening import Thickening, th_map, thicken

__all__ = [
    "CylinderBundle",
    "ExactnessReport",
    "cylinder",
    "cylinder_inclusion",
    "cylinder_map",
    "verify_exactness",
    "interval_of_representable",
    "top_census",
    "Thickening",
    "th_map",
    "thicken",
]
