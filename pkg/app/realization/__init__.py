"""Geometric realization, Euler characteristics and mesh export."""

from realization.geometry import (
    chains,
    euler_characteristic,
    include_real,
    naturality_residual,
    random_point,
    realize,
    realize_cellwise,
    theta_star,
    theta_star_real,
)
from realization.mesh import Mesh, disjoint_union, export_obj, export_off, parse_off, simplicial_mesh

__all__ = [
    "Mesh",
    "chains",
    "disjoint_union",
    "euler_characteristic",
    "export_obj",
    "export_off",
    "include_real",
    "naturality_residual",
    "parse_off",
    "random_point",
    "realize",
    "realize_cellwise",
    "simplicial_mesh",
    "theta_star",
    "theta_star_real",
]
