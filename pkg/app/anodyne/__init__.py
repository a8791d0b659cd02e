"""Cylinder filtrations, retract witnesses and horn derivations."""

from anodyne.derivation import (
    DerivationNode,
    MembershipReport,
    derive_generator,
    derive_horn,
    replay_derivation,
    verify_generator_membership,
)
from anodyne.filtration import (
    Filtration,
    StageReport,
    build_filtration,
    generator_class,
    verify_filtration,
    verify_stage,
)
from anodyne.retract import RetractWitness, retract_witness

__all__ = [
    "DerivationNode",
    "MembershipReport",
    "derive_generator",
    "derive_horn",
    "replay_derivation",
    "verify_generator_membership",
    "Filtration",
    "StageReport",
    "build_filtration",
    "generator_class",
    "verify_filtration",
    "verify_stage",
    "RetractWitness",
    "retract_witness",
]
