"""The isovariant simplex category and finite C2-posets."""

from gdelta.cospan import Cospan, CospanCompletion, chain_cospan, complete_cospan, factorizations
from gdelta.decompose import Decomposition, decompose, epi_mono
from gdelta.generators import (
    codegeneracy,
    codegeneracy_from,
    coface,
    coface_between,
    coface_into,
    swap,
)
from gdelta.gposets import (
    FinGPoset,
    GPosetMap,
    enumerate_gposet_maps,
    fiber_product,
    isov_product,
    to_gposet,
    to_gposet_map,
)
from gdelta.maps import (
    GDeltaMap,
    canonical_epis,
    compose,
    enumerate_hom,
    identity,
    is_epi,
    is_mono,
    make_map,
    sections,
)
from gdelta.objects import E, S, SimplexObject, Vertex, leq, vertices
from gdelta.relations import RelationReport, check_cosimplicial_relations
from gdelta.thickening import Chain, Thickening, th_map, thicken

__all__ = [
    "Chain",
    "Cospan",
    "CospanCompletion",
    "Decomposition",
    "E",
    "FinGPoset",
    "GDeltaMap",
    "GPosetMap",
    "RelationReport",
    "S",
    "SimplexObject",
    "Thickening",
    "Vertex",
    "canonical_epis",
    "chain_cospan",
    "check_cosimplicial_relations",
    "codegeneracy",
    "codegeneracy_from",
    "coface",
    "coface_between",
    "coface_into",
    "complete_cospan",
    "compose",
    "decompose",
    "enumerate_gposet_maps",
    "enumerate_hom",
    "epi_mono",
    "factorizations",
    "fiber_product",
    "identity",
    "is_epi",
    "is_mono",
    "isov_product",
    "leq",
    "make_map",
    "sections",
    "swap",
    "th_map",
    "thicken",
    "to_gposet",
    "to_gposet_map",
    "vertices",
]
