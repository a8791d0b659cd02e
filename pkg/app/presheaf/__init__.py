"""Finite isovariant simplicial sets, their maps and colimits."""

from presheaf.constructions import (
    coproduct,
    generated,
    image,
    is_sub,
    pushout,
    representable,
    representable_simplex,
    restrict,
    skeleton,
    sub_intersection,
    sub_union,
    yoneda_map,
)
from presheaf.isosset import IsoSSet, Simplex, empty, normal_form, pull, simplex_count, validate
from presheaf.maps import PresheafMap, compose, identity, inclusion, is_mono, map_from_generators
from presheaf.search import find_isomorphism, hom_presheaf_maps, isomorphic, search_maps

__all__ = [
    "coproduct",
    "generated",
    "image",
    "is_sub",
    "pushout",
    "representable",
    "representable_simplex",
    "restrict",
    "skeleton",
    "sub_intersection",
    "sub_union",
    "yoneda_map",
    "IsoSSet",
    "Simplex",
    "empty",
    "normal_form",
    "pull",
    "simplex_count",
    "validate",
    "PresheafMap",
    "compose",
    "identity",
    "inclusion",
    "is_mono",
    "map_from_generators",
    "find_isomorphism",
    "hom_presheaf_maps",
    "isomorphic",
    "search_maps",
]
