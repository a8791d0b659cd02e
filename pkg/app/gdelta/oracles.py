"""Brute-force oracles the fast paths are checked against."""

from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from gdelta.maps import GDeltaMap
from gdelta.objects import BRANCHES, SimplexObject, Vertex


def order_by_closure(obj: SimplexObject) -> FrozenSet[Tuple[Vertex, Vertex]]:
    """The order on [n]_k as the closure of [n] x {e, s} after merging real pairs."""
    merged = nx.DiGraph()
    for branch in BRANCHES:
        for j in range(obj.n + 1):
            merged.add_node(obj.vertex(j, branch))
            if j < obj.n:
                merged.add_edge(obj.vertex(j, branch), obj.vertex(j + 1, branch))
    closure = nx.transitive_closure(merged, reflexive=True)
    return frozenset(closure.edges)


def naive_hom(src: SimplexObject, tgt: SimplexObject) -> List[GDeltaMap]:
    """Every vertex function src -> tgt satisfying the three defining conditions.

    Walks all vertex functions, cutting a branch as soon as an assigned pair
    breaks one of the conditions; no band or branch structure is assumed.
    """
    domain = list(src.vertices)
    src_order = order_by_closure(src)
    tgt_order = order_by_closure(tgt)
    found = []

    def consistent(assignment: Dict[Vertex, Vertex], v: Vertex) -> bool:
        image = assignment[v]
        if src.is_real(v.index) != tgt.is_real(image.index):
            return False
        partner = src.swap(v)
        if partner in assignment and assignment[partner] != tgt.swap(image):
            return False
        for u, w in assignment.items():
            if (u, v) in src_order and (w, image) not in tgt_order:
                return False
            if (v, u) in src_order and (image, w) not in tgt_order:
                return False
        return True

    def extend(position: int, assignment: Dict[Vertex, Vertex]) -> None:
        if position == len(domain):
            images = tuple(assignment[Vertex(j)] for j in range(src.n + 1))
            found.append(GDeltaMap(src, tgt, images))
            return
        v = domain[position]
        for candidate in tgt.vertices:
            assignment[v] = candidate
            if consistent(assignment, v):
                extend(position + 1, assignment)
            del assignment[v]

    extend(0, {})
    found.sort(key=lambda m: m.images)
    return found
