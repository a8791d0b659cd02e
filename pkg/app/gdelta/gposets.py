"""Finite C2-posets, isovariant maps, isovariant and fiber products."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from exceptions import (
    CompositionMismatch,
    EquivarianceViolation,
    IsovarianceViolation,
    OrderViolation,
)
from gdelta.maps import GDeltaMap
from gdelta.objects import SimplexObject, Vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinGPoset:
    """A finite poset with an order-automorphism of order at most two."""

    elements: Tuple[str, ...]
    order: FrozenSet[Tuple[str, str]]
    involution: Tuple[Tuple[str, str], ...]

    @cached_property
    def action(self) -> Dict[str, str]:
        return dict(self.involution)

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.order

    def act(self, a: str) -> str:
        return self.action[a]

    def is_fixed(self, a: str) -> bool:
        return self.action[a] == a

    def validate(self) -> None:
        elements = set(self.elements)
        if set(self.action) != elements or set(self.action.values()) != elements:
            raise EquivarianceViolation("involution is not a permutation of the elements")
        for a in self.elements:
            if not self.leq(a, a):
                raise OrderViolation(f"order is not reflexive at {a}")
            if self.act(self.act(a)) != a:
                raise EquivarianceViolation(f"involution has order > 2 at {a}")
        for a, b in self.order:
            if a != b and (b, a) in self.order:
                raise OrderViolation(f"order is not antisymmetric on {a}, {b}")
            if (self.act(a), self.act(b)) not in self.order:
                raise EquivarianceViolation("involution does not preserve the order")
            for c in self.elements:
                if (b, c) in self.order and (a, c) not in self.order:
                    raise OrderViolation(f"order is not transitive on {a}, {b}, {c}")

    def linear_extension(self) -> List[str]:
        return sorted(self.elements, key=lambda a: sum(1 for b in self.elements if self.leq(b, a)))


@dataclass(frozen=True)
class GPosetMap:
    src: FinGPoset
    tgt: FinGPoset
    table: Tuple[Tuple[str, str], ...]

    @cached_property
    def mapping(self) -> Dict[str, str]:
        return dict(self.table)

    def __call__(self, a: str) -> str:
        return self.mapping[a]

    def validate(self) -> None:
        for a in self.src.elements:
            image = self(a)
            if self.src.is_fixed(a) != self.tgt.is_fixed(image):
                raise IsovarianceViolation(f"{a} -> {image} changes isotropy")
            if self(self.src.act(a)) != self.tgt.act(image):
                raise EquivarianceViolation(f"{a} -> {image} is not equivariant")
        for a, b in self.src.order:
            if not self.tgt.leq(self(a), self(b)):
                raise OrderViolation(f"{a} <= {b} is not preserved")


def make_gposet_map(src: FinGPoset, tgt: FinGPoset, mapping: Mapping[str, str]) -> GPosetMap:
    f = GPosetMap(src, tgt, tuple((a, mapping[a]) for a in src.elements))
    f.validate()
    return f


def identity_gmap(poset: FinGPoset) -> GPosetMap:
    return GPosetMap(poset, poset, tuple((a, a) for a in poset.elements))


def compose_gmaps(g: GPosetMap, f: GPosetMap) -> GPosetMap:
    if f.tgt != g.src:
        raise CompositionMismatch("poset maps are not composable")
    return GPosetMap(f.src, g.tgt, tuple((a, g(f(a))) for a in f.src.elements))


def vertex_id(v: Vertex, obj: SimplexObject) -> str:
    return f"{v.index},{v.branch}" if v.index < obj.k else f"{v.index}"


def parse_vertex_id(text: str) -> Vertex:
    parts = text.split(",")
    return Vertex(int(parts[0]), parts[1] if len(parts) > 1 else "e")


def to_gposet(obj: SimplexObject) -> FinGPoset:
    ids = [vertex_id(v, obj) for v in obj.vertices]
    order = frozenset(
        (vertex_id(u, obj), vertex_id(v, obj))
        for u in obj.vertices
        for v in obj.vertices
        if obj.leq(u, v)
    )
    involution = tuple((vertex_id(v, obj), vertex_id(obj.swap(v), obj)) for v in obj.vertices)
    return FinGPoset(tuple(ids), order, involution)


def to_gposet_map(theta: GDeltaMap) -> GPosetMap:
    return GPosetMap(
        to_gposet(theta.src),
        to_gposet(theta.tgt),
        tuple(
            (vertex_id(v, theta.src), vertex_id(theta(v), theta.tgt)) for v in theta.src.vertices
        ),
    )


def _pair_id(a: str, b: str) -> str:
    return f"<{a}|{b}>"


def _isov_product(A: FinGPoset, B: FinGPoset) -> Tuple[FinGPoset, GPosetMap, GPosetMap]:
    pairs = [(a, b) for a in A.elements for b in B.elements if A.is_fixed(a) == B.is_fixed(b)]
    ids = tuple(_pair_id(a, b) for a, b in pairs)
    order = frozenset(
        (_pair_id(a, b), _pair_id(c, d))
        for a, b in pairs
        for c, d in pairs
        if A.leq(a, c) and B.leq(b, d)
    )
    involution = tuple((_pair_id(a, b), _pair_id(A.act(a), B.act(b))) for a, b in pairs)
    P = FinGPoset(ids, order, involution)
    p1 = GPosetMap(P, A, tuple((_pair_id(a, b), a) for a, b in pairs))
    p2 = GPosetMap(P, B, tuple((_pair_id(a, b), b) for a, b in pairs))
    return P, p1, p2


def isov_product(A: FinGPoset, B: FinGPoset) -> FinGPoset:
    """Pairs with equal isotropy, componentwise order, diagonal action."""
    return _isov_product(A, B)[0]


def fiber_product(f: GPosetMap, h: GPosetMap) -> Tuple[FinGPoset, GPosetMap, GPosetMap]:
    """The equalizing sub-poset of the isovariant product with its projections."""
    if f.tgt != h.tgt:
        raise CompositionMismatch("fiber product needs a common target")
    A, B = f.src, h.src
    pairs = [(a, b) for a in A.elements for b in B.elements if f(a) == h(b)]
    keep = {_pair_id(a, b) for a, b in pairs}
    P, p1, p2 = _isov_product(A, B)
    sub = sub_poset(P, keep)
    proj1 = GPosetMap(sub, A, tuple(pair for pair in p1.table if pair[0] in keep))
    proj2 = GPosetMap(sub, B, tuple(pair for pair in p2.table if pair[0] in keep))
    return sub, proj1, proj2


def enumerate_gposet_maps(
    src: FinGPoset, tgt: FinGPoset, fixed: Optional[Mapping[str, str]] = None
) -> Iterator[GPosetMap]:
    """All isovariant maps src -> tgt agreeing with `fixed`, by backtracking."""
    order = src.linear_extension()
    fixed = dict(fixed or {})

    def candidates(a: str, assignment: Dict[str, str]) -> Iterator[str]:
        options = [fixed[a]] if a in fixed else tgt.elements
        for c in options:
            if src.is_fixed(a) != tgt.is_fixed(c):
                continue
            partner = src.act(a)
            if partner in assignment and assignment[partner] != tgt.act(c):
                continue
            if all(
                (not src.leq(b, a) or tgt.leq(img, c)) and (not src.leq(a, b) or tgt.leq(c, img))
                for b, img in assignment.items()
            ):
                yield c

    def extend(position: int, assignment: Dict[str, str]) -> Iterator[GPosetMap]:
        if position == len(order):
            yield GPosetMap(src, tgt, tuple((a, assignment[a]) for a in src.elements))
            return
        a = order[position]
        if a in assignment:
            yield from extend(position + 1, assignment)
            return
        for c in candidates(a, assignment):
            assignment[a] = c
            partner = src.act(a)
            added_partner = partner != a and partner not in assignment
            if added_partner:
                assignment[partner] = tgt.act(c)
                if not all(
                    (not src.leq(b, partner) or tgt.leq(img, assignment[partner]))
                    and (not src.leq(partner, b) or tgt.leq(assignment[partner], img))
                    for b, img in assignment.items()
                ) or (partner in fixed and fixed[partner] != assignment[partner]):
                    del assignment[partner]
                    del assignment[a]
                    continue
            yield from extend(position + 1, assignment)
            if added_partner:
                del assignment[partner]
            del assignment[a]

    yield from extend(0, {})


def count_gposet_maps(src: FinGPoset, tgt: FinGPoset) -> int:
    return sum(1 for _ in enumerate_gposet_maps(src, tgt))


def product_universal_maps(
    P: FinGPoset, p1: GPosetMap, p2: GPosetMap, f1: GPosetMap, f2: GPosetMap
) -> List[GPosetMap]:
    """Maps u into P with p1 u = f1 and p2 u = f2 (one expected for a limit)."""
    matches = []
    for u in enumerate_gposet_maps(f1.src, P):
        if all(p1(u(a)) == f1(a) and p2(u(a)) == f2(a) for a in f1.src.elements):
            matches.append(u)
    return matches


def sub_poset(poset: FinGPoset, keep: Iterable[str]) -> FinGPoset:
    kept = set(keep)
    return FinGPoset(
        tuple(a for a in poset.elements if a in kept),
        frozenset((a, b) for a, b in poset.order if a in kept and b in kept),
        tuple((a, b) for a, b in poset.involution if a in kept),
    )
