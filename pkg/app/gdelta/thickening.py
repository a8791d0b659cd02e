"""The thickening th[n]_k = [n]_k x {0 < 1} and its chains."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from gdelta.gposets import FinGPoset, GPosetMap, to_gposet, vertex_id
from gdelta.maps import GDeltaMap
from gdelta.objects import SimplexObject, Vertex

LEVELS = (0, 1)


def level_id(vid: str, level: int) -> str:
    return f"({vid},{level})"


@dataclass(frozen=True)
class Thickening:
    base: SimplexObject
    poset: FinGPoset

    def element(self, v: Vertex, level: int) -> str:
        return level_id(vertex_id(v, self.base), level)


@lru_cache(maxsize=None)
def thicken(obj: SimplexObject) -> Thickening:
    """Componentwise order; the involution acts on the first factor only."""
    base = to_gposet(obj)
    elements = tuple(level_id(a, d) for a in base.elements for d in LEVELS)
    order = frozenset(
        (level_id(a, d), level_id(b, e))
        for a, b in base.order
        for d in LEVELS
        for e in LEVELS
        if d <= e
    )
    involution = tuple((level_id(a, d), level_id(base.act(a), d)) for a in base.elements for d in LEVELS)
    return Thickening(obj, FinGPoset(elements, order, involution))


def th_map(alpha: GDeltaMap) -> GPosetMap:
    """([j,g], d) -> (alpha[j,g], d)."""
    src, tgt = thicken(alpha.src), thicken(alpha.tgt)
    return GPosetMap(
        src.poset,
        tgt.poset,
        tuple(
            (src.element(v, d), tgt.element(alpha(v), d))
            for v in alpha.src.vertices
            for d in LEVELS
        ),
    )


def level_inclusion(obj: SimplexObject, level: int) -> GPosetMap:
    """The inclusion of [n]_k at the given level."""
    th = thicken(obj)
    base = to_gposet(obj)
    return GPosetMap(base, th.poset, tuple((vertex_id(v, obj), th.element(v, level)) for v in obj.vertices))


def level_projection(obj: SimplexObject) -> GPosetMap:
    th = thicken(obj)
    base = to_gposet(obj)
    return GPosetMap(
        th.poset,
        base,
        tuple((th.element(v, d), vertex_id(v, obj)) for v in obj.vertices for d in LEVELS),
    )


@dataclass(frozen=True)
class Chain:
    """A simplex [m]_l -> th[n]_k: vertex j goes to (alpha(j), 0) when j < threshold,
    to (alpha(j), 1) otherwise."""

    alpha: GDeltaMap
    threshold: int

    @property
    def levels(self) -> Tuple[int, ...]:
        return tuple(0 if j < self.threshold else 1 for j in range(self.alpha.src.n + 1))

    def is_injective(self) -> bool:
        h = self.alpha.index_map
        return all(
            h[j] != h[j + 1] or j + 1 == self.threshold for j in range(len(h) - 1)
        )

    def as_gposet_map(self) -> GPosetMap:
        src = self.alpha.src
        th = thicken(self.alpha.tgt)
        levels = self.levels
        return GPosetMap(
            to_gposet(src),
            th.poset,
            tuple(
                (vertex_id(v, src), th.element(self.alpha(v), levels[v.index]))
                for v in src.vertices
            ),
        )
