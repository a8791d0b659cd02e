"""Morphisms of the isovariant simplex category.

A morphism is stored by the images of its e-branch vertices; the image of (j, s) is
the swap of the image of (j, e). Validation still walks every vertex of both branches.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from exceptions import (
    CompositionMismatch,
    EquivarianceViolation,
    IsovarianceViolation,
    NotEpi,
    OrderViolation,
)
from gdelta.objects import E, S, SimplexObject, Vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GDeltaMap:
    """An isovariant, equivariant, order-preserving map src -> tgt."""

    src: SimplexObject
    tgt: SimplexObject
    images: Tuple[Vertex, ...]

    def __call__(self, v: Vertex) -> Vertex:
        image = self.images[v.index]
        if v.branch == S and v.index < self.src.k:
            return self.tgt.swap(image)
        return image

    def __str__(self) -> str:
        body = " ".join(str(v) for v in self.images)
        return f"{self.src}->{self.tgt} [{body}]"

    @property
    def index_map(self) -> Tuple[int, ...]:
        return tuple(v.index for v in self.images)

    @property
    def twisted(self) -> bool:
        """True when the free images sit on the s branch."""
        return self.src.k >= 1 and self.images[0].branch == S

    def vertex_table(self) -> Dict[Vertex, Vertex]:
        return {v: self(v) for v in self.src.vertices}

    def is_mono(self) -> bool:
        return len(set(self.index_map)) == len(self.images)

    def is_epi(self) -> bool:
        return set(self.index_map) == set(range(self.tgt.n + 1))

    def is_iso(self) -> bool:
        return self.src == self.tgt and self.is_mono()

    def missing_indices(self) -> Tuple[int, ...]:
        hit = set(self.index_map)
        return tuple(i for i in range(self.tgt.n + 1) if i not in hit)

    def to_dict(self) -> dict:
        return {
            "src": [self.src.n, self.src.k],
            "tgt": [self.tgt.n, self.tgt.k],
            "images": [[v.index, v.branch] for v in self.images],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GDeltaMap":
        src = SimplexObject(*data["src"])
        tgt = SimplexObject(*data["tgt"])
        return make_map(src, tgt, [Vertex(int(j), str(b)) for j, b in data["images"]])


def validate_table(src: SimplexObject, tgt: SimplexObject, table: Dict[Vertex, Vertex]) -> None:
    """Check the three defining conditions on a full vertex table."""
    for v in src.vertices:
        image = tgt.check(table[v])
        if src.is_real(v.index) != tgt.is_real(image.index):
            raise IsovarianceViolation(f"{v} in {src} and {image} in {tgt} differ in isotropy")
        if table[src.swap(v)] != tgt.swap(image):
            raise EquivarianceViolation(f"image of swapped {v} is not the swapped image")
    for u in src.vertices:
        for v in src.vertices:
            if src.leq(u, v) and not tgt.leq(table[u], table[v]):
                raise OrderViolation(f"{u} <= {v} but {table[u]} !<= {table[v]} in {tgt}")


def make_map(src: SimplexObject, tgt: SimplexObject, e_images: Sequence[Vertex]) -> GDeltaMap:
    if len(e_images) != src.n + 1:
        raise OrderViolation(f"expected {src.n + 1} images, got {len(e_images)}")
    images = tuple(tgt.check(v) for v in e_images)
    theta = GDeltaMap(src, tgt, images)
    validate_table(src, tgt, theta.vertex_table())
    return theta


def _unchecked(src: SimplexObject, tgt: SimplexObject, indices: Iterable[int], branch: str = E) -> GDeltaMap:
    return GDeltaMap(
        src, tgt, tuple(Vertex(j, branch if j < tgt.k else E) for j in indices)
    )


@lru_cache(maxsize=None)
def identity(obj: SimplexObject) -> GDeltaMap:
    return _unchecked(obj, obj, range(obj.n + 1))


@lru_cache(maxsize=None)
def swap(obj: SimplexObject) -> GDeltaMap:
    """The branch exchange sigma on [n]_k (the identity when k = 0)."""
    return _unchecked(obj, obj, range(obj.n + 1), S)


@lru_cache(maxsize=None)
def compose(g: GDeltaMap, f: GDeltaMap) -> GDeltaMap:
    """g after f."""
    if f.tgt != g.src:
        raise CompositionMismatch(f"cannot compose {g} after {f}")
    return GDeltaMap(f.src, g.tgt, tuple(g(v) for v in f.images))


def compose_all(maps: Sequence[GDeltaMap], start: SimplexObject) -> GDeltaMap:
    """Apply maps in order, starting from the identity of start."""
    result = identity(start)
    for step in maps:
        result = compose(step, result)
    return result


@lru_cache(maxsize=None)
def _hom(src: SimplexObject, tgt: SimplexObject) -> Tuple[GDeltaMap, ...]:
    free_count, real_count = src.k, src.n + 1 - src.k
    free_choices = list(itertools.combinations_with_replacement(range(tgt.k), free_count))
    real_choices = list(
        itertools.combinations_with_replacement(range(tgt.k, tgt.n + 1), real_count)
    )
    branches = (E, S) if free_count else (E,)
    found = []
    for free in free_choices:
        for real in real_choices:
            for branch in branches:
                theta = _unchecked(src, tgt, free + real, branch)
                validate_table(src, tgt, theta.vertex_table())
                found.append(theta)
    found.sort(key=lambda m: m.images)
    logger.debug("Hom(%s, %s) has %d maps", src, tgt, len(found))
    return tuple(found)


def enumerate_hom(src: SimplexObject, tgt: SimplexObject) -> List[GDeltaMap]:
    """All morphisms src -> tgt in lexicographic order of their e-images."""
    return list(_hom(src, tgt))


def is_mono(f: GDeltaMap) -> bool:
    return f.is_mono()


def is_epi(f: GDeltaMap) -> bool:
    return f.is_epi()


@lru_cache(maxsize=None)
def _sections(f: GDeltaMap) -> Tuple[GDeltaMap, ...]:
    target_id = identity(f.tgt)
    return tuple(s for s in _hom(f.tgt, f.src) if compose(f, s) == target_id)


def sections(f: GDeltaMap) -> List[GDeltaMap]:
    if not f.is_epi():
        raise NotEpi(f"{f} is not an epimorphism")
    return list(_sections(f))


@lru_cache(maxsize=None)
def canonical_epis(src: SimplexObject, tgt: SimplexObject) -> Tuple[GDeltaMap, ...]:
    """Epimorphisms src -> tgt that keep the e branch (one per sigma-orbit)."""
    return tuple(f for f in _hom(src, tgt) if f.is_epi() and not f.twisted)
