"""Faces, boundaries and horns of Delta^{n,k}, and the terminal object."""

import logging
from typing import Iterable

from config.limits import require_bound
from exceptions import IndexOutOfRange
from gdelta.generators import coface_into
from gdelta.maps import GDeltaMap, identity
from gdelta.notation import format_mono, parse_mono
from gdelta.objects import SimplexObject
from presheaf.constructions import cell_mono, image, representable, restrict, union_all, yoneda_map
from presheaf.isosset import IsoSSet, Simplex

logger = logging.getLogger(__name__)


def face_image(n: int, k: int, i: int, eps: int) -> IsoSSet:
    """The face of Delta^{n,k} opposite vertex i; eps = 1 on the free band."""
    obj = SimplexObject(n, k)
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"Delta^{n},{k} has no face {i}")
    if eps != (1 if i < k else 0):
        raise IndexOutOfRange(f"face {i} of Delta^{n},{k} lies at level {1 if i < k else 0}, not {eps}")
    return image(yoneda_map(coface_into(obj, i)), name=f"d{eps}^{i}Delta^{n},{k}")


def _face(n: int, k: int, i: int) -> IsoSSet:
    return face_image(n, k, i, 1 if i < k else 0)


def boundary(n: int, k: int) -> IsoSSet:
    """Union of all faces; empty in dimension 0."""
    delta = representable(n, k)
    if n == 0:
        return restrict(delta, [], name=f"dDelta^{n},{k}")
    return union_all((_face(n, k, i) for i in range(n + 1)), delta, name=f"dDelta^{n},{k}")


def _check_horn(n: int, k: int, l: int) -> None:
    SimplexObject(n, k)
    if n < 1 or not 0 <= l <= n:
        raise IndexOutOfRange(f"no horn Lambda^{n},{k}_{l}")


def horn(n: int, k: int, l: int) -> IsoSSet:
    """Union of the faces other than the l-th."""
    _check_horn(n, k, l)
    parts = (_face(n, k, i) for i in range(n + 1) if i != l)
    return union_all(parts, representable(n, k), name=f"Lambda^{n},{k}_{l}")


def in_horn(theta: GDeltaMap, l: int) -> bool:
    """theta lies in the horn iff its image misses some vertex pair other than l."""
    rest = set(range(theta.tgt.n + 1)) - {l}
    return not rest <= set(theta.index_map)


def horn_by_predicate(n: int, k: int, l: int) -> IsoSSet:
    _check_horn(n, k, l)
    obj = SimplexObject(n, k)
    delta = representable(n, k)
    keep = [c for c in delta.cells if in_horn(cell_mono(c, obj), l)]
    return restrict(delta, keep, name=f"Lambda^{n},{k}_{l}")


def horns(max_n: int) -> Iterable[tuple]:
    require_bound(max_n)
    for n in range(1, max_n + 1):
        for k in range(n + 2):
            for l in range(n + 1):
                yield n, k, l


def notation(theta: GDeltaMap) -> str:
    return format_mono(theta)


def parse_notation(text: str, obj: SimplexObject) -> GDeltaMap:
    return parse_mono(text, obj)


def top_cells(X: IsoSSet) -> list:
    top = X.dimension
    return [c for c, d in X.cells.items() if d.n == top]


def terminal() -> IsoSSet:
    """One simplex in every degree: a real point, a fixed free point and the edge between them."""
    point, fixed, edge = SimplexObject(0, 0), SimplexObject(0, 1), SimplexObject(1, 1)
    cells = {"pt": point, "fix": fixed, "edge": edge}
    faces = {
        ("edge", 0): Simplex("pt", identity(point)),
        ("edge", 1): Simplex("fix", identity(fixed)),
    }
    swaps = {"fix": "fix", "edge": "edge"}
    return IsoSSet(cells, faces, swaps, name="terminal")