"""Elementary homotopies IX -> Y and the equivalences they generate."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import networkx as nx

from config.limits import SEARCH_LIMITS
from cylinder.bundle import CylinderBundle, cylinder
from gdelta.maps import compose as compose_gdelta, make_map
from gdelta.objects import SimplexObject, Vertex
from presheaf.constructions import cell_mono, representable, representable_simplex
from presheaf.isosset import IsoSSet
from presheaf.maps import PresheafMap, compose, identity
from presheaf.search import hom_presheaf_maps, search_maps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Homotopy:
    """H : IX -> Y from H d0 to H d1."""

    bundle: CylinderBundle
    underlying: PresheafMap

    @property
    def start(self) -> PresheafMap:
        return compose(self.underlying, self.bundle.d0)

    @property
    def end(self) -> PresheafMap:
        return compose(self.underlying, self.bundle.d1)

    @property
    def endpoints(self) -> Tuple[PresheafMap, PresheafMap]:
        return self.start, self.end

    def joins(self, f: PresheafMap, g: PresheafMap) -> bool:
        return dict(self.start.table) == dict(f.table) and dict(self.end.table) == dict(g.table)


def constant_homotopy(f: PresheafMap) -> Homotopy:
    bundle = cylinder(f.src)
    return Homotopy(bundle, compose(f, bundle.rho))


def thickened_map(
    bundle: CylinderBundle, obj: SimplexObject, target: SimplexObject, h: Callable[[Vertex, int], Vertex]
) -> PresheafMap:
    """The map I Delta^{obj} -> Delta^{target} induced by a map th[obj] -> [target].

    h takes a vertex of [n]_k and a level and returns a vertex of the target.
    """
    Y = representable(target.n, target.k)
    table = {}
    for name, (c, pi, t) in bundle.cells.items():
        u = compose_gdelta(cell_mono(c, obj), pi)
        images = [h(u.images[j], 0 if j < t else 1) for j in range(u.src.n + 1)]
        table[name] = representable_simplex(make_map(u.src, target, images))
    return PresheafMap(bundle.total, Y, table)


def find_elementary_homotopy(f: PresheafMap, g: PresheafMap) -> Optional[Homotopy]:
    """An H : IX -> Y with H d0 = f and H d1 = g, or None."""
    bundle = cylinder(f.src)
    fixed = {}
    for c in f.src.cells:
        fixed[bundle.d0.table[c].cell] = f.table[c]
        fixed[bundle.d1.table[c].cell] = g.table[c]
    for H in search_maps(bundle.total, f.tgt, fixed):
        return Homotopy(bundle, H)
    return None


def _linked(f: PresheafMap, g: PresheafMap) -> Optional[Homotopy]:
    return find_elementary_homotopy(f, g) or find_elementary_homotopy(g, f)


def homotopy_classes(X: IsoSSet, Y: IsoSSet) -> List[List[PresheafMap]]:
    """Maps X -> Y grouped by the equivalence relation elementary homotopies generate."""
    maps = hom_presheaf_maps(X, Y)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(maps)))
    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            if _linked(maps[i], maps[j]) is not None:
                graph.add_edge(i, j)
    classes = [sorted(component) for component in nx.connected_components(graph)]
    classes.sort()
    logger.info("%d maps %r -> %r in %d classes", len(maps), X, Y, len(classes))
    return [[maps[i] for i in component] for component in classes]


def _key(m: PresheafMap) -> frozenset:
    return frozenset(m.table.items())


def homotopy_chain(f: PresheafMap, g: PresheafMap, depth: int) -> Optional[List[Homotopy]]:
    """At most `depth` elementary homotopies, either direction, from f to g."""
    if dict(f.table) == dict(g.table):
        return []
    if depth <= 0:
        return None
    step = _linked(f, g)
    if step is not None:
        return [step]
    if depth == 1:
        return None
    # breadth-first over all maps X -> Y
    others = hom_presheaf_maps(f.src, f.tgt)
    seen = {_key(f): []}
    queue = deque([(f, [])])
    while queue:
        current, path = queue.popleft()
        if len(path) >= depth:
            continue
        for other in others:
            if _key(other) in seen:
                continue
            step = _linked(current, other)
            if step is None:
                continue
            seen[_key(other)] = path + [step]
            if _key(other) == _key(g):
                return seen[_key(other)]
            queue.append((other, path + [step]))
    return None


@dataclass
class EquivalenceResult:
    holds: bool
    inverse: Optional[PresheafMap] = None
    left: List[Homotopy] = field(default_factory=list)
    right: List[Homotopy] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def is_elementary_homotopy_equivalence(
    f: PresheafMap, depth: Optional[int] = None, candidates: Optional[List[PresheafMap]] = None
) -> EquivalenceResult:
    """Search psi : Y -> X with psi f ~ id and f psi ~ id.

    depth bounds the number of elementary homotopies on each side.
    """
    depth = SEARCH_LIMITS["homotopy_depth"] if depth is None else depth
    X, Y = f.src, f.tgt
    id_x, id_y = identity(X), identity(Y)
    for psi in candidates if candidates is not None else search_maps(Y, X):
        left = homotopy_chain(compose(psi, f), id_x, depth)
        if left is None:
            continue
        right = homotopy_chain(compose(f, psi), id_y, depth)
        if right is None:
            continue
        logger.info("Found homotopy inverse for %r", f)
        return EquivalenceResult(True, psi, left, right)
    return EquivalenceResult(False)