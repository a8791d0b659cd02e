"""Backtracking search for maps between finite isovariant simplicial sets.

Only generating cells are chosen; everything below them follows by propagation
through the face and swap tables, so a branch dies as soon as it is inconsistent.
"""

import logging
from typing import Dict, Iterator, List, Mapping, Optional

from presheaf.isosset import IsoSSet, Simplex, cell_simplex
from presheaf.maps import PresheafMap, _propagate

logger = logging.getLogger(__name__)


def _candidates(Y: IsoSSet, degree, injective: bool) -> List[Simplex]:
    if injective:
        return [cell_simplex(c, degree) for c in Y.cells_of(degree)]
    return list(Y.simplices(degree))


def search_maps(
    X: IsoSSet,
    Y: IsoSSet,
    fixed: Optional[Mapping[str, Simplex]] = None,
    injective: bool = False,
) -> Iterator[PresheafMap]:
    """Yield every map X -> Y extending `fixed`, each exactly once.

    With injective=True only monomorphisms are produced.
    """
    table: Dict[str, Simplex] = {}
    for cell, image in (fixed or {}).items():
        if _propagate(X, Y, table, cell, image) is None:
            logger.debug("Fixed assignment %s -> %s is inconsistent", cell, image)
            return
    order = sorted(X.generators(), key=lambda c: (-X.cells[c].n, -X.cells[c].k, c))
    yield from _extend(X, Y, table, order, 0, injective)


def _extend(X, Y, table, order, position, injective) -> Iterator[PresheafMap]:
    while position < len(order) and order[position] in table:
        position += 1
    if position == len(order):
        f = PresheafMap(X, Y, dict(table))
        if not injective or f.is_mono():
            yield f
        return
    cell = order[position]
    for candidate in _candidates(Y, X.cells[cell], injective):
        added = _propagate(X, Y, table, cell, candidate)
        if added is None:
            continue
        if injective and not PresheafMap(X, Y, dict(table)).is_mono():
            for c in added:
                del table[c]
            continue
        yield from _extend(X, Y, table, order, position + 1, injective)
        for c in added:
            del table[c]


def hom_presheaf_maps(X: IsoSSet, Y: IsoSSet) -> List[PresheafMap]:
    maps = list(search_maps(X, Y))
    logger.debug("Found %d maps %r -> %r", len(maps), X, Y)
    return maps


def count_maps(X: IsoSSet, Y: IsoSSet, fixed: Optional[Mapping[str, Simplex]] = None) -> int:
    return sum(1 for _ in search_maps(X, Y, fixed))


def find_isomorphism(X: IsoSSet, Y: IsoSSet) -> Optional[PresheafMap]:
    """An isomorphism X -> Y, or None. Pruned by the degree census first."""
    if X.census() != Y.census():
        return None
    for f in search_maps(X, Y, injective=True):
        return f
    return None


def isomorphic(X: IsoSSet, Y: IsoSSet) -> bool:
    return find_isomorphism(X, Y) is not None


def inverse(f: PresheafMap) -> PresheafMap:
    """Inverse of an isomorphism."""
    return PresheafMap(f.tgt, f.src, {s.cell: cell_simplex(c, s.degree) for c, s in f.table.items()})
