"""The interval presheaf I^{n,k} represented by th[n]_k.

Its non-degenerate simplices are the injective chains [m]_l -> th[n]_k: a map
alpha into [n]_k together with the position where the level jumps from 0 to 1.
"""

import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from gdelta.decompose import canonical_epi
from gdelta.generators import coface_into
from gdelta.maps import GDeltaMap, compose, enumerate_hom, swap
from gdelta.notation import format_chain
from gdelta.objects import SimplexObject
from gdelta.thickening import Chain
from presheaf.isosset import IsoSSet, Simplex

logger = logging.getLogger(__name__)


def merge_positions(obj: SimplexObject, positions: FrozenSet[int]) -> Tuple[GDeltaMap, Tuple[int, ...]]:
    """The canonical epi identifying j with j+1 for every j in positions.

    Returns the epi and its index table.
    """
    groups = [0]
    for j in range(obj.n):
        groups.append(groups[-1] if j in positions else groups[-1] + 1)
    free = len({groups[j] for j in range(obj.k)})
    target = SimplexObject(groups[-1], free)
    return canonical_epi(obj, tuple(groups), target), tuple(groups)


def merged_threshold(groups: Tuple[int, ...], t: int) -> int:
    return groups[t] if t < len(groups) else groups[-1] + 1


def chain_label(chain: Chain) -> str:
    return format_chain(chain.alpha, chain.levels)


@lru_cache(maxsize=None)
def injective_chains(obj: SimplexObject) -> Tuple[Chain, ...]:
    """All injective chains into th[n]_k, by degree."""
    found: List[Chain] = []
    for m in range(obj.n + 2):
        for l in range(min(m + 1, obj.k) + 1):
            src = SimplexObject(m, l)
            for alpha in enumerate_hom(src, obj):
                for t in range(m + 2):
                    chain = Chain(alpha, t)
                    if chain.is_injective():
                        found.append(chain)
    return tuple(found)


def normalize_chain(chain: Chain) -> Tuple[Chain, GDeltaMap]:
    """Split a chain into a degeneracy and an injective chain."""
    alpha, t = chain.alpha, chain.threshold
    h = alpha.index_map
    repeats = frozenset(j for j in range(alpha.src.n) if h[j] == h[j + 1] and t != j + 1)
    zeta, groups = merge_positions(alpha.src, repeats)
    keep = [j for j in range(alpha.src.n + 1) if j == 0 or groups[j] != groups[j - 1]]
    reduced = GDeltaMap(zeta.tgt, alpha.tgt, tuple(alpha.images[j] for j in keep))
    return Chain(reduced, merged_threshold(groups, t)), zeta


def chain_face(chain: Chain, i: int) -> Chain:
    t = chain.threshold
    return Chain(compose(chain.alpha, coface_into(chain.alpha.src, i)), t - 1 if i < t else t)


def interval_of_representable(n: int, k: int) -> IsoSSet:
    """I^{n,k}, built directly from injective chains."""
    obj = SimplexObject(n, k)
    cells: Dict[str, SimplexObject] = {}
    faces: Dict[Tuple[str, int], Simplex] = {}
    swaps: Dict[str, str] = {}
    for chain in injective_chains(obj):
        label = chain_label(chain)
        src = chain.alpha.src
        cells[label] = src
        if src.k >= 1:
            swaps[label] = chain_label(Chain(compose(chain.alpha, swap(src)), chain.threshold))
        for i in range(src.n + 1 if src.n else 0):
            reduced, zeta = normalize_chain(chain_face(chain, i))
            faces[(label, i)] = Simplex(chain_label(reduced), zeta)
    X = IsoSSet(cells, faces, swaps, name=f"I^{n},{k}")
    logger.info("Built %r", X)
    return X


def top_census(X: IsoSSet) -> Dict[SimplexObject, int]:
    """Top-dimensional cells counted up to sigma."""
    top = X.dimension
    orbits: Dict[SimplexObject, set] = {}
    for c, d in X.cells.items():
        if d.n == top:
            orbits.setdefault(d, set()).add(frozenset((c, X.swap_cell(c))))
    return {d: len(o) for d, o in sorted(orbits.items())}