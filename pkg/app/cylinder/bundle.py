"""The exact cylinder IX with its endpoint inclusions and projection.

IX is glued from one interval I^{a,b} per cell of X. A simplex of IX is a pair
(simplex of X, threshold); its normal form collapses every repeated vertex that
the threshold does not separate, which leaves at most one repetition.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

import pandas as pd

from cylinder.interval import chain_label, injective_chains, merge_positions, merged_threshold
from cylinder.unionfind import UnionFind
from exceptions import NonMono
from gdelta.generators import coface_into
from gdelta.maps import GDeltaMap, _unchecked, identity
from gdelta.objects import SimplexObject
from presheaf.constructions import generated
from presheaf.isosset import IsoSSet, Simplex, cell_simplex
from presheaf.maps import PresheafMap, compose, inclusion

logger = logging.getLogger(__name__)

CellData = Tuple[str, GDeltaMap, int]


def cell_name(cell: str, pi: GDeltaMap, t: int) -> str:
    h = pi.index_map
    repeats = [j for j in range(len(h) - 1) if h[j] == h[j + 1]]
    if not repeats:
        return f"I[{cell}]t{t}"
    (j,) = repeats
    return f"I[{cell}]s{j}"


def normal_pair(x: Simplex, t: int) -> Tuple[CellData, GDeltaMap]:
    """(cell, pi, t) of the non-degenerate part of (x, t), and the degeneracy."""
    pi = x.epi
    h = pi.index_map
    repeats = frozenset(j for j in range(pi.src.n) if h[j] == h[j + 1] and t != j + 1)
    zeta, groups = merge_positions(pi.src, repeats)
    keep = [j for j in range(pi.src.n + 1) if j == 0 or groups[j] != groups[j - 1]]
    reduced = _unchecked(zeta.tgt, pi.tgt, (h[j] for j in keep))
    return (x.cell, reduced, merged_threshold(groups, t)), zeta


def normalize(x: Simplex, t: int) -> Simplex:
    (cell, pi, t2), zeta = normal_pair(x, t)
    return Simplex(cell_name(cell, pi, t2), zeta)


@dataclass(frozen=True)
class CylinderBundle:
    base: IsoSSet
    total: IsoSSet
    d0: PresheafMap
    d1: PresheafMap
    rho: PresheafMap
    cells: Mapping[str, CellData] = field(repr=False)

    def endpoint(self, eps: int) -> PresheafMap:
        return self.d0 if eps == 0 else self.d1

    def sections_hold(self) -> bool:
        """rho after either endpoint is the identity of the base."""
        ident = {c: cell_simplex(c, d) for c, d in self.base.cells.items()}
        return all(dict(compose(self.rho, d).table) == ident for d in (self.d0, self.d1))

    def endpoints_disjoint(self) -> bool:
        return not set(self.d0.image_cells()) & set(self.d1.image_cells())


def _cells_of(X: IsoSSet) -> Tuple[Dict[str, CellData], Dict[str, int]]:
    """Glue the intervals of all cells; returns cell data and class sizes."""
    classes: UnionFind = UnionFind()
    data: Dict[str, CellData] = {}
    dropped = 0
    for c, degree in X.cells.items():
        top = cell_simplex(c, degree)
        for chain in injective_chains(degree):
            (cell, pi, t), zeta = normal_pair(X.pull(top, chain.alpha), chain.threshold)
            if zeta != identity(zeta.src):
                dropped += 1
                continue
            name = cell_name(cell, pi, t)
            data[name] = (cell, pi, t)
            classes.union((c, chain_label(chain)), ("cell", name), root=("cell", name))
    sizes = {root[1]: len(members) - 1 for root, members in classes.classes().items()}
    logger.debug("Glued %d interval cells into %d, %d degenerate", len(classes) - len(sizes), len(sizes), dropped)
    return data, sizes


@lru_cache(maxsize=None)
def cylinder(X: IsoSSet) -> CylinderBundle:
    """IX with d0, d1 : X -> IX and rho : IX -> X."""
    data, sizes = _cells_of(X)
    cells: Dict[str, SimplexObject] = {}
    faces: Dict[Tuple[str, int], Simplex] = {}
    swaps: Dict[str, str] = {}
    provenance: Dict[str, str] = {}
    for name, (c, pi, t) in data.items():
        degree = pi.src
        cells[name] = degree
        provenance[name] = f"{c} t={t} from {sizes.get(name, 0)} chains"
        if degree.k >= 1:
            swaps[name] = cell_name(X.swap_cell(c), pi, t)
        for i in range(degree.n + 1 if degree.n else 0):
            x = X.pull(Simplex(c, pi), coface_into(degree, i))
            faces[(name, i)] = normalize(x, t - 1 if i < t else t)

    total = IsoSSet(cells, faces, swaps, provenance, name=f"I({X.name})")
    d0 = PresheafMap(X, total, {c: cell_simplex(cell_name(c, identity(d), d.n + 1), d) for c, d in X.cells.items()})
    d1 = PresheafMap(X, total, {c: cell_simplex(cell_name(c, identity(d), 0), d) for c, d in X.cells.items()})
    rho = PresheafMap(total, X, {name: Simplex(c, pi) for name, (c, pi, _) in data.items()})
    logger.info("Built cylinder over %d cells: %d cells", len(X), len(total))
    return CylinderBundle(X, total, d0, d1, rho, data)


def cylinder_map(
    f: PresheafMap, src: Optional[CylinderBundle] = None, tgt: Optional[CylinderBundle] = None
) -> PresheafMap:
    """If : IX -> IY."""
    src = src or cylinder(f.src)
    tgt = tgt or cylinder(f.tgt)
    table = {
        name: normalize(f.tgt.pull(f.table[c], pi), t)
        for name, (c, pi, t) in src.cells.items()
    }
    return PresheafMap(src.total, tgt.total, table)


@dataclass
class ExactnessReport:
    rows: List[dict] = field(default_factory=list)
    cylinder_mono: bool = True

    @property
    def ok(self) -> bool:
        return self.cylinder_mono and all(row["holds"] for row in self.rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=["eps", "degree", "sub", "preimage", "holds"])


def verify_exactness(iota: PresheafMap) -> ExactnessReport:
    """X is the preimage of IX under each endpoint of IY, degree by degree."""
    if not iota.is_mono():
        raise NonMono(f"{iota!r} is not a monomorphism")
    X, Y = iota.src, iota.tgt
    big = cylinder(Y)
    lifted = cylinder_map(iota, cylinder(X), big)
    report = ExactnessReport(cylinder_mono=lifted.is_mono())
    inside = set(lifted.image_cells())
    sub = set(iota.image_cells())
    for eps in (0, 1):
        end = big.endpoint(eps)
        for degree in sorted(set(Y.cells.values())):
            expected = {c for c in Y.cells_of(degree) if c in sub}
            found = {c for c in Y.cells_of(degree) if end.table[c].cell in inside}
            report.rows.append(
                {
                    "eps": eps,
                    "degree": f"{degree.n},{degree.k}",
                    "sub": len(expected),
                    "preimage": len(found),
                    "holds": expected == found,
                }
            )
    logger.info("Exactness of %r: %s", iota, "holds" if report.ok else "fails")
    return report


def cylinder_inclusion(iota: PresheafMap, eps: int) -> Tuple[IsoSSet, PresheafMap]:
    """IK u {eps}L as a subobject of IL, for a mono K -> L."""
    if not iota.is_mono():
        raise NonMono(f"{iota!r} is not a monomorphism")
    big = cylinder(iota.tgt)
    lifted = cylinder_map(iota, cylinder(iota.src), big)
    end = big.endpoint(eps)
    sub = generated(
        big.total,
        lifted.image_cells() + end.image_cells(),
        name=f"I{iota.src.name}u{{{eps}}}{iota.tgt.name}",
    )
    return sub, inclusion(sub, big.total)
