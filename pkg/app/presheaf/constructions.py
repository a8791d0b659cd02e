"""Representables, subobjects, pushouts, coproducts and skeleta."""

import logging
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from exceptions import IndexOutOfRange, NonMonoLeg, NotASubobject
from gdelta.decompose import epi_mono
from gdelta.generators import coface_into
from gdelta.maps import GDeltaMap, compose, enumerate_hom, identity as identity_map, swap
from gdelta.notation import format_mono, parse_mono
from gdelta.objects import SimplexObject
from presheaf.isosset import IsoSSet, Simplex, cell_simplex
from presheaf.maps import PresheafMap

logger = logging.getLogger(__name__)


def representable_simplex(theta: GDeltaMap) -> Simplex:
    """theta : [m]_l -> [n]_k as a simplex of Delta^{n,k} in normal form."""
    eta, mono = epi_mono(theta)
    return Simplex(format_mono(mono), eta)


@lru_cache(maxsize=None)
def cell_mono(cell: str, obj: SimplexObject) -> GDeltaMap:
    """The monomorphism a cell of Delta^{n,k} stands for."""
    return parse_mono(cell, obj)


@lru_cache(maxsize=None)
def _representable(obj: SimplexObject) -> IsoSSet:
    cells: Dict[str, SimplexObject] = {}
    faces: Dict[Tuple[str, int], Simplex] = {}
    swaps: Dict[str, str] = {}
    provenance: Dict[str, str] = {}
    for m in range(obj.n + 1):
        for l in range(min(m + 1, obj.k) + 1):
            src = SimplexObject(m, l)
            for u in enumerate_hom(src, obj):
                if not u.is_mono():
                    continue
                cell = format_mono(u)
                cells[cell] = src
                provenance[cell] = f"Delta{obj}"
                if l >= 1:
                    swaps[cell] = format_mono(compose(u, swap(src)))
                if m == 0:
                    continue
                for i in range(m + 1):
                    faces[(cell, i)] = representable_simplex(compose(u, coface_into(src, i)))
    X = IsoSSet(cells, faces, swaps, provenance, name=f"Delta^{obj.n},{obj.k}")
    logger.debug("Built %r", X)
    return X


def representable(n: int, k: int) -> IsoSSet:
    """Delta^{n,k}: cells are the monomorphisms into [n]_k."""
    return _representable(SimplexObject(n, k))


def top_cell(obj: SimplexObject) -> str:
    return format_mono(identity_map(obj))


def yoneda_map(theta: GDeltaMap) -> PresheafMap:
    """Postcomposition with theta, Delta^{src} -> Delta^{tgt}."""
    X = _representable(theta.src)
    Y = _representable(theta.tgt)
    table = {
        cell: representable_simplex(compose(theta, cell_mono(cell, theta.src)))
        for cell in X.cells
    }
    return PresheafMap(X, Y, table)


def simplex_map(Y: IsoSSet, simplex: Simplex) -> PresheafMap:
    """The map Delta^{n,k} -> Y classifying a simplex of Y."""
    obj = simplex.degree
    X = _representable(obj)
    table = {cell: Y.pull(simplex, cell_mono(cell, obj)) for cell in X.cells}
    return PresheafMap(X, Y, table)


def restrict(X: IsoSSet, cells: Iterable[str], name: str = "") -> IsoSSet:
    """The subobject on a set of cells already closed under faces and sigma."""
    keep = set(cells)
    for c in keep:
        if c not in X.cells:
            raise NotASubobject(f"{c} is not a cell of {X!r}")
        if X.swap_cell(c) not in keep:
            raise NotASubobject(f"{c} is kept without its swap {X.swap_cell(c)}")
        for f in X.face_cells(c):
            if f not in keep:
                raise NotASubobject(f"{c} is kept without its face {f}")
    return IsoSSet(
        {c: d for c, d in X.cells.items() if c in keep},
        {key: s for key, s in X.faces.items() if key[0] in keep},
        {c: t for c, t in X.swaps.items() if c in keep},
        {c: p for c, p in X.provenance.items() if c in keep},
        name=name,
    )


def closure(X: IsoSSet, cells: Iterable[str]) -> set:
    found = set()
    stack = list(cells)
    while stack:
        c = stack.pop()
        if c in found:
            continue
        found.add(c)
        stack.append(X.swap_cell(c))
        stack.extend(X.face_cells(c))
    return found


def generated(X: IsoSSet, cells: Iterable[str], name: str = "") -> IsoSSet:
    """The smallest subobject containing the given cells."""
    return restrict(X, closure(X, cells), name=name)


def is_sub(A: IsoSSet, X: IsoSSet) -> bool:
    """A is a subobject of X with cells named as in X."""
    for c, d in A.cells.items():
        if X.cells.get(c) != d:
            return False
        if d.k >= 1 and A.swap_cell(c) != X.swap_cell(c):
            return False
        if d.n >= 1 and any(A.faces.get((c, i)) != X.faces[(c, i)] for i in range(d.n + 1)):
            return False
    return True


def _require_sub(A: IsoSSet, X: IsoSSet) -> None:
    if not is_sub(A, X):
        raise NotASubobject(f"{A!r} is not a subobject of {X!r}")


def sub_union(A: IsoSSet, B: IsoSSet, X: IsoSSet, name: str = "") -> IsoSSet:
    _require_sub(A, X)
    _require_sub(B, X)
    return restrict(X, set(A.cells) | set(B.cells), name=name)


def sub_intersection(A: IsoSSet, B: IsoSSet, X: IsoSSet, name: str = "") -> IsoSSet:
    _require_sub(A, X)
    _require_sub(B, X)
    return restrict(X, set(A.cells) & set(B.cells), name=name)


def union_all(parts: Iterable[IsoSSet], X: IsoSSet, name: str = "") -> IsoSSet:
    keep = set()
    for part in parts:
        _require_sub(part, X)
        keep |= set(part.cells)
    return restrict(X, keep, name=name)


def image(f: PresheafMap, name: str = "") -> IsoSSet:
    """The image subobject of f in its target."""
    return generated(f.tgt, f.image_cells(), name=name)


def preimage(f: PresheafMap, B: IsoSSet, name: str = "") -> IsoSSet:
    """Cells of f.src whose image lies in the subobject B of f.tgt."""
    _require_sub(B, f.tgt)
    return restrict(f.src, [c for c, s in f.table.items() if s.cell in B.cells], name=name)


def pushout(i: PresheafMap, f: PresheafMap, name: str = "pushout") -> Tuple[IsoSSet, PresheafMap, PresheafMap]:
    """Glue X to Y along a mono i : A -> X and a map f : A -> Y.

    Returns (P, X -> P, Y -> P). Cells of P get opaque ids c0, c1, ... with the
    provenance of each recorded.
    """
    if not i.is_mono():
        raise NonMonoLeg(f"{i!r} is not a monomorphism")
    X, Y = i.tgt, f.tgt
    inverse = {s.cell: a for a, s in i.table.items()}

    names: Dict[Tuple[str, str], str] = {}
    provenance: Dict[str, str] = {}
    for c in Y.cells:
        names[("Y", c)] = f"c{len(names)}"
        provenance[names[("Y", c)]] = f"{Y.name or 'Y'}:{c}"
    for c in X.cells:
        if c not in inverse:
            names[("X", c)] = f"c{len(names)}"
            provenance[names[("X", c)]] = f"{X.name or 'X'}:{c}"

    def from_y(s: Simplex) -> Simplex:
        return Simplex(names[("Y", s.cell)], s.epi)

    def from_x(s: Simplex) -> Simplex:
        if s.cell in inverse:
            return from_y(Y.pull(f.table[inverse[s.cell]], s.epi))
        return Simplex(names[("X", s.cell)], s.epi)

    cells: Dict[str, SimplexObject] = {}
    faces: Dict[Tuple[str, int], Simplex] = {}
    swaps: Dict[str, str] = {}
    for (side, c), new in names.items():
        source = Y if side == "Y" else X
        d = source.cells[c]
        cells[new] = d
        lift = from_y if side == "Y" else from_x
        if d.k >= 1:
            swaps[new] = lift(cell_simplex(source.swap_cell(c), d)).cell
        for j in range(d.n + 1 if d.n else 0):
            faces[(new, j)] = lift(source.face(c, j))

    P = IsoSSet(cells, faces, swaps, provenance, name=name)
    leg_x = PresheafMap(X, P, {c: from_x(cell_simplex(c, d)) for c, d in X.cells.items()})
    leg_y = PresheafMap(Y, P, {c: from_y(cell_simplex(c, d)) for c, d in Y.cells.items()})
    logger.info("Pushout %s: %d + %d - %d cells", name, len(Y), len(X), len(inverse))
    return P, leg_x, leg_y


def coproduct(X: IsoSSet, Y: IsoSSet, name: str = "coproduct") -> IsoSSet:
    """Disjoint union, cells prefixed 0/ and 1/."""
    cells: Dict[str, SimplexObject] = {}
    faces: Dict[Tuple[str, int], Simplex] = {}
    swaps: Dict[str, str] = {}
    provenance: Dict[str, str] = {}
    for tag, part in (("0", X), ("1", Y)):
        for c, d in part.cells.items():
            cells[f"{tag}/{c}"] = d
            provenance[f"{tag}/{c}"] = f"{part.name or tag}:{c}"
            if d.k >= 1:
                swaps[f"{tag}/{c}"] = f"{tag}/{part.swap_cell(c)}"
        for (c, j), s in part.faces.items():
            faces[(f"{tag}/{c}", j)] = Simplex(f"{tag}/{s.cell}", s.epi)
    return IsoSSet(cells, faces, swaps, provenance, name=name)


def coproduct_legs(X: IsoSSet, Y: IsoSSet, P: IsoSSet) -> Tuple[PresheafMap, PresheafMap]:
    left = PresheafMap(X, P, {c: cell_simplex(f"0/{c}", d) for c, d in X.cells.items()})
    right = PresheafMap(Y, P, {c: cell_simplex(f"1/{c}", d) for c, d in Y.cells.items()})
    return left, right


def skeleton(X: IsoSSet, m: int) -> IsoSSet:
    """Cells of dimension at most m."""
    if m < -1:
        raise IndexOutOfRange(f"no skeleton of dimension {m}")
    return restrict(X, [c for c, d in X.cells.items() if d.n <= m], name=f"sk{m}({X.name})")
