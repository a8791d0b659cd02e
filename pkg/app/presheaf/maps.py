"""Natural transformations between isovariant simplicial sets.

A map is determined by where it sends each non-degenerate cell; the image of a
degenerate simplex (cell, epi) is the pull of the cell's image along epi.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional

from exceptions import NaturalityViolation, NotASubobject
from gdelta.generators import coface_into
from gdelta.maps import identity as identity_map, sections, swap
from presheaf.isosset import IsoSSet, Simplex, cell_simplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PresheafMap:
    src: IsoSSet
    tgt: IsoSSet
    table: Mapping[str, Simplex]

    def __call__(self, simplex: Simplex) -> Simplex:
        return self.tgt.pull(self.table[simplex.cell], simplex.epi)

    def __getitem__(self, cell: str) -> Simplex:
        return self.table[cell]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PresheafMap):
            return NotImplemented
        return self.src is other.src and self.tgt is other.tgt and dict(self.table) == dict(other.table)

    def __hash__(self) -> int:
        return hash(frozenset(self.table.items()))

    def __repr__(self) -> str:
        return f"<PresheafMap {self.src!r} -> {self.tgt!r}>"

    def is_mono(self) -> bool:
        """Injective on all simplices: non-degenerate images, distinct cells."""
        seen = set()
        for cell, image in self.table.items():
            if image.is_degenerate or image.cell in seen:
                return False
            seen.add(image.cell)
        return True

    def image_cells(self) -> List[str]:
        return sorted({image.cell for image in self.table.values()})

    def validate(self) -> None:
        """Raise NaturalityViolation if faces or sigma are not respected."""
        X, Y = self.src, self.tgt
        for cell, d in X.cells.items():
            image = self.table[cell]
            if image.degree != d:
                raise NaturalityViolation(f"{cell} of degree {d} sent to {image} of degree {image.degree}")
            if d.k >= 1 and self(cell_simplex(X.swap_cell(cell), d)) != Y.swap_simplex(image):
                raise NaturalityViolation(f"image of {cell} does not commute with sigma")
            for i in range(d.n + 1 if d.n else 0):
                lhs = self(X.face(cell, i))
                rhs = Y.face_of(image, i)
                if lhs != rhs:
                    raise NaturalityViolation(f"face {i} of {cell}: {lhs} != {rhs}")


def _propagate(X: IsoSSet, Y: IsoSSet, table: Dict[str, Simplex], cell: str, image: Simplex) -> Optional[List[str]]:
    """Extend table by cell -> image and everything it forces.

    Returns the list of newly assigned cells, or None on a conflict (the table is
    then left as it was).
    """
    added: List[str] = []
    stack = [(cell, image)]
    while stack:
        c, s = stack.pop()
        known = table.get(c)
        if known is not None:
            if known != s:
                break
            continue
        d = X.cells[c]
        if s.degree != d:
            break
        table[c] = s
        added.append(c)
        if d.k >= 1:
            twin = X.swap_cell(c)
            twin_image = Y.pull(s, swap(d))
            if twin == c and twin_image != s:
                break
            stack.append((twin, twin_image))
        if d.n == 0:
            continue
        conflict = False
        for i in range(d.n + 1):
            face = X.face(c, i)
            image_face = Y.pull(s, coface_into(d, i))
            if face.epi == identity_map(face.degree):
                stack.append((face.cell, image_face))
                continue
            below = Y.pull(image_face, sections(face.epi)[0])
            if Y.pull(below, face.epi) != image_face:
                conflict = True
                break
            stack.append((face.cell, below))
        if conflict:
            break
    else:
        return added
    for c in added:
        del table[c]
    return None


def propagate(X: IsoSSet, Y: IsoSSet, table: Dict[str, Simplex], cell: str, image: Simplex) -> bool:
    return _propagate(X, Y, table, cell, image) is not None


def map_from_generators(X: IsoSSet, Y: IsoSSet, assignment: Mapping[str, Simplex], check: bool = True) -> PresheafMap:
    """The unique map extending an assignment on generating cells.

    Raises NaturalityViolation when the assignment is inconsistent or does not
    determine every cell.
    """
    table: Dict[str, Simplex] = {}
    for cell, image in assignment.items():
        if not propagate(X, Y, table, cell, image):
            raise NaturalityViolation(f"assignment {cell} -> {image} conflicts with the others")
    missing = [c for c in X.cells if c not in table]
    if missing:
        raise NaturalityViolation(f"cells {missing[:5]} are not determined by the assignment")
    f = PresheafMap(X, Y, table)
    if check:
        f.validate()
    return f


def identity(X: IsoSSet) -> PresheafMap:
    return PresheafMap(X, X, {c: cell_simplex(c, d) for c, d in X.cells.items()})


def compose(g: PresheafMap, f: PresheafMap) -> PresheafMap:
    """g after f."""
    if f.tgt is not g.src and f.tgt != g.src:
        raise NaturalityViolation(f"cannot compose {g!r} after {f!r}")
    return PresheafMap(f.src, g.tgt, {c: g(s) for c, s in f.table.items()})


def inclusion(A: IsoSSet, X: IsoSSet) -> PresheafMap:
    """The inclusion of a subobject whose cells are named as in X."""
    for c, d in A.cells.items():
        if X.cells.get(c) != d:
            raise NotASubobject(f"{c} is not a cell of degree {d} in {X!r}")
    return PresheafMap(A, X, {c: cell_simplex(c, d) for c, d in A.cells.items()})


def image_cells(f: PresheafMap) -> List[str]:
    return f.image_cells()


def is_mono(f: PresheafMap) -> bool:
    return f.is_mono()


def agree(f: PresheafMap, g: PresheafMap, cells: Optional[Iterable[str]] = None) -> bool:
    names = f.src.cells if cells is None else cells
    return all(f.table[c] == g.table[c] for c in names)
