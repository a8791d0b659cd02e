"""Finite isovariant simplicial sets stored by their non-degenerate cells.

Every simplex is a pair (epi, cell): a canonical (e-preserving) epimorphism from the
simplex's degree onto the degree of a non-degenerate cell. The face table records, for
each cell and each index i, the normal form of its i-th face; the swap table records
the action of sigma on cells of degree (n, k) with k >= 1.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from gdelta.decompose import decompose
from gdelta.generators import coface_into
from gdelta.maps import GDeltaMap, canonical_epis, compose, compose_all, identity, swap
from gdelta.objects import SimplexObject

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Simplex:
    cell: str
    epi: GDeltaMap

    @property
    def degree(self) -> SimplexObject:
        return self.epi.src

    @property
    def is_degenerate(self) -> bool:
        return self.epi.src != self.epi.tgt

    def __str__(self) -> str:
        if not self.is_degenerate:
            return self.cell
        return f"{self.cell}.{''.join(str(j) for j in self.epi.index_map)}"


def cell_simplex(cell: str, degree: SimplexObject) -> Simplex:
    return Simplex(cell, identity(degree))


class IsoSSet:
    """Cells, face table and swap table of a finite isovariant simplicial set."""

    def __init__(
        self,
        cells: Mapping[str, SimplexObject],
        faces: Mapping[Tuple[str, int], Simplex],
        swaps: Mapping[str, str],
        provenance: Optional[Mapping[str, str]] = None,
        name: str = "",
    ):
        self.cells: Dict[str, SimplexObject] = dict(
            sorted(cells.items(), key=lambda item: (item[1].n, item[1].k, item[0]))
        )
        self.faces: Dict[Tuple[str, int], Simplex] = dict(faces)
        self.swaps: Dict[str, str] = dict(swaps)
        self.provenance: Dict[str, str] = dict(provenance or {})
        self.name = name
        self._simplices: Dict[SimplexObject, Tuple[Simplex, ...]] = {}

    def __repr__(self) -> str:
        label = self.name or "IsoSSet"
        return f"<{label}: {len(self.cells)} cells>"

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: str) -> bool:
        return cell in self.cells

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IsoSSet):
            return NotImplemented
        return (
            self.cells == other.cells
            and self.faces == other.faces
            and self.swap_table() == other.swap_table()
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.cells.items()))

    def degree(self, cell: str) -> SimplexObject:
        return self.cells[cell]

    def face(self, cell: str, i: int) -> Simplex:
        return self.faces[(cell, i)]

    def swap_cell(self, cell: str) -> str:
        return self.swaps.get(cell, cell)

    def swap_table(self) -> Dict[str, str]:
        return {c: self.swaps.get(c, c) for c in self.cells if self.cells[c].k >= 1}

    def is_empty(self) -> bool:
        return not self.cells

    @property
    def dimension(self) -> int:
        return max((d.n for d in self.cells.values()), default=-1)

    def census(self) -> Dict[SimplexObject, int]:
        return dict(sorted(Counter(self.cells.values()).items()))

    def cells_of(self, degree: SimplexObject) -> List[str]:
        return [c for c, d in self.cells.items() if d == degree]

    def face_cells(self, cell: str) -> List[str]:
        d = self.cells[cell]
        if d.n == 0:
            return []
        return [self.faces[(cell, i)].cell for i in range(d.n + 1)]

    def generators(self) -> List[str]:
        """Cells that are not a face of another cell."""
        below = {f for c in self.cells for f in self.face_cells(c)}
        return [c for c in self.cells if c not in below]

    def pull(self, simplex: Simplex, theta: GDeltaMap) -> Simplex:
        """X(theta) applied to a simplex, returned in normal form."""
        rho = compose(simplex.epi, theta)
        cell = simplex.cell
        while True:
            parts = decompose(rho)
            if parts.sigma:
                cell = self.swap_cell(cell)
            if not parts.cofaces:
                return Simplex(cell, parts.eta)
            (omitted,) = parts.cofaces[-1].missing_indices()
            face = self.faces[(cell, omitted)]
            rest = compose_all(parts.codegeneracies + parts.cofaces[:-1], parts.source)
            rho = compose(face.epi, rest)
            cell = face.cell

    def swap_simplex(self, simplex: Simplex) -> Simplex:
        return self.pull(simplex, swap(simplex.degree))

    def face_of(self, simplex: Simplex, i: int) -> Simplex:
        return self.pull(simplex, coface_into(simplex.degree, i))

    def faces_of(self, simplex: Simplex) -> Tuple[Simplex, ...]:
        if simplex.degree.n == 0:
            return ()
        return tuple(self.face_of(simplex, i) for i in range(simplex.degree.n + 1))

    def simplices(self, degree: SimplexObject) -> Tuple[Simplex, ...]:
        """All simplices of the given degree, degenerate ones included."""
        if degree not in self._simplices:
            self._simplices[degree] = tuple(
                Simplex(c, epi)
                for c, d in self.cells.items()
                if d.n <= degree.n
                for epi in canonical_epis(degree, d)
            )
        return self._simplices[degree]

    def simplex_count(self, degree: SimplexObject) -> int:
        return len(self.simplices(degree))


def pull(X: IsoSSet, simplex: Simplex, theta: GDeltaMap) -> Simplex:
    return X.pull(simplex, theta)


def normal_form(X: IsoSSet, cell: str, theta: GDeltaMap) -> Simplex:
    """theta^* of a cell, as (canonical epi, non-degenerate cell)."""
    return X.pull(cell_simplex(cell, X.degree(cell)), theta)


def simplex_count(X: IsoSSet, n: int, k: int) -> int:
    return X.simplex_count(SimplexObject(n, k))


def empty(name: str = "empty") -> IsoSSet:
    return IsoSSet({}, {}, {}, name=name)


@dataclass
class ValidationReport:
    issues: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, message: str) -> None:
        self.issues.append(message)


def _check_tables(X: IsoSSet, report: ValidationReport) -> None:
    for cell, d in X.cells.items():
        if d.k >= 1:
            twin = X.swaps.get(cell)
            if twin is None:
                report.add(f"{cell}: missing swap entry")
            elif twin not in X.cells or X.cells[twin] != d:
                report.add(f"{cell}: swap {twin} is not a cell of degree {d}")
            elif X.swaps.get(twin, twin) != cell:
                report.add(f"{cell}: swap is not an involution")
        elif cell in X.swaps and X.swaps[cell] != cell:
            report.add(f"{cell}: degree {d} has trivial action but swaps to {X.swaps[cell]}")
        if d.n == 0:
            continue
        for i in range(d.n + 1):
            face = X.faces.get((cell, i))
            expected = coface_into(d, i).src
            if face is None:
                report.add(f"{cell}: missing face {i}")
            elif face.cell not in X.cells:
                report.add(f"{cell}: face {i} names unknown cell {face.cell}")
            elif face.epi.src != expected or face.epi.tgt != X.cells[face.cell]:
                report.add(f"{cell}: face {i} has degree {face.epi.src}, expected {expected}")
            elif not face.epi.is_epi() or face.epi.twisted:
                report.add(f"{cell}: face {i} is not in normal form")


def _check_identities(X: IsoSSet, report: ValidationReport) -> None:
    for cell, d in X.cells.items():
        top = cell_simplex(cell, d)
        if d.n >= 1 and d.k >= 1:
            twin = X.swap_cell(cell)
            for i in range(d.n + 1):
                if X.faces[(twin, i)] != X.swap_simplex(X.faces[(cell, i)]):
                    report.add(f"{cell}: face {i} does not commute with sigma")
        if d.n < 2:
            continue
        # d^b d^a = d^a d^(b-1) for a < b, read through the tables
        for b in range(d.n + 1):
            first = X.face_of(top, b)
            for a in range(b):
                one = X.face_of(first, a)
                two = X.face_of(X.face_of(top, a), b - 1)
                if one != two:
                    report.add(f"{cell}: faces ({b},{a}) and ({a},{b - 1}) disagree: {one} vs {two}")


def validate(X: IsoSSet) -> ValidationReport:
    """Check table shapes, sigma compatibility and the simplicial identities."""
    report = ValidationReport()
    _check_tables(X, report)
    if report.ok:
        _check_identities(X, report)
    logger.debug("Validated %r: %d issues", X, len(report.issues))
    return report
