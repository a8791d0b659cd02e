"""Simplicial meshes with OFF / OBJ export."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

from config.formats import DOCUMENT_FORMATS, EXPORT_FORMATS
from exceptions import InvalidDocument

logger = logging.getLogger(__name__)

Facet = Tuple[int, ...]

MISSING = -1


@dataclass
class Mesh:
    """Vertices with coordinates and simplices of every dimension (0-simplices included).

    A simplex is the tuple of its vertices in chain order. A glued complex need not be
    regular: two simplices may span the same vertices and one simplex may repeat a
    vertex. So simplices are kept as a list, and faces[i] names the simplices that the
    faces of simplex i land on. When faces are not given they are looked up by vertex tuple.
    """

    vertices: List[str]
    coordinates: np.ndarray
    simplices: List[Facet] = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)
    faces: List[Tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.simplices = [tuple(s) for s in self.simplices]
        self.provenance = list(self.provenance) + [""] * (len(self.simplices) - len(self.provenance))
        if not self.faces:
            self.faces = self._faces_by_tuple()

    def _faces_by_tuple(self) -> List[Tuple[int, ...]]:
        where: Dict[Facet, int] = {}
        for i, s in enumerate(self.simplices):
            where.setdefault(s, i)
        return [
            tuple(where.get(s[:j] + s[j + 1 :], MISSING) for j in range(len(s))) if len(s) > 1 else ()
            for s in self.simplices
        ]

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def census(self) -> Tuple[int, ...]:
        """Number of simplices in each dimension."""
        counts = Counter(len(s) - 1 for s in self.simplices)
        return tuple(counts.get(d, 0) for d in range(self.dimension + 1))

    def euler(self) -> int:
        return sum((-1) ** d * count for d, count in enumerate(self.census()))

    def facets(self) -> List[Facet]:
        """Simplices that are not a face of another simplex."""
        bounding = {f for faces in self.faces for f in faces}
        return [s for i, s in enumerate(self.simplices) if i not in bounding]

    def is_closed(self) -> bool:
        """Every face of a simplex lands on a simplex of the mesh spanned by its vertices.

        A face of full dimension must match the vertex tuple; a lower one is a collapsed face.
        """
        for s, faces in zip(self.simplices, self.faces):
            if len(faces) != (len(s) if len(s) > 1 else 0):
                return False
            for j, f in enumerate(faces):
                if not 0 <= f < len(self.simplices):
                    return False
                face, expected = self.simplices[f], s[:j] + s[j + 1 :]
                if len(face) > len(expected) or not set(face) <= set(expected):
                    return False
                if len(face) == len(expected) and face != expected:
                    return False
        return True

    def is_connected(self) -> bool:
        """The graph on facets, adjacent when they share a vertex, is connected."""
        facets = self.facets()
        if not facets:
            return True
        graph = nx.Graph()
        graph.add_nodes_from(range(len(facets)))
        owners: Dict[int, List[int]] = {}
        for i, facet in enumerate(facets):
            for v in facet:
                owners.setdefault(v, []).append(i)
        for group in owners.values():
            graph.add_edges_from((group[0], other) for other in group[1:])
        return nx.is_connected(graph)

    def to_dict(self) -> dict:
        doc = dict(DOCUMENT_FORMATS["mesh"])
        doc.update(
            {
                "vertices": [
                    {"id": v, "coordinates": [round(float(x), 12) for x in row]}
                    for v, row in zip(self.vertices, self.coordinates)
                ],
                "simplices": [
                    {"vertices": list(s), "faces": list(f), "provenance": p}
                    for s, f, p in zip(self.simplices, self.faces, self.provenance)
                ],
            }
        )
        return doc


def simplicial_mesh(vertices: List[str], coordinates: np.ndarray, chains: Dict[str, Facet]) -> Mesh:
    """The simplicial complex spanned by labelled maximal chains, every face listed once."""
    labels: Dict[Facet, str] = {}
    for label, chain in chains.items():
        for size in range(1, len(chain) + 1):
            for face in combinations(chain, size):
                labels.setdefault(face, label)
    ordered = sorted(labels, key=lambda s: (len(s), s))
    return Mesh(vertices, coordinates, ordered, [labels[s] for s in ordered])


def disjoint_union(a: Mesh, b: Mesh) -> Mesh:
    """Side-by-side union; b's vertex and simplex indices are shifted past a's."""
    shift = len(a.vertices)
    width = max(a.coordinates.shape[1], b.coordinates.shape[1])
    coordinates = np.zeros((shift + len(b.vertices), width))
    coordinates[:shift, : a.coordinates.shape[1]] = a.coordinates
    coordinates[shift:, : b.coordinates.shape[1]] = b.coordinates
    moved = [tuple(v + shift for v in s) for s in b.simplices]
    offset = len(a.simplices)
    faces = a.faces + [tuple(f + offset for f in fs) for fs in b.faces]
    return Mesh(
        a.vertices + b.vertices, coordinates, a.simplices + moved, a.provenance + b.provenance, faces
    )


def _xyz(mesh: Mesh) -> np.ndarray:
    points = np.zeros((len(mesh.vertices), 3))
    if mesh.vertices:
        width = min(3, mesh.coordinates.shape[1])
        points[:, :width] = mesh.coordinates[:, :width]
    return points


def export_off(mesh: Mesh) -> str:
    """OFF with every simplex of dimension >= 1 written as a face record."""
    number = EXPORT_FORMATS["off"]["coordinate"]
    records = [s for s in mesh.simplices if len(s) >= 2]
    edges = sum(1 for s in records if len(s) == 2)
    lines = ["OFF", f"{len(mesh.vertices)} {len(records)} {edges}"]
    lines.extend(" ".join(number % x for x in row) for row in _xyz(mesh))
    lines.extend(" ".join(str(v) for v in (len(s),) + s) for s in records)
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> Mesh:
    rows = [line.split("#")[0].strip() for line in text.splitlines()]
    rows = [row for row in rows if row]
    if not rows or rows[0] != "OFF":
        raise InvalidDocument("missing OFF header")
    try:
        nv, nf, _ = (int(x) for x in rows[1].split())
        coordinates = np.array([[float(x) for x in rows[2 + i].split()] for i in range(nv)]).reshape(nv, 3)
        simplices = [(i,) for i in range(nv)]
        for row in rows[2 + nv : 2 + nv + nf]:
            values = [int(x) for x in row.split()]
            simplices.append(tuple(values[1 : 1 + values[0]]))
    except (IndexError, ValueError) as exc:
        raise InvalidDocument(f"malformed OFF: {exc}") from exc
    return Mesh([str(i) for i in range(nv)], coordinates, simplices)


def export_obj(mesh: Mesh) -> str:
    """Wavefront OBJ: triangles as f, edges as l; higher simplices are skipped."""
    number = EXPORT_FORMATS["obj"]["coordinate"]
    lines = ["v " + " ".join(number % x for x in row) for row in _xyz(mesh)]
    skipped = 0
    for s in mesh.simplices:
        if len(s) == 3:
            lines.append("f " + " ".join(str(v + 1) for v in s))
        elif len(s) == 2:
            lines.append("l " + " ".join(str(v + 1) for v in s))
        elif len(s) > 3:
            skipped += 1
    if skipped:
        logger.warning("OBJ export skipped %d simplices of dimension above 2", skipped)
    return "\n".join(lines) + ("\n" if lines else "")
