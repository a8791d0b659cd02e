"""Geometric realization of isovariant simplicial sets and of the maps theta_*.

A cell of degree (n, k) realizes as two ordered simplices sharing their real face:
the e-chain, through the vertices (j, e), and the sigma-chain, through (j, s). Sigma
exchanges the two chains. In the realization of a set every cell contributes the simplex
of its e-chain, and its vertices are the 0-cells the chain pulls back to.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.limits import TOLERANCE
from cylinder.unionfind import UnionFind
from exceptions import InvalidPoint
from gdelta.maps import GDeltaMap, make_map
from gdelta.objects import BRANCHES, E, S, SimplexObject, Vertex
from presheaf.isosset import IsoSSet, cell_simplex
from realization.mesh import Mesh, simplicial_mesh

logger = logging.getLogger(__name__)

# branch flag of a vertex in the cellwise coordinates
_FLAG = {E: 1.0, S: -1.0}


def chains(obj: SimplexObject) -> Dict[str, Tuple[Vertex, ...]]:
    """The two maximal chains of [n]_k (they coincide when k = 0)."""
    return {b: tuple(obj.vertex(j, b) for j in range(obj.n + 1)) for b in BRANCHES}


def realize_cellwise(n: int, k: int) -> Mesh:
    """|Delta^{n,k}| in R^{n+2}: vertex j sits at the j-th unit vector, offset by +-1 along the
    last axis when it is free."""
    obj = SimplexObject(n, k)
    vertices = list(obj.vertices)
    index = {v: i for i, v in enumerate(vertices)}
    coordinates = np.zeros((len(vertices), n + 2))
    for v, i in index.items():
        coordinates[i, v.index] = 1.0
        if not obj.is_real(v.index):
            coordinates[i, n + 1] = _FLAG[v.branch]
    spans = {f"{branch}-chain": tuple(index[v] for v in chain) for branch, chain in chains(obj).items()}
    return simplicial_mesh([str(v) for v in vertices], coordinates, spans)


def _vertex_map(obj: SimplexObject, v: Vertex) -> GDeltaMap:
    point = SimplexObject(0, 0 if obj.is_real(v.index) else 1)
    return make_map(point, obj, [v])


def _vertex_coordinates(X: IsoSSet, names: List[str]) -> np.ndarray:
    """Orbits of 0-cells along a moment curve, free partners mirrored in the first axis."""
    coordinates = np.zeros((len(names), 3))
    orbit: Dict[str, int] = {}
    for i, name in enumerate(names):
        partner = X.swap_cell(name)
        t = float(orbit.setdefault(min(name, partner), len(orbit)))
        x = 0.0 if partner == name else (1.0 if name < partner else -1.0)
        coordinates[i] = (x, t, t * t)
    return coordinates


def realize(X: IsoSSet) -> Mesh:
    """Glue one simplex per cell of X along the face table.

    The simplex of a cell is its e-chain; the s-chain is the e-chain of the sigma partner.
    A face lands on the simplex of the cell it normalizes to, so a degenerate face
    collapses onto a lower simplex and cells glued along faces share them.
    """
    points = [c for c, d in X.cells.items() if d.n == 0]
    gluing: UnionFind = UnionFind(("0-cell", c) for c in points)
    local: Dict[str, Tuple[tuple, ...]] = {}
    for cell, degree in X.cells.items():
        keys = []
        for v in chains(degree)[E]:
            key = (cell, v)
            target = X.pull(cell_simplex(cell, degree), _vertex_map(degree, v)).cell
            gluing.union(("0-cell", target), key, root=("0-cell", target))
            keys.append(key)
        local[cell] = tuple(keys)

    names = sorted(points, key=lambda c: (X.cells[c].k, c))
    index = {("0-cell", c): i for i, c in enumerate(names)}
    order = names + [c for c in X.cells if X.cells[c].n > 0]
    position = {c: i for i, c in enumerate(order)}
    simplices: List[Tuple[int, ...]] = []
    faces: List[Tuple[int, ...]] = []
    for cell in order:
        chain = tuple(index[gluing.find(key)] for key in local[cell])
        if len(set(chain)) < len(chain):
            logger.debug("%s meets itself at a vertex in the realization", cell)
        simplices.append(chain)
        faces.append(tuple(position[f] for f in X.face_cells(cell)))
    mesh = Mesh(names, _vertex_coordinates(X, names), simplices, order, faces)
    logger.info("Realized %s with census %s", X.name or "object", mesh.census())
    return mesh


def euler_characteristic(X: IsoSSet) -> int:
    """Alternating count of the simplices of the realization, one per cell of X."""
    return realize(X).euler()


def _barycentric(point, size: int) -> np.ndarray:
    t = np.asarray(point, dtype=float)
    if t.shape != (size,):
        raise InvalidPoint(f"expected {size} barycentric coordinates, got shape {t.shape}")
    if (t < -TOLERANCE).any() or not np.isclose(t.sum(), 1.0):
        raise InvalidPoint(f"{t} is not a point of the standard simplex")
    return t


def theta_star(theta: GDeltaMap, point) -> np.ndarray:
    """Push barycentric coordinates on the chains of src forward along theta.

    Coordinate i of the image is the sum of the t_j over the j that theta sends to index i.
    The chain the image lies on is the one theta sends the e-chain to (see theta.twisted).
    """
    t = _barycentric(point, theta.src.n + 1)
    return np.bincount(np.array(theta.index_map), weights=t, minlength=theta.tgt.n + 1)


def theta_star_real(theta: GDeltaMap, point) -> np.ndarray:
    """The restriction of theta_* to real faces, in coordinates t_k .. t_n."""
    src, tgt = theta.src, theta.tgt
    t = _barycentric(point, src.n - src.k + 1)
    out = np.zeros(tgt.n - tgt.k + 1)
    np.add.at(out, np.array(theta.index_map[src.k :], dtype=int) - tgt.k, t)
    return out


def include_real(obj: SimplexObject, point) -> np.ndarray:
    """The inclusion of the real face of |[n]_k| into the chains."""
    t = _barycentric(point, obj.n - obj.k + 1)
    return np.concatenate([np.zeros(obj.k), t])


def naturality_residual(theta: GDeltaMap, point) -> float:
    """max |theta_*(iota(t)) - iota(theta_*^real(t))| for t on the real face of src."""
    left = theta_star(theta, include_real(theta.src, point))
    right = include_real(theta.tgt, theta_star_real(theta, point))
    return float(np.max(np.abs(left - right)))


def random_point(size: int, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    rng = rng if rng is not None else np.random.default_rng()
    return rng.dirichlet(np.ones(size))
