"""Admissible horn inclusions as retracts of cylinder inclusions.

q : Delta^{n,k} -> I Delta^{n,k} is the chain jumping level at a threshold and
r : I Delta^{n,k} -> Delta^{n,k} is induced by a map th[n]_k -> [n]_k. Together
they make the horn inclusion a retract of I(horn) u {eps}Delta -> I Delta.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Tuple

from config.limits import SEARCH_LIMITS
from cylinder.bundle import cell_name, cylinder, cylinder_inclusion
from exceptions import IsovError, NotAdmissible
from gdelta.gposets import enumerate_gposet_maps, parse_vertex_id, to_gposet, vertex_id
from gdelta.maps import identity as identity_map
from gdelta.objects import SimplexObject, Vertex
from gdelta.thickening import thicken
from homotopy.admissibility import is_admissible
from homotopy.homotopies import thickened_map
from objects.standard import horn
from presheaf.constructions import representable, simplex_map, top_cell
from presheaf.isosset import IsoSSet, cell_simplex
from presheaf.maps import PresheafMap, compose, inclusion

logger = logging.getLogger(__name__)

RetractTable = Callable[[int, int], int]


@dataclass
class RetractWitness:
    n: int
    k: int
    l: int
    q: PresheafMap
    r: PresheafMap
    eps: int
    threshold: int
    case: str
    found_by: str
    horn: IsoSSet
    sub: IsoSSet

    def retracts(self) -> bool:
        """r after q is the identity of Delta^{n,k}."""
        composite = compose(self.r, self.q)
        return all(s == cell_simplex(c, s.degree) for c, s in composite.table.items())

    def q_contained(self) -> bool:
        return all(self.q.table[c].cell in self.sub.cells for c in self.horn.cells)

    def r_contained(self) -> bool:
        return all(self.r.table[c].cell in self.horn.cells for c in self.sub.cells)

    def diagram_commutes(self) -> bool:
        """The restricted maps horn -> sub -> horn compose to the identity."""
        return all(
            self.r(self.q.table[c]) == cell_simplex(c, d) for c, d in self.horn.cells.items()
        )

    @property
    def ok(self) -> bool:
        return self.retracts() and self.q_contained() and self.r_contained() and self.diagram_commutes()


def _case_a(n: int, k: int, l: int) -> Tuple[RetractTable, int]:
    def r(i: int, level: int) -> int:
        if level == 0:
            return l if l < i <= k - 1 else i
        return l if i <= l else i

    return r, l


def _case_b(n: int, k: int, l: int) -> Tuple[RetractTable, int]:
    def r(i: int, level: int) -> int:
        if level == 0:
            return i if i < l else l
        return l if k <= i <= l else i

    return r, l


def _case_c(n: int, k: int, l: int) -> Tuple[RetractTable, int]:
    def r(i: int, level: int) -> int:
        if level == 0 and i <= k - 1:
            return 0
        return i

    return r, 1


def proof_case(n: int, k: int, l: int) -> Tuple[str, int]:
    """Case name and preferred level."""
    if 0 < l <= k - 1:
        return "a", 1
    if l == 0 and k >= 1:
        return "c", 0
    if l < n:
        return "b", 1
    return "top", 1


_TABLES = {"a": _case_a, "b": _case_b, "c": _case_c, "top": _case_b}


def _q(n: int, k: int, threshold: int) -> PresheafMap:
    obj = SimplexObject(n, k)
    bundle = cylinder(representable(n, k))
    name = cell_name(top_cell(obj), identity_map(obj), threshold)
    return simplex_map(bundle.total, cell_simplex(name, obj))


def _r(n: int, k: int, table: RetractTable) -> Optional[PresheafMap]:
    obj = SimplexObject(n, k)
    bundle = cylinder(representable(n, k))

    def h(v: Vertex, level: int) -> Vertex:
        return obj.vertex(table(v.index, level), v.branch)

    try:
        return thickened_map(bundle, obj, obj, h)
    except IsovError as exc:
        logger.debug("Retract table rejected: %s", exc)
        return None


@lru_cache(maxsize=None)
def _horn_and_sub(n: int, k: int, l: int, eps: int) -> Tuple[IsoSSet, IsoSSet]:
    small = horn(n, k, l)
    sub, _ = cylinder_inclusion(inclusion(small, representable(n, k)), eps)
    return small, sub


def _witness(n, k, l, q, r, eps, threshold, case, found_by) -> RetractWitness:
    small, sub = _horn_and_sub(n, k, l, eps)
    return RetractWitness(n, k, l, q, r, eps, threshold, case, found_by, small, sub)


def _searched(n: int, k: int, l: int, case: str) -> Iterator[RetractWitness]:
    obj = SimplexObject(n, k)
    th = thicken(obj)
    base = to_gposet(obj)
    bundle = cylinder(representable(n, k))
    for eps in SEARCH_LIMITS["retract_levels"]:
        for threshold in range(n + 2):
            fixed = {
                th.element(v, 0 if v.index < threshold else 1): vertex_id(v, obj) for v in obj.vertices
            }
            q = _q(n, k, threshold)
            for rt in enumerate_gposet_maps(th.poset, base, fixed):
                table = {key: parse_vertex_id(value) for key, value in rt.table}

                def h(v: Vertex, level: int, table=table) -> Vertex:
                    return table[th.element(v, level)]

                r = thickened_map(bundle, obj, obj, h)
                yield _witness(n, k, l, q, r, eps, threshold, case, "search")


def retract_witness(n: int, k: int, l: int) -> RetractWitness:
    """Tables first at the preferred level, then the other level, then a search."""
    if not is_admissible(n, k, l):
        raise NotAdmissible(f"Lambda^{n},{k}_{l} is not admissible")
    case, preferred = proof_case(n, k, l)
    table, threshold = _TABLES[case](n, k, l)
    r = _r(n, k, table)
    if r is not None:
        q = _q(n, k, threshold)
        for eps in (preferred, 1 - preferred):
            witness = _witness(n, k, l, q, r, eps, threshold, case, "table")
            if witness.ok:
                if eps != preferred:
                    logger.warning("Retract of Lambda^%d,%d_%d needs level %d", n, k, l, eps)
                return witness
    logger.warning("Retract tables failed for Lambda^%d,%d_%d, searching", n, k, l)
    for witness in _searched(n, k, l, case):
        if witness.ok:
            return witness
    raise NotAdmissible(f"no retract witness for Lambda^{n},{k}_{l}")
