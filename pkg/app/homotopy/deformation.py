"""Deformations of Delta^{n,k} into an admissible horn.

For a horn Lambda^{n,k}_l pick a neighbour m = l +- 1 in the same isotropy band
(l + 1 when it exists). phi = d^m s^{min(l,m)} sends m onto l, so its image misses
vertex m and lies in the horn. The homotopy moves m to l on one level of the
cylinder and is the identity on the other.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from cylinder.bundle import cylinder, cylinder_map
from exceptions import NotAdmissible
from gdelta.generators import codegeneracy_from, coface_between
from gdelta.maps import GDeltaMap, compose as compose_gdelta
from gdelta.objects import SimplexObject
from homotopy.admissibility import is_admissible
from homotopy.homotopies import EquivalenceResult, Homotopy, thickened_map
from objects.standard import horn
from presheaf.constructions import representable, yoneda_map
from presheaf.isosset import IsoSSet
from presheaf.maps import PresheafMap, compose, identity, inclusion

logger = logging.getLogger(__name__)


def neighbour(n: int, k: int, l: int) -> Optional[int]:
    """An index next to l in the same band, preferring l + 1."""
    low, high = (0, k - 1) if l < k else (k, n)
    for m in (l + 1, l - 1):
        if low <= m <= high:
            return m
    return None


def retraction_map(n: int, k: int, l: int, m: int) -> GDeltaMap:
    obj = SimplexObject(n, k)
    s = codegeneracy_from(obj, min(l, m))
    return compose_gdelta(coface_between(s.tgt, obj, m), s)


@dataclass(frozen=True)
class Deformation:
    n: int
    k: int
    l: int
    neighbour: int
    theta: GDeltaMap
    phi: PresheafMap
    homotopy: Homotopy
    horn: IsoSSet

    @property
    def forward(self) -> bool:
        """True when the homotopy runs from phi to the identity."""
        return self.neighbour == self.l + 1

    def endpoints_hold(self) -> bool:
        ident = identity(self.phi.src)
        start, end = (self.phi, ident) if self.forward else (ident, self.phi)
        return self.homotopy.joins(start, end)

    def phi_in_horn(self) -> bool:
        return set(self.phi.image_cells()) <= set(self.horn.cells)

    def horn_homotopy(self) -> Optional[Homotopy]:
        """The homotopy restricted to I(horn), corestricted to the horn."""
        iota = inclusion(self.horn, self.phi.src)
        small = cylinder(self.horn)
        restricted = compose(self.homotopy.underlying, cylinder_map(iota, small, self.homotopy.bundle))
        if not set(restricted.image_cells()) <= set(self.horn.cells):
            return None
        return Homotopy(small, PresheafMap(small.total, self.horn, restricted.table))

    def verified(self) -> bool:
        return self.endpoints_hold() and self.phi_in_horn() and self.horn_homotopy() is not None


def deformation(n: int, k: int, l: int) -> Deformation:
    if not is_admissible(n, k, l):
        raise NotAdmissible(f"Lambda^{n},{k}_{l} is not admissible")
    m = neighbour(n, k, l)
    obj = SimplexObject(n, k)
    theta = retraction_map(n, k, l, m)
    moving_level = 0 if m == l + 1 else 1

    def h(v, level):
        return theta(v) if level == moving_level else v

    bundle = cylinder(representable(n, k))
    H = Homotopy(bundle, thickened_map(bundle, obj, obj, h))
    logger.info("Deformation of Lambda^%d,%d_%d through vertex %d", n, k, l, m)
    return Deformation(n, k, l, m, theta, yoneda_map(theta), H, horn(n, k, l))


def certify_horn(n: int, k: int, l: int) -> EquivalenceResult:
    """Witness that an admissible horn inclusion is an elementary homotopy equivalence."""
    d = deformation(n, k, l)
    small = d.horn_homotopy()
    if not (d.endpoints_hold() and d.phi_in_horn()) or small is None:
        logger.warning("Deformation of Lambda^%d,%d_%d failed its checks", n, k, l)
        return EquivalenceResult(False)
    iota = inclusion(d.horn, d.phi.src)
    psi = PresheafMap(d.phi.src, d.horn, d.phi.table)
    left_ends = (compose(psi, iota), identity(d.horn))
    if not d.forward:
        left_ends = left_ends[::-1]
    if not small.joins(*left_ends):
        return EquivalenceResult(False)
    return EquivalenceResult(True, psi, [small], [d.homotopy])
