"""The filtration of I Delta^{n,k} by attached top chains.

E_{-1} is I(boundary) together with one end of the cylinder. Each later stage
attaches one top cell of I Delta^{n,k} (with its sigma twin) along a horn.

For k = 0 and k = n + 1 the same attachments give the classical prism filtration
(on both branches at once when every vertex is free), so those degrees need no
separate construction.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from cylinder.bundle import CylinderBundle, cylinder, cylinder_inclusion
from exceptions import IndexOutOfRange
from gdelta.objects import SimplexObject
from homotopy.admissibility import is_admissible
from objects.standard import boundary, horn
from presheaf.constructions import generated, preimage, pushout, representable, simplex_map, sub_intersection, top_cell
from presheaf.isosset import IsoSSet, cell_simplex
from presheaf.maps import PresheafMap, compose, inclusion
from presheaf.search import isomorphic, search_maps

logger = logging.getLogger(__name__)


@dataclass
class Filtration:
    n: int
    k: int
    eps: int
    bundle: CylinderBundle
    stages: List[IsoSSet]
    attached: List[str]
    order: List[int]

    def stage(self, i: int) -> IsoSSet:
        """E_i for i = -1 .. n, indexed by attachment step."""
        return self.stages[i + 1]

    def is_increasing(self) -> bool:
        return all(
            set(a.cells) < set(b.cells) for a, b in zip(self.stages, self.stages[1:])
        )

    def is_complete(self) -> bool:
        return set(self.stages[-1].cells) == set(self.bundle.total.cells)

    @property
    def classical(self) -> bool:
        """No mixed isotropy: the prism filtration of an ordinary simplex."""
        return self.k in (0, self.n + 1)


def attached_cell(n: int, k: int, i: int) -> str:
    """The top chain of I Delta^{n,k} jumping level between vertices i and i + 1."""
    return f"I[{top_cell(SimplexObject(n, k))}]s{i}"


def generator_class(n: int, k: int, eps: int) -> Tuple[IsoSSet, PresheafMap]:
    """The inclusion I(boundary) u {eps}Delta^{n,k} -> I Delta^{n,k}."""
    delta = representable(n, k)
    return cylinder_inclusion(inclusion(boundary(n, k), delta), eps)


def build_filtration(n: int, k: int, eps: int = 1) -> Filtration:
    """Stages E_{-1}, ..., E_n of I Delta^{n,k}, starting from the eps end."""
    if n < 0 or not 0 <= k <= n + 1:
        raise IndexOutOfRange(f"no object [{n}]_{k}")
    bundle = cylinder(representable(n, k))
    start, _ = generator_class(n, k, eps)
    order = list(range(n + 1)) if eps == 1 else list(range(n, -1, -1))
    stages = [start]
    attached = []
    for i in order:
        cell = attached_cell(n, k, i)
        attached.append(cell)
        stages.append(generated(bundle.total, list(stages[-1].cells) + [cell], name=f"E{len(stages) - 1}"))
    logger.info(
        "Filtration of I Delta^%d,%d: %d stages%s", n, k, len(stages), " (classical)" if k in (0, n + 1) else ""
    )
    return Filtration(n, k, eps, bundle, stages, attached, order)


@dataclass
class StageReport:
    step: int
    index: int
    cell: str
    pushout_isomorphic: bool = False
    universal: bool = False
    attaching_mono: bool = False
    horn: Optional[Tuple[int, int, int]] = None
    admissible: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pushout_isomorphic and self.universal and self.attaching_mono and self.admissible


def _unique_extension(P: IsoSSet, leg_a: PresheafMap, leg_b: PresheafMap, a: PresheafMap, b: PresheafMap) -> bool:
    """Exactly one map out of P restricting to the cone (a, b)."""
    fixed = {}
    for c, s in leg_a.table.items():
        fixed[s.cell] = a.table[c]
    for c, s in leg_b.table.items():
        if s.cell in fixed and fixed[s.cell] != b.table[c]:
            return False
        fixed[s.cell] = b.table[c]
    found = 0
    for _ in search_maps(P, a.tgt, fixed):
        found += 1
        if found > 1:
            return False
    return found == 1


def _horn_index(F: PresheafMap, before: IsoSSet, expected: int) -> Optional[Tuple[int, int, int]]:
    """(n, k, l) of the horn that is the preimage of `before` under F : Delta^{n,k} -> IX."""
    degree = max(F.src.cells.values())
    pre = preimage(F, before)
    candidates = [expected] + [l for l in range(degree.n + 1) if l != expected]
    for l in candidates:
        if 0 <= l <= degree.n and set(horn(degree.n, degree.k, l).cells) == set(pre.cells):
            return degree.n, degree.k, l
    for l in candidates:
        if 0 <= l <= degree.n and isomorphic(horn(degree.n, degree.k, l), pre):
            return degree.n, degree.k, l
    return None


def verify_stage(filtration: Filtration, step: int) -> StageReport:
    """Check the pushout square and the attaching horn of one stage."""
    i = filtration.order[step]
    cell = filtration.attached[step]
    before, after = filtration.stages[step], filtration.stages[step + 1]
    total = filtration.bundle.total
    report = StageReport(step, i, cell)

    F = generated(total, [cell], name=f"F{i}")
    inter = sub_intersection(before, F, total)
    P, leg_f, leg_e = pushout(inclusion(inter, F), inclusion(inter, before), name=f"P{i}")
    report.pushout_isomorphic = isomorphic(P, after)

    into_after = inclusion(after, total)
    cones = [
        (inclusion(F, after), inclusion(before, after)),
        (
            compose(filtration.bundle.rho, compose(into_after, inclusion(F, after))),
            compose(filtration.bundle.rho, compose(into_after, inclusion(before, after))),
        ),
    ]
    report.universal = all(_unique_extension(P, leg_f, leg_e, a, b) for a, b in cones)

    classifying = simplex_map(total, cell_simplex(cell, total.degree(cell)))
    report.attaching_mono = classifying.is_mono()
    expected = i + 1 if filtration.eps == 1 else i
    report.horn = _horn_index(classifying, before, expected)
    if report.horn is None:
        report.notes.append("attaching subobject is not a horn")
    else:
        report.admissible = is_admissible(*report.horn)
        if report.horn[2] != expected:
            report.notes.append(f"horn index {report.horn[2]}, expected {expected}")
    logger.info("Stage %d of I Delta^%d,%d: %s", i, filtration.n, filtration.k, "ok" if report.ok else "fails")
    return report


def verify_filtration(filtration: Filtration) -> List[StageReport]:
    return [verify_stage(filtration, step) for step in range(len(filtration.order))]
