"""Exhaustive check of the isovariant cosimplicial relations."""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

import pandas as pd

from config.limits import require_bound
from exceptions import IndexOutOfRange, IsovError
from gdelta.generators import codegeneracy_from, coface, coface_between
from gdelta.maps import GDeltaMap, compose, identity, make_map, swap
from gdelta.objects import SimplexObject

logger = logging.getLogger(__name__)


@dataclass
class RelationInstance:
    family: str
    obj: SimplexObject
    detail: str
    passed: bool


@dataclass
class RelationReport:
    max_n: int
    instances: List[RelationInstance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def failures(self) -> List[RelationInstance]:
        return [inst for inst in self.instances if not inst.passed]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "family": inst.family,
                    "object": str(inst.obj),
                    "instance": inst.detail,
                    "passed": inst.passed,
                }
                for inst in self.instances
            ]
        )

    def summary(self) -> str:
        if self.passed:
            return f"all {len(self.instances)} instances pass"
        return f"{len(self.failures)} of {len(self.instances)} instances fail"


def objects_up_to(max_n: int) -> Iterator[SimplexObject]:
    require_bound(max_n)
    for n in range(max_n + 1):
        for k in range(n + 2):
            yield SimplexObject(n, k)


def _cofaces_out_of(obj: SimplexObject) -> Iterator[tuple]:
    for eps in (0, 1):
        for i in range(obj.n + 2):
            try:
                yield i, eps, coface(obj.n, obj.k, i, eps)
            except IndexOutOfRange:
                continue


def _codegeneracy(obj: SimplexObject, i: int) -> Optional[GDeltaMap]:
    try:
        return codegeneracy_from(obj, i)
    except IndexOutOfRange:
        return None


def _validated(theta: Optional[GDeltaMap]) -> Optional[GDeltaMap]:
    """theta rebuilt through make_map, or None when it is not a morphism."""
    if theta is None:
        return None
    try:
        return make_map(theta.src, theta.tgt, theta.images)
    except IsovError as exc:
        logger.debug("%s is not a morphism: %s", theta, exc)
        return None


def _agree(lhs: Optional[GDeltaMap], rhs: Optional[GDeltaMap]) -> bool:
    lhs, rhs = _validated(lhs), _validated(rhs)
    return lhs is not None and lhs == rhs


def _coface_coface(obj: SimplexObject, report: RelationReport) -> None:
    # d^j d^i = d^i d^(j-1) for i < j
    for i, e1, first in _cofaces_out_of(obj):
        for j, e2, second in _cofaces_out_of(first.tgt):
            if i >= j:
                continue
            lhs = compose(second, first)
            rhs = None
            for _, _, inner in _cofaces_out_of(obj):
                if inner.missing_indices() != (j - 1,):
                    continue
                try:
                    outer = coface_between(inner.tgt, lhs.tgt, i)
                except IndexOutOfRange:
                    continue
                rhs = compose(outer, inner)
            detail = f"d^{j}_{e2} d^{i}_{e1}"
            report.instances.append(RelationInstance("coface", obj, detail, _agree(lhs, rhs)))


def _codegeneracy_codegeneracy(obj: SimplexObject, report: RelationReport) -> None:
    # s^j s^i = s^i s^(j+1) for i <= j
    for i in range(obj.n):
        first = _codegeneracy(obj, i)
        if first is None:
            continue
        for j in range(i, first.tgt.n):
            second = _codegeneracy(first.tgt, j)
            if second is None:
                continue
            lhs = compose(second, first)
            inner = _codegeneracy(obj, j + 1)
            outer = _codegeneracy(inner.tgt, i) if inner is not None else None
            rhs = compose(outer, inner) if outer is not None else None
            detail = f"s^{j} s^{i}"
            report.instances.append(
                RelationInstance("codegeneracy", obj, detail, _agree(lhs, rhs))
            )


def _mixed(obj: SimplexObject, report: RelationReport) -> None:
    # s^j d^i = d^i s^(j-1) (i < j), id (i = j, j+1), d^(i-1) s^j (i > j+1)
    for i, eps, face in _cofaces_out_of(obj):
        middle = face.tgt
        for j in range(middle.n):
            degen = _codegeneracy(middle, j)
            if degen is None:
                continue
            lhs = compose(degen, face)
            rhs = None
            if i in (j, j + 1):
                rhs = identity(obj)
            else:
                inner_index, outer_index = (j - 1, i) if i < j else (j, i - 1)
                inner = _codegeneracy(obj, inner_index)
                if inner is not None:
                    try:
                        rhs = compose(coface_between(inner.tgt, lhs.tgt, outer_index), inner)
                    except IndexOutOfRange:
                        rhs = None
            detail = f"s^{j} d^{i}_{eps}"
            report.instances.append(RelationInstance("mixed", obj, detail, _agree(lhs, rhs)))


def _swap_family(obj: SimplexObject, report: RelationReport) -> None:
    sigma = swap(obj)
    report.instances.append(
        RelationInstance("swap", obj, "sigma sigma = id", _agree(compose(sigma, sigma), identity(obj)))
    )
    for i, eps, face in _cofaces_out_of(obj):
        ok = _agree(compose(face, sigma), compose(swap(face.tgt), face))
        report.instances.append(RelationInstance("swap", obj, f"d^{i}_{eps} sigma", ok))
    for j in range(obj.n):
        degen = _codegeneracy(obj, j)
        if degen is not None:
            ok = _agree(compose(degen, sigma), compose(swap(degen.tgt), degen))
            report.instances.append(RelationInstance("swap", obj, f"s^{j} sigma", ok))


def _generators(max_n: int, report: RelationReport) -> None:
    for theta in generating_maps(max_n):
        report.instances.append(
            RelationInstance("generator", theta.src, str(theta), _validated(theta) == theta)
        )


def check_cosimplicial_relations(max_n: int) -> RelationReport:
    """Every legal instance of the four relation families with objects up to max_n,
    plus a validity check of each generating map."""
    if max_n < 1:
        raise IndexOutOfRange("relations need max_n >= 1")
    report = RelationReport(max_n)
    for obj in objects_up_to(max_n):
        if obj.n + 2 <= max_n:
            _coface_coface(obj, report)
        if obj.n >= 2:
            _codegeneracy_codegeneracy(obj, report)
        if obj.n + 1 <= max_n:
            _mixed(obj, report)
        _swap_family(obj, report)
    _generators(max_n, report)
    logger.info("Checked %d relation instances up to n=%d", len(report.instances), max_n)
    return report


def generating_maps(max_n: int) -> Iterator[GDeltaMap]:
    """Cofaces, codegeneracies and swaps between objects up to max_n."""
    for obj in objects_up_to(max_n):
        if obj.n + 1 <= max_n:
            for _, _, d in _cofaces_out_of(obj):
                yield d
        for i in range(obj.n):
            s = _codegeneracy(obj, i)
            if s is not None:
                yield s
        yield swap(obj)
