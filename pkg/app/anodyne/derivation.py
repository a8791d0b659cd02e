"""Finite derivations of admissible horns and cylinder generators.

A horn node is a retract of a generator node; a generator node is the composite
of the pushouts recorded in its filtration, one leaf per attached horn.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from anodyne.filtration import build_filtration, verify_stage
from anodyne.retract import retract_witness
from config.formats import DOCUMENT_FORMATS
from exceptions import InvalidDocument
from homotopy.admissibility import is_admissible
from objects.standard import horns

logger = logging.getLogger(__name__)


@dataclass
class DerivationNode:
    kind: str
    label: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    children: List["DerivationNode"] = field(default_factory=list)

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=-1)

    def all_passed(self) -> bool:
        return self.passed and all(c.all_passed() for c in self.children)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "label": self.label,
            "passed": self.passed,
            "detail": self.detail,
            "children": [c.to_dict() for c in self.children],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DerivationNode":
        try:
            return cls(
                data["kind"],
                data["label"],
                bool(data["passed"]),
                dict(data.get("detail", {})),
                [cls.from_dict(c) for c in data.get("children", [])],
            )
        except (KeyError, TypeError) as exc:
            raise InvalidDocument(f"malformed derivation node: {exc}") from exc


def derivation_document(nodes: List[DerivationNode]) -> Dict[str, Any]:
    doc = dict(DOCUMENT_FORMATS["derivation"])
    doc["derivations"] = [node.to_dict() for node in nodes]
    return doc


def derive_generator(n: int, k: int, eps: int) -> DerivationNode:
    """I(boundary) u {eps}Delta -> I Delta as a composite of horn pushouts."""
    filtration = build_filtration(n, k, eps)
    leaves = []
    for step, index in enumerate(filtration.order):
        report = verify_stage(filtration, step)
        leaves.append(
            DerivationNode(
                "pushout",
                f"E{step - 1} -> E{step}",
                report.ok,
                {"index": index, "cell": report.cell, "horn": list(report.horn or ()), "notes": report.notes},
            )
        )
    passed = filtration.is_increasing() and filtration.is_complete()
    detail = {"n": n, "k": k, "eps": eps, "attached": list(filtration.attached)}
    return DerivationNode("generator", f"B({n},{k},{eps})", passed, detail, leaves)


def derive_horn(n: int, k: int, l: int) -> DerivationNode:
    """The horn inclusion as a retract of a generator."""
    witness = retract_witness(n, k, l)
    detail = {
        "n": n,
        "k": k,
        "l": l,
        "eps": witness.eps,
        "threshold": witness.threshold,
        "case": witness.case,
        "found_by": witness.found_by,
        "r": {c: str(s) for c, s in sorted(witness.r.table.items())},
    }
    child = derive_generator(n, k, witness.eps)
    return DerivationNode("retract", f"Lambda({n},{k},{l})", witness.ok, detail, [child])


@dataclass
class MembershipReport:
    horns: List[DerivationNode] = field(default_factory=list)
    generators: List[DerivationNode] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(node.all_passed() for node in self.horns + self.generators)

    def failures(self) -> List[str]:
        return [node.label for node in self.horns + self.generators if not node.all_passed()]


def verify_generator_membership(max_horn_n: int = 3, max_generator_n: int = 2) -> MembershipReport:
    report = MembershipReport()
    for n, k, l in horns(max_horn_n):
        if is_admissible(n, k, l):
            report.horns.append(derive_horn(n, k, l))
    for n in range(max_generator_n + 1):
        for k in range(n + 2):
            for eps in (0, 1):
                report.generators.append(derive_generator(n, k, eps))
    logger.info(
        "Membership: %d horns, %d generators, %d failures",
        len(report.horns),
        len(report.generators),
        len(report.failures()),
    )
    return report


def _params(node: DerivationNode, keys: Tuple[str, ...]) -> Tuple[int, ...]:
    try:
        return tuple(int(node.detail[key]) for key in keys)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDocument(f"{node.label}: missing {exc}") from exc


def replay_derivation(node: DerivationNode) -> List[str]:
    """Rebuild every map a derivation records and list the differences."""
    issues: List[str] = []
    if node.kind == "retract":
        n, k, l = _params(node, ("n", "k", "l"))
        witness = retract_witness(n, k, l)
        if not witness.ok:
            issues.append(f"{node.label}: rebuilt witness fails its checks")
        if witness.eps != node.detail.get("eps") or witness.threshold != node.detail.get("threshold"):
            issues.append(f"{node.label}: level or threshold differs")
        rebuilt = {c: str(s) for c, s in sorted(witness.r.table.items())}
        if node.detail.get("r") not in (None, rebuilt):
            issues.append(f"{node.label}: retraction differs")
    elif node.kind == "generator":
        n, k, eps = _params(node, ("n", "k", "eps"))
        filtration = build_filtration(n, k, eps)
        if list(filtration.attached) != list(node.detail.get("attached", [])):
            issues.append(f"{node.label}: attached cells differ")
        for step, leaf in enumerate(node.children):
            report = verify_stage(filtration, step)
            if list(report.horn or ()) != list(leaf.detail.get("horn", [])) or report.ok != leaf.passed:
                issues.append(f"{leaf.label}: stage differs")
        return issues
    elif node.kind != "pushout":
        issues.append(f"{node.label}: unknown kind {node.kind!r}")
    for child in node.children:
        issues.extend(replay_derivation(child))
    return issues
