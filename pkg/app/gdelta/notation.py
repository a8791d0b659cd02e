"""Readable labels for monomorphisms and chains into [n]_k."""

import re
from typing import List, Optional, Sequence

from exceptions import InvalidDocument
from gdelta.maps import GDeltaMap, make_map
from gdelta.objects import E, S, SimplexObject

TWIST = "^σ"
_TOKEN = re.compile(r"v(\d+)\^([cr])(?:@([01]))?")


def _tokens(theta: GDeltaMap, levels: Optional[Sequence[int]]) -> str:
    free, real = [], []
    for j, v in enumerate(theta.images):
        token = f"v{v.index}^{'c' if v.index < theta.tgt.k else 'r'}"
        if levels is not None:
            token += f"@{levels[j]}"
        (free if j < theta.src.k else real).append(token)
    body = " | ".join(part for part in (" ".join(free), " ".join(real)) if part)
    return f"⟨{body}⟩" + (TWIST if theta.twisted else "")


def format_mono(theta: GDeltaMap) -> str:
    """Label such as ⟨v0^c | v1^r v2^r⟩; twisted cells end in ^σ."""
    return _tokens(theta, None)


def format_chain(theta: GDeltaMap, levels: Sequence[int]) -> str:
    return _tokens(theta, levels)


def parse_label(text: str, tgt: SimplexObject) -> tuple:
    """Inverse of format_mono / format_chain: (map, levels or None)."""
    text = text.strip()
    twisted = text.endswith(TWIST) or text.endswith("ˆσ")
    if twisted:
        text = text[: -len(TWIST)]
    if not (text.startswith("⟨") and text.endswith("⟩")):
        raise InvalidDocument(f"not a cell label: {text!r}")
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise InvalidDocument(f"no vertices in {text!r}")
    free = sum(1 for _, kind, _ in tokens if kind == "c")
    src = SimplexObject(len(tokens) - 1, free)
    branch = S if twisted else E
    images = [tgt.vertex(int(j), branch) for j, _, _ in tokens]
    levels: Optional[List[int]] = None
    if any(level for _, _, level in tokens):
        levels = [int(level) for _, _, level in tokens]
    return make_map(src, tgt, images), levels


def parse_mono(text: str, tgt: SimplexObject) -> GDeltaMap:
    theta, _ = parse_label(text, tgt)
    return theta
