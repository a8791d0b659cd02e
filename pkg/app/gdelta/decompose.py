"""Normal form theta = g . gamma . eta of a morphism."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from gdelta.generators import codegeneracy_from, coface_between
from gdelta.maps import GDeltaMap, _unchecked, compose, compose_all, swap
from gdelta.objects import SimplexObject


@dataclass(frozen=True)
class Decomposition:
    """Codegeneracies in decreasing collapsed index, then cofaces in increasing
    omitted index, then the swap when `sigma` is set."""

    source: SimplexObject
    sigma: bool
    cofaces: Tuple[GDeltaMap, ...]
    codegeneracies: Tuple[GDeltaMap, ...]

    @property
    def g(self) -> str:
        return "sigma" if self.sigma else "id"

    @property
    def eta(self) -> GDeltaMap:
        return compose_all(self.codegeneracies, self.source)

    @property
    def gamma(self) -> GDeltaMap:
        return compose_all(self.cofaces, self.eta.tgt)

    def recompose(self) -> GDeltaMap:
        theta = compose_all(self.codegeneracies + self.cofaces, self.source)
        if self.sigma:
            theta = compose(swap(theta.tgt), theta)
        return theta


@lru_cache(maxsize=None)
def decompose(theta: GDeltaMap) -> Decomposition:
    src, tgt = theta.src, theta.tgt
    h = theta.index_map

    codegens = []
    current = src
    for j in reversed(range(src.n)):
        if h[j] == h[j + 1]:
            step = codegeneracy_from(current, j)
            codegens.append(step)
            current = step.tgt

    hit = sorted(set(h))
    cofaces = []
    for i in theta.missing_indices():
        nxt = SimplexObject(current.n + 1, current.k + (1 if i < tgt.k else 0))
        step = coface_between(current, nxt, i)
        cofaces.append(step)
        current = nxt
    assert current == tgt and len(hit) + len(cofaces) == tgt.n + 1

    return Decomposition(src, theta.twisted, tuple(cofaces), tuple(codegens))


def epi_mono(theta: GDeltaMap) -> Tuple[GDeltaMap, GDeltaMap]:
    """theta = mono . epi with the epi keeping the e branch."""
    parts = decompose(theta)
    eta = parts.eta
    mono = parts.gamma
    if parts.sigma:
        mono = compose(swap(mono.tgt), mono)
    return eta, mono


def canonical_epi(src: SimplexObject, groups: Tuple[int, ...], tgt: SimplexObject) -> GDeltaMap:
    """The e-preserving surjection sending index j to groups[j]."""
    return _unchecked(src, tgt, groups)
