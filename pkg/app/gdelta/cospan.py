"""Completing cospans in the comma category ([n]_k / th) to commuting squares."""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from exceptions import InvalidCospan
from gdelta.gposets import FinGPoset, GPosetMap, compose_gmaps, fiber_product, to_gposet
from gdelta.maps import GDeltaMap, compose, enumerate_hom
from gdelta.objects import SimplexObject
from gdelta.thickening import Chain, Thickening, level_inclusion, level_projection, th_map, thicken

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cospan:
    """f: th[p]_q -> th[a]_b and g: th[m]_l -> th[a]_b under [n]_k via alpha and gamma."""

    base: SimplexObject
    f: GPosetMap
    g: GPosetMap
    alpha: GPosetMap
    gamma: GPosetMap


@dataclass(frozen=True)
class CospanCompletion:
    apex: Thickening
    phi: GPosetMap
    psi: GPosetMap
    delta: GPosetMap
    pullback: FinGPoset
    h: GPosetMap

    def commutes(self, cospan: Cospan) -> bool:
        return (
            compose_gmaps(cospan.f, self.phi) == compose_gmaps(cospan.g, self.psi)
            and compose_gmaps(self.phi, self.delta) == cospan.alpha
            and compose_gmaps(self.psi, self.delta) == cospan.gamma
        )


def complete_cospan(cospan: Cospan) -> CospanCompletion:
    """Factor the induced [n]_k -> P through th[n]_k as h . rho, with delta = d0."""
    base = to_gposet(cospan.base)
    if cospan.alpha.src != base or cospan.gamma.src != base:
        raise InvalidCospan("legs must start at the base object")
    if cospan.alpha.tgt != cospan.f.src or cospan.gamma.tgt != cospan.g.src:
        raise InvalidCospan("legs do not land on the cospan's sources")
    beta = compose_gmaps(cospan.f, cospan.alpha)
    if beta != compose_gmaps(cospan.g, cospan.gamma):
        raise InvalidCospan("f . alpha differs from g . gamma")

    P, p1, p2 = fiber_product(cospan.f, cospan.g)
    lookup = {(p1(x), p2(x)): x for x in P.elements}
    h = GPosetMap(
        base,
        P,
        tuple((v, lookup[(cospan.alpha(v), cospan.gamma(v))]) for v in base.elements),
    )
    rho = level_projection(cospan.base)
    h_rho = compose_gmaps(h, rho)
    completion = CospanCompletion(
        apex=thicken(cospan.base),
        phi=compose_gmaps(p1, h_rho),
        psi=compose_gmaps(p2, h_rho),
        delta=level_inclusion(cospan.base, 0),
        pullback=P,
        h=h,
    )
    if not completion.commutes(cospan):
        raise InvalidCospan("completed square does not commute")
    logger.debug("Completed cospan over %s through a pullback of %d elements", cospan.base, len(P.elements))
    return completion


def factorizations(beta: GDeltaMap, middle: SimplexObject) -> List[Tuple[GDeltaMap, GDeltaMap]]:
    """All (w, y) with w : src -> middle and y . w = beta."""
    return [
        (w, y)
        for w in enumerate_hom(beta.src, middle)
        for y in enumerate_hom(middle, beta.tgt)
        if compose(y, w) == beta
    ]


def chain_cospan(u: GDeltaMap, x: GDeltaMap, w: GDeltaMap, y: GDeltaMap, threshold: int) -> Cospan:
    """th(x) and th(y) under the base through the chains (u, threshold) and (w, threshold)."""
    if u.src != w.src:
        raise InvalidCospan("legs must start at the same object")
    return Cospan(
        u.src,
        th_map(x),
        th_map(y),
        Chain(u, threshold).as_gposet_map(),
        Chain(w, threshold).as_gposet_map(),
    )
