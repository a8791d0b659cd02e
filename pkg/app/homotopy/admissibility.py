"""Admissible horns: the closed form and the composite-of-generators test."""

import logging
from typing import Optional, Tuple

from config.limits import require_bound
from exceptions import IndexOutOfRange
from gdelta.generators import codegeneracy, coface
from gdelta.maps import GDeltaMap, compose
from objects.standard import face_image
from presheaf.constructions import image, yoneda_map

logger = logging.getLogger(__name__)


def _check(n: int, k: int, l: int) -> None:
    if n < 1 or not 0 <= k <= n + 1 or not 0 <= l <= n:
        raise IndexOutOfRange(f"no horn Lambda^{n},{k}_{l}")


def is_admissible(n: int, k: int, l: int) -> bool:
    """Every horn except Lambda^{n,1}_0 and Lambda^{n,n}_n."""
    _check(n, k, l)
    return not ((k == 1 and l == 0) or (k == l == n))


def face_composite(n: int, k: int, l: int, a: int) -> Optional[GDeltaMap]:
    """d^l . s^a on [n]_k at the level of face l, or None when one of them is undefined."""
    eps = 1 if l < k else 0
    try:
        if eps == 1:
            s = codegeneracy(n - 1, k - 1, a, 1)
            d = coface(n - 1, k - 1, l, 1)
        else:
            s = codegeneracy(n - 1, k, a, 0)
            d = coface(n - 1, k, l, 0)
    except (IndexOutOfRange, ValueError):
        return None
    return compose(d, s)


def is_admissible_by_definition(n: int, k: int, l: int) -> bool:
    """Some a in {l-1, l} makes d^l s^a have exactly the l-th face as image."""
    _check(n, k, l)
    target = face_image(n, k, l, 1 if l < k else 0)
    for a in (l - 1, l):
        theta = face_composite(n, k, l, a)
        if theta is None:
            continue
        if set(image(yoneda_map(theta)).cells) == set(target.cells):
            return True
    return False


def admissibility_table(max_n: int) -> Tuple[list, list]:
    """(agreeing triples, disagreeing triples) over all horns up to max_n."""
    require_bound(max_n)
    agree, disagree = [], []
    for n in range(1, max_n + 1):
        for k in range(n + 2):
            for l in range(n + 1):
                closed = is_admissible(n, k, l)
                (agree if closed == is_admissible_by_definition(n, k, l) else disagree).append(
                    (n, k, l, closed)
                )
    logger.info("Admissibility up to n=%d: %d agree, %d disagree", max_n, len(agree), len(disagree))
    return agree, disagree
