"""Coface, codegeneracy and swap generators."""

from functools import lru_cache

from exceptions import IndexOutOfRange
from gdelta.maps import GDeltaMap, _unchecked, swap as _swap
from gdelta.objects import SimplexObject


@lru_cache(maxsize=None)
def coface(n: int, k: int, i: int, eps: int) -> GDeltaMap:
    """d^i_eps out of [n]_k, skipping index i.

    eps = 0 inserts a real vertex (k <= i <= n+1, target [n+1]_k);
    eps = 1 inserts a free pair (0 <= i <= k, target [n+1]_{k+1}).
    """
    src = SimplexObject(n, k)
    if eps == 0:
        if not k <= i <= n + 1:
            raise IndexOutOfRange(f"real coface d^{i}_0 needs {k} <= i <= {n + 1}")
        tgt = SimplexObject(n + 1, k)
    elif eps == 1:
        if not 0 <= i <= k:
            raise IndexOutOfRange(f"free coface d^{i}_1 needs 0 <= i <= {k}")
        tgt = SimplexObject(n + 1, k + 1)
    else:
        raise IndexOutOfRange(f"level must be 0 or 1, got {eps}")
    return _unchecked(src, tgt, (j if j < i else j + 1 for j in range(n + 1)))


@lru_cache(maxsize=None)
def codegeneracy(n: int, k: int, i: int, eps: int) -> GDeltaMap:
    """s^i_eps onto [n]_k, collapsing i and i+1 of the source.

    eps = 0 collapses two real vertices (k <= i <= n, source [n+1]_k);
    eps = 1 collapses two free pairs (0 <= i < k, source [n+1]_{k+1}).
    """
    tgt = SimplexObject(n, k)
    if eps == 0:
        if not k <= i <= n:
            raise IndexOutOfRange(f"real codegeneracy s^{i}_0 needs {k} <= i <= {n}")
        src = SimplexObject(n + 1, k)
    elif eps == 1:
        if not 0 <= i < k:
            raise IndexOutOfRange(f"free codegeneracy s^{i}_1 needs 0 <= i < {k}")
        src = SimplexObject(n + 1, k + 1)
    else:
        raise IndexOutOfRange(f"level must be 0 or 1, got {eps}")
    return _unchecked(src, tgt, (j if j <= i else j - 1 for j in range(n + 2)))


def swap(n: int, k: int) -> GDeltaMap:
    return _swap(SimplexObject(n, k))


def coface_into(tgt: SimplexObject, i: int) -> GDeltaMap:
    """The unique generating coface into tgt whose image misses index i."""
    if tgt.n < 1 or not 0 <= i <= tgt.n:
        raise IndexOutOfRange(f"no face {i} of {tgt}")
    if i < tgt.k:
        return coface(tgt.n - 1, tgt.k - 1, i, 1)
    return coface(tgt.n - 1, tgt.k, i, 0)


def coface_between(src: SimplexObject, tgt: SimplexObject, i: int) -> GDeltaMap:
    """d^i from src to tgt, the level read off from the two objects."""
    eps = tgt.k - src.k
    if tgt.n != src.n + 1 or eps not in (0, 1):
        raise IndexOutOfRange(f"no coface {src} -> {tgt}")
    return coface(src.n, src.k, i, eps)


def codegeneracy_from(src: SimplexObject, i: int) -> GDeltaMap:
    """s^i out of src, collapsing i and i+1 (both free or both real)."""
    if not 0 <= i < src.n:
        raise IndexOutOfRange(f"no codegeneracy {i} out of {src}")
    if i + 1 < src.k:
        return codegeneracy(src.n - 1, src.k - 1, i, 1)
    if i >= src.k:
        return codegeneracy(src.n - 1, src.k, i, 0)
    raise IndexOutOfRange(f"indices {i}, {i + 1} of {src} lie in different bands")
