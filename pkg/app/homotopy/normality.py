"""Automorphisms, normal objects and normal monomorphisms."""

from typing import List

from gdelta.maps import GDeltaMap, enumerate_hom
from gdelta.objects import SimplexObject
from presheaf.isosset import IsoSSet
from presheaf.maps import PresheafMap


def aut_group(n: int, k: int) -> List[GDeltaMap]:
    obj = SimplexObject(n, k)
    return [theta for theta in enumerate_hom(obj, obj) if theta.is_iso()]


def is_dominant(X: IsoSSet, cell: str) -> bool:
    """No non-trivial automorphism of [n]_k fixes the cell."""
    return X.degree(cell).k == 0 or X.swap_cell(cell) != cell


def fixed_cells(X: IsoSSet) -> List[str]:
    return [c for c in X.cells if not is_dominant(X, c)]


def is_normal(X: IsoSSet) -> bool:
    """Aut([n]_k) acts freely on every X_{n,k}."""
    return not fixed_cells(X)


def is_normal_mono(f: PresheafMap) -> bool:
    """f is mono and sigma acts freely on the simplices outside its image."""
    if not f.is_mono():
        return False
    inside = set(f.image_cells())
    return all(is_dominant(f.tgt, c) for c in f.tgt.cells if c not in inside)
