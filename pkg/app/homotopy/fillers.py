"""Lifting against the generating admissible horns."""

import logging
from typing import List, Optional, Tuple

import pandas as pd

from homotopy.admissibility import is_admissible
from objects.standard import horn, horns
from presheaf.constructions import representable
from presheaf.isosset import IsoSSet
from presheaf.maps import PresheafMap
from presheaf.search import search_maps

logger = logging.getLogger(__name__)


def horn_fillers(X: IsoSSet, n: int, k: int, l: int) -> List[Tuple[PresheafMap, Optional[PresheafMap]]]:
    """Each map Lambda^{n,k}_l -> X with one extension to Delta^{n,k}, or None."""
    small, big = horn(n, k, l), representable(n, k)
    found = []
    for h in search_maps(small, X):
        filler = next(search_maps(big, X, fixed=h.table), None)
        found.append((h, filler))
    return found


def horn_filling_report(X: IsoSSet, max_n: int) -> pd.DataFrame:
    rows = []
    for n, k, l in horns(max_n):
        if not is_admissible(n, k, l):
            continue
        results = horn_fillers(X, n, k, l)
        rows.append(
            {
                "horn": f"{n},{k},{l}",
                "maps": len(results),
                "unfilled": sum(1 for _, filler in results if filler is None),
            }
        )
    logger.info("Checked %d admissible horns against %r", len(rows), X)
    return pd.DataFrame(rows, columns=["horn", "maps", "unfilled"])
