"""Tabular summaries of verification results and of object censuses."""

from typing import List

import pandas as pd

from presheaf.isosset import IsoSSet
from verification.runner import CheckResult


def summary_frame(results: List[CheckResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "Check": r.name,
                "Passed": r.passed,
                "Detail": r.detail,
                "Seconds": round(r.elapsed, 3),
            }
            for r in results
        ],
        columns=["Check", "Passed", "Detail", "Seconds"],
    )


def census_frame(X: IsoSSet) -> pd.DataFrame:
    """Non-degenerate cells and sigma-orbits per degree, indexed by "n,k"."""
    rows = []
    for degree, count in X.census().items():
        orbits = {frozenset((c, X.swap_cell(c))) for c in X.cells_of(degree)}
        rows.append({"degree": f"{degree.n},{degree.k}", "cells": count, "orbits": len(orbits)})
    return pd.DataFrame(rows, columns=["degree", "cells", "orbits"]).set_index("degree")
