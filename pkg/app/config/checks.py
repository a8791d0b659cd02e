"""Verification checks run by the batch runner."""

DEFAULT_CHECK_SUITE = {
    "kernel": {
        "name": "Category kernel (hom oracle, decompose)",
        "enabled": True,
        "max_n": 3,
    },
    "relations": {
        "name": "Cosimplicial relations",
        "enabled": True,
        "max_n": 4,
    },
    "cospans": {
        "name": "Cospan completion on sampled cospans",
        "enabled": True,
        "max_n": 3,
        "samples": 100,
    },
    "boundary_census": {
        "name": "Boundary census",
        "enabled": True,
        "max_n": 4,
    },
    "admissibility": {
        "name": "Admissibility closed form vs definition",
        "enabled": True,
        "max_n": 6,
    },
    "horn_equivalences": {
        "name": "Horn inclusions as homotopy equivalences",
        "enabled": True,
        "max_n": 3,
        "refute_max_n": 2,
    },
    "cylinder_exactness": {
        "name": "Cylinder exactness",
        "enabled": True,
        "max_n": 3,
    },
    "interval_census": {
        "name": "Interval census",
        "enabled": True,
        "max_n": 4,
    },
    "saturation": {
        "name": "Saturation filtrations and retracts",
        "enabled": True,
        "max_n": 3,
    },
    "normality": {
        "name": "Normality",
        "enabled": True,
        "max_n": 4,
        "samples": 50,
    },
    "realization": {
        "name": "Realization census and naturality",
        "enabled": True,
        "max_n": 3,
        "points": 100,
    },
}
