"""Interchange formats and generator spellings."""

DOCUMENT_FORMATS = {
    "object": {"format": "isov-sset", "version": 1},
    "map": {"format": "isov-map", "version": 1},
    "derivation": {"format": "isov-derivation", "version": 1},
    "mesh": {"format": "isov-mesh", "version": 1},
}

# face keys are "d{eps}_{i}", the swap key is "sigma"
FACE_KEY = "d{eps}_{index}"
SWAP_KEY = "sigma"

EXPORT_FORMATS = {
    "off": {"coordinate": "%.6f"},
    "obj": {"coordinate": "%0.6f"},
}

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
