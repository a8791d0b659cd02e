"""JSON documents for objects and maps.

Serialization is canonical: sorted keys and cells in (n, k, id) order, so two
documents are byte-equal exactly when the objects are structurally equal.
"""

import json
import logging
from typing import Any, Dict

from config.formats import DOCUMENT_FORMATS, FACE_KEY, SWAP_KEY
from exceptions import InvalidDocument, IsovError
from gdelta.maps import GDeltaMap, make_map
from gdelta.objects import E, SimplexObject, Vertex
from presheaf.isosset import IsoSSet, Simplex, validate
from presheaf.maps import PresheafMap

logger = logging.getLogger(__name__)


def face_key(degree: SimplexObject, i: int) -> str:
    return FACE_KEY.format(eps=1 if i < degree.k else 0, index=i)


def _simplex_to_dict(s: Simplex) -> Dict[str, Any]:
    return {"cell": s.cell, "epi": list(s.epi.index_map)}


def _simplex_from_dict(data: Dict[str, Any], degree: SimplexObject, cells: Dict[str, SimplexObject]) -> Simplex:
    cell = data["cell"]
    if cell not in cells:
        raise InvalidDocument(f"unknown cell {cell!r}")
    epi = [int(j) for j in data["epi"]]
    if len(epi) != degree.n + 1:
        raise InvalidDocument(f"epi {epi} does not start at {degree}")
    try:
        theta = make_map(degree, cells[cell], [Vertex(j, E) for j in epi])
    except IsovError as exc:
        raise InvalidDocument(f"epi {epi} onto {cell!r}: {exc}") from exc
    if not theta.is_epi():
        raise InvalidDocument(f"epi {epi} does not cover {cell!r} of degree {cells[cell]}")
    return Simplex(cell, theta)


def _header(kind: str) -> Dict[str, Any]:
    return dict(DOCUMENT_FORMATS[kind])


def _check_header(data: Dict[str, Any], kind: str) -> None:
    expected = DOCUMENT_FORMATS[kind]
    if data.get("format") != expected["format"] or data.get("version") != expected["version"]:
        raise InvalidDocument(
            f"expected {expected['format']} v{expected['version']}, "
            f"got {data.get('format')} v{data.get('version')}"
        )


def object_to_dict(X: IsoSSet) -> Dict[str, Any]:
    cells = []
    for c, d in X.cells.items():
        entry: Dict[str, Any] = {"id": c, "degree": [d.n, d.k]}
        if d.n >= 1:
            entry["faces"] = {face_key(d, i): _simplex_to_dict(X.face(c, i)) for i in range(d.n + 1)}
        if d.k >= 1:
            entry[SWAP_KEY] = X.swap_cell(c)
        if c in X.provenance:
            entry["provenance"] = X.provenance[c]
        cells.append(entry)
    doc = _header("object")
    doc.update({"name": X.name, "truncation": X.dimension, "cells": cells})
    return doc


def object_from_dict(data: Dict[str, Any], check: bool = True) -> IsoSSet:
    """Parse an object document; raises InvalidDocument on any structural problem."""
    _check_header(data, "object")
    try:
        cells = {e["id"]: SimplexObject(*e["degree"]) for e in data["cells"]}
        faces = {}
        swaps = {}
        provenance = {}
        for e in data["cells"]:
            c, d = e["id"], cells[e["id"]]
            for i in range(d.n + 1 if d.n else 0):
                key = face_key(d, i)
                if key not in e.get("faces", {}):
                    raise InvalidDocument(f"cell {c!r} has no {key}")
                face_degree = SimplexObject(d.n - 1, d.k - 1 if i < d.k else d.k)
                faces[(c, i)] = _simplex_from_dict(e["faces"][key], face_degree, cells)
            if d.k >= 1:
                swaps[c] = e.get(SWAP_KEY, c)
            if "provenance" in e:
                provenance[c] = e["provenance"]
    except InvalidDocument:
        raise
    except (KeyError, TypeError, ValueError, IsovError) as exc:
        raise InvalidDocument(f"malformed object document: {exc}") from exc
    X = IsoSSet(cells, faces, swaps, provenance, name=data.get("name", ""))
    if check:
        report = validate(X)
        if not report.ok:
            raise InvalidDocument("; ".join(report.issues[:5]))
    return X


def gdelta_map_to_dict(theta: GDeltaMap) -> Dict[str, Any]:
    doc = _header("map")
    doc.update({"kind": "gdelta", **theta.to_dict()})
    return doc


def presheaf_map_to_dict(f: PresheafMap) -> Dict[str, Any]:
    doc = _header("map")
    doc.update(
        {
            "kind": "presheaf",
            "src": object_to_dict(f.src),
            "tgt": object_to_dict(f.tgt),
            "table": {c: _simplex_to_dict(s) for c, s in sorted(f.table.items())},
        }
    )
    return doc


def map_from_dict(data: Dict[str, Any]):
    """GDeltaMap or PresheafMap, by the document's kind."""
    _check_header(data, "map")
    kind = data.get("kind")
    try:
        if kind == "gdelta":
            return GDeltaMap.from_dict(data)
        if kind == "presheaf":
            X = object_from_dict(data["src"])
            Y = object_from_dict(data["tgt"])
            table = {
                c: _simplex_from_dict(data["table"][c], d, Y.cells) for c, d in X.cells.items()
            }
            f = PresheafMap(X, Y, table)
            f.validate()
            return f
    except InvalidDocument:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDocument(f"malformed map document: {exc}") from exc
    except IsovError as exc:
        raise InvalidDocument(str(exc)) from exc
    raise InvalidDocument(f"unknown map kind {kind!r}")


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Dict[str, Any]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"not JSON: {exc}") from exc


def write_object(X: IsoSSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(object_to_dict(X)))
    logger.info("Wrote %r to %s", X, path)


def read_object(path: str) -> IsoSSet:
    with open(path, encoding="utf-8") as handle:
        return object_from_dict(loads(handle.read()))


def read_map(path: str):
    with open(path, encoding="utf-8") as handle:
        return map_from_dict(loads(handle.read()))
