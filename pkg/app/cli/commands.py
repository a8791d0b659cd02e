"""Subcommand handlers; each prints its result and returns an exit code."""

import json
import logging
from typing import Any, Callable, Dict

from anodyne.derivation import derivation_document, derive_horn
from anodyne.filtration import build_filtration, verify_filtration
from anodyne.retract import retract_witness
from cli.parser import EXIT_FAILED, EXIT_OK
from config.checks import DEFAULT_CHECK_SUITE
from cylinder.bundle import cylinder, verify_exactness
from cylinder.interval import interval_of_representable
from exceptions import InvalidDocument
from gdelta.decompose import decompose
from gdelta.maps import GDeltaMap, enumerate_hom
from gdelta.relations import check_cosimplicial_relations
from homotopy.admissibility import is_admissible
from homotopy.fillers import horn_filling_report
from homotopy.homotopies import is_elementary_homotopy_equivalence
from homotopy.normality import fixed_cells
from objects.standard import boundary, horn, terminal
from presheaf.constructions import representable
from presheaf.documents import dumps, gdelta_map_to_dict, object_to_dict, read_map, read_object
from presheaf.maps import PresheafMap, inclusion
from realization.geometry import realize
from realization.mesh import export_obj, export_off
from verification.runner import VerificationRunner
from verification.tables import census_frame, summary_frame

logger = logging.getLogger(__name__)


def _emit(args, data: Any, text: str) -> None:
    print(json.dumps(data, sort_keys=True) if args.json else text)


def _write(text: str, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info("Wrote %s", path)
    else:
        print(text, end="")


def hom(args) -> int:
    maps = enumerate_hom(args.src, args.tgt)
    if args.list:
        _emit(args, [theta.to_dict() for theta in maps], "\n".join(str(theta) for theta in maps))
    else:
        _emit(args, {"count": len(maps)}, str(len(maps)))
    return EXIT_OK


def decompose_map(args) -> int:
    theta = read_map(args.map_file)
    if not isinstance(theta, GDeltaMap):
        raise InvalidDocument("decompose needs a gdelta map document")
    parts = decompose(theta)
    data = {
        "codegeneracies": [gdelta_map_to_dict(s) for s in parts.codegeneracies],
        "cofaces": [gdelta_map_to_dict(d) for d in parts.cofaces],
        "g": parts.g,
    }
    lines = [f"g: {parts.g}"]
    lines += [f"s: {s}" for s in parts.codegeneracies]
    lines += [f"d: {d}" for d in parts.cofaces]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def relations(args) -> int:
    report = check_cosimplicial_relations(args.max_n)
    failures = report.failures
    if args.json:
        _emit(args, {"instances": len(report.instances), "failures": len(failures)}, "")
    elif failures:
        print(report.to_frame()[lambda frame: ~frame["passed"]].to_string(index=False))
    else:
        print(report.summary())
    return EXIT_FAILED if failures else EXIT_OK


_BUILDERS: Dict[str, Callable] = {
    "delta": lambda a: representable(a.n, a.k),
    "boundary": lambda a: boundary(a.n, a.k),
    "horn": lambda a: horn(a.n, a.k, a.l),
    "interval": lambda a: interval_of_representable(a.n, a.k),
    "cylinder": lambda a: cylinder(read_object(a.file)).total,
    "terminal": lambda a: terminal(),
}


def build(args) -> int:
    X = _BUILDERS[args.kind](args)
    frame = census_frame(X)
    logger.info("Census of %s:\n%s", X.name, frame.to_string())
    document = object_to_dict(X)
    if not args.json:
        _write(dumps(document), args.output)
        return EXIT_OK
    census = {degree: {"cells": int(row["cells"]), "orbits": int(row["orbits"])} for degree, row in frame.iterrows()}
    if args.output:
        _write(dumps(document), args.output)
        _emit(args, {"output": args.output, "census": census}, "")
    else:
        _emit(args, {"document": document, "census": census}, "")
    return EXIT_OK


def _admissible(args) -> int:
    verdict = is_admissible(args.n, args.k, args.l)
    _emit(args, {"admissible": verdict}, "admissible" if verdict else "non-admissible")
    return EXIT_OK


def _normal(args) -> int:
    fixed = fixed_cells(read_object(args.file))
    _emit(args, {"normal": not fixed, "fixed": fixed}, "normal" if not fixed else f"not normal: {' '.join(fixed)}")
    return EXIT_OK


def _exactness(args) -> int:
    ambient = read_object(args.ambient)
    report = verify_exactness(inclusion(read_object(args.sub), ambient))
    frame = report.to_frame()
    _emit(args, {"ok": report.ok, "rows": frame.to_dict(orient="records")}, frame.to_string(index=False))
    return EXIT_OK if report.ok else EXIT_FAILED


def _saturation(args) -> int:
    reports = verify_filtration(build_filtration(args.n, args.k, args.eps))
    rows = [
        {
            "step": r.step,
            "cell": r.cell,
            "horn": list(r.horn) if r.horn else None,
            "pushout": r.pushout_isomorphic,
            "universal": r.universal,
            "mono": r.attaching_mono,
            "admissible": r.admissible,
            "ok": r.ok,
        }
        for r in reports
    ]
    ok = all(r.ok for r in reports)
    text = "\n".join(
        f"stage {row['step']}: {row['cell']} horn={tuple(row['horn'] or ())} {'pass' if row['ok'] else 'FAIL'}"
        for row in rows
    )
    _emit(args, {"ok": ok, "stages": rows}, text)
    return EXIT_OK if ok else EXIT_FAILED


def _retract(args) -> int:
    witness = retract_witness(args.n, args.k, args.l)
    data = {
        "ok": witness.ok,
        "case": witness.case,
        "eps": witness.eps,
        "threshold": witness.threshold,
        "found_by": witness.found_by,
    }
    verdict = "witness verified" if witness.ok else "witness FAILED"
    _emit(args, data, f"{verdict} (case {witness.case}, level {witness.eps}, {witness.found_by})")
    return EXIT_OK if witness.ok else EXIT_FAILED


def _derivation(args) -> int:
    node = derive_horn(args.n, args.k, args.l)
    print(dumps(derivation_document([node])), end="")
    return EXIT_OK if node.all_passed() else EXIT_FAILED


def _homotopy_equiv(args) -> int:
    f = read_map(args.map_file)
    if not isinstance(f, PresheafMap):
        raise InvalidDocument("homotopy-equiv needs a presheaf map document")
    result = is_elementary_homotopy_equivalence(f, depth=args.depth)
    _emit(args, {"equivalence": result.holds}, "equivalence" if result else "no equivalence found")
    return EXIT_OK


def _fillers(args) -> int:
    frame = horn_filling_report(read_object(args.file), args.max_n)
    _emit(args, frame.to_dict(orient="records"), frame.to_string(index=False))
    return EXIT_OK


_CLAIMS: Dict[str, Callable] = {
    "admissible": _admissible,
    "normal": _normal,
    "exactness": _exactness,
    "saturation": _saturation,
    "retract": _retract,
    "derivation": _derivation,
    "homotopy-equiv": _homotopy_equiv,
    "fillers": _fillers,
}


def check(args) -> int:
    return _CLAIMS[args.claim](args)


def export(args) -> int:
    mesh = realize(read_object(args.file))
    if args.format == "off":
        text = export_off(mesh)
    elif args.format == "obj":
        text = export_obj(mesh)
    else:
        text = dumps(mesh.to_dict())
    _write(text, args.output)
    return EXIT_OK


def euler(args) -> int:
    value = realize(read_object(args.file)).euler()
    _emit(args, {"euler": value}, str(value))
    return EXIT_OK


def suite(args) -> int:
    selected = {
        key: dict(entry)
        for key, entry in DEFAULT_CHECK_SUITE.items()
        if not args.only or key in args.only
    }
    for key in ("normality", "realization"):
        if key in selected:
            selected[key]["seed"] = args.seed

    def progress(percent: int, message: str) -> None:
        logger.info("[%3d%%] %s", percent, message)

    results = VerificationRunner(selected, progress).run()
    frame = summary_frame(results)
    _emit(args, frame.to_dict(orient="records"), frame.to_string(index=False))
    for result in results:
        if result.error:
            logger.debug("%s traceback:\n%s", result.key, result.error)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


COMMANDS: Dict[str, Callable] = {
    "hom": hom,
    "decompose": decompose_map,
    "relations": relations,
    "build": build,
    "check": check,
    "export": export,
    "euler": euler,
    "suite": suite,
}
