import json

import pytest

from cli import run
from cli.parser import EXIT_INVALID, EXIT_OK, EXIT_USAGE
from config.checks import DEFAULT_CHECK_SUITE
from gdelta.generators import coface
from objects.standard import horn
from presheaf.constructions import representable
from presheaf.documents import dumps, gdelta_map_to_dict, presheaf_map_to_dict, write_object
from presheaf.maps import inclusion


@pytest.fixture
def delta_file(tmp_path):
    path = tmp_path / "delta21.json"
    assert run(["build", "-o", str(path), "delta", "2", "1"]) == EXIT_OK
    return path


def test_hom_count(capsys):
    assert run(["hom", "0,1", "0,1", "--count"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"


def test_hom_list_as_json(capsys):
    assert run(["--json", "hom", "1,0", "1,0", "--list"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)) == 3


def test_admissible(capsys):
    assert run(["check", "admissible", "2", "1", "0"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "non-admissible"
    assert run(["check", "admissible", "2", "1", "1"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "admissible"


def test_build_then_euler(delta_file, capsys):
    assert run(["euler", str(delta_file)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


def test_build_to_stdout(capsys):
    assert run(["build", "horn", "2", "1", "1"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "isov-sset"


def test_build_reports_census_as_json(capsys):
    assert run(["--json", "build", "delta", "2", "1"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["document"]["format"] == "isov-sset"
    expected = {f"{degree.n},{degree.k}": count for degree, count in representable(2, 1).census().items()}
    assert {degree: row["cells"] for degree, row in out["census"].items()} == expected
    assert all(1 <= row["orbits"] <= row["cells"] for row in out["census"].values())


def test_build_to_file_reports_census_as_json(tmp_path, capsys):
    path = tmp_path / "horn.json"
    assert run(["--json", "build", "-o", str(path), "horn", "2", "1", "1"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["output"] == str(path)
    assert json.loads(path.read_text(encoding="utf-8"))["format"] == "isov-sset"
    assert "0,0" in out["census"]


def test_export_obj(delta_file, tmp_path):
    out = tmp_path / "delta21.obj"
    assert run(["export", str(delta_file), "--format", "obj", "-o", str(out)]) == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert sum(1 for line in lines if line.startswith("f ")) == 2


def test_normal(delta_file, capsys):
    assert run(["check", "normal", str(delta_file)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "normal"


def test_exactness(tmp_path, capsys):
    sub, ambient = tmp_path / "horn.json", tmp_path / "delta.json"
    write_object(horn(2, 1, 1), str(sub))
    write_object(representable(2, 1), str(ambient))
    assert run(["--json", "check", "exactness", str(sub), str(ambient)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["ok"]


def test_decompose(tmp_path, capsys):
    path = tmp_path / "coface.json"
    path.write_text(dumps(gdelta_map_to_dict(coface(2, 1, 1, 0))), encoding="utf-8")
    assert run(["--json", "decompose", str(path)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["g"] == "id"
    assert len(data["cofaces"]) == 1 and not data["codegeneracies"]


def test_homotopy_equivalence_verdict(tmp_path, capsys):
    path = tmp_path / "iota.json"
    iota = inclusion(horn(2, 1, 1), representable(2, 1))
    path.write_text(dumps(presheaf_map_to_dict(iota)), encoding="utf-8")
    assert run(["check", "homotopy-equiv", str(path), "--depth", "1"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "equivalence"


def test_retract(capsys):
    assert run(["check", "retract", "3", "2", "1"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("witness verified")


def test_relations(capsys):
    assert run(["relations", "--max-n", "2"]) == EXIT_OK
    assert "all" in capsys.readouterr().out


def test_suite_subset(capsys):
    assert run(["--json", "suite", "--only", "kernel", "admissibility"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    expected = [DEFAULT_CHECK_SUITE[key]["name"] for key in ("kernel", "admissibility")]
    assert [row["Check"] for row in rows] == expected
    assert all(row["Passed"] for row in rows)


@pytest.mark.parametrize(
    "argv",
    [["hom", "x", "0,1"], ["hom", "1,5", "0,1"], ["build", "delta", "2"], ["frobnicate"], []],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == EXIT_USAGE


def test_missing_file(tmp_path, capsys):
    assert run(["euler", str(tmp_path / "missing.json")]) == EXIT_INVALID
    assert "isovset:" in capsys.readouterr().err


def test_invalid_document(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"format": "isov-sset", "version": 1, "cells": [{"id": "a"}]}', encoding="utf-8")
    assert run(["euler", str(path)]) == EXIT_INVALID


def test_non_admissible_horn_has_no_retract():
    assert run(["check", "retract", "2", "1", "0"]) == EXIT_INVALID
