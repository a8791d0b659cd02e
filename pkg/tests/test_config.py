import pytest

from config.formats import DOCUMENT_FORMATS, EXPORT_FORMATS
from config.limits import DEFAULT_MAX_N, MAX_N, _read_max_n, require_bound
from exceptions import IndexOutOfRange


@pytest.mark.parametrize("raw, expected", [(None, DEFAULT_MAX_N), ("4", 4), ("many", DEFAULT_MAX_N), ("-1", DEFAULT_MAX_N)])
def test_max_n_from_environment(monkeypatch, raw, expected):
    if raw is None:
        monkeypatch.delenv("ISOSET_MAX_N", raising=False)
    else:
        monkeypatch.setenv("ISOSET_MAX_N", raw)
    assert _read_max_n() == expected


def test_bound_is_enforced():
    assert require_bound(MAX_N) == MAX_N
    with pytest.raises(IndexOutOfRange):
        require_bound(MAX_N + 1)


def test_formats_are_versioned():
    assert all({"format", "version"} <= set(entry) for entry in DOCUMENT_FORMATS.values())
    assert set(EXPORT_FORMATS) == {"off", "obj"}
