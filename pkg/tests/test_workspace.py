from __future__ import annotations

import json

import pytest

from semiflat.errors import SchemaError, UnknownObject
from semiflat.workspace import (emit_workspace, load_default_workspace,
                                parse_workspace, parse_workspace_dict)


@pytest.fixture(scope="module")
def default_ws():
    return load_default_workspace()


def test_default_catalog_loads(default_ws):
    assert {"BOOL", "SAT3", "ZMOD2R", "ZMOD4"} <= set(default_ws.semirings)
    assert {"BOOL", "SAT3", "ZMOD2", "ZMOD4", "SUB03"} <= set(default_ws.semimodules)
    assert "seq1" in default_ws.diagrams


def test_round_trip_is_byte_identical(default_ws):
    text = emit_workspace(default_ws)
    again = parse_workspace_dict(json.loads(text))
    assert emit_workspace(again) == text


def test_non_square_add_table_rejected():
    doc = {
        "format": 1,
        "semirings": {
            "BAD": {"elements": ["0", "1"], "add": [["0", "1"]],
                    "mul": [["0", "0"], ["0", "1"]], "zero": "0", "one": "1"},
        },
    }
    with pytest.raises(SchemaError) as exc:
        parse_workspace_dict(doc)
    assert "/semirings/BAD/add" in exc.value.pointer


def test_unknown_semiring_reference_rejected():
    doc = {
        "format": 1,
        "semirings": {},
        "semimodules": {
            "M": {"semiring": "NOPE", "side": "right", "elements": ["0"],
                  "add": [["0"]], "zero": "0", "action": [[]]},
        },
    }
    with pytest.raises(SchemaError) as exc:
        parse_workspace_dict(doc)
    assert "semiring" in exc.value.pointer


def test_unknown_label_rejected():
    doc = {
        "format": 1,
        "semirings": {
            "BAD": {"elements": ["0", "1"], "add": [["0", "x"], ["1", "1"]],
                    "mul": [["0", "0"], ["0", "1"]], "zero": "0", "one": "1"},
        },
    }
    with pytest.raises(SchemaError) as exc:
        parse_workspace_dict(doc)
    assert exc.value.pointer.endswith("/add/0/1")


def test_unsupported_format_rejected():
    with pytest.raises(SchemaError):
        parse_workspace_dict({"format": 99})


def test_missing_file_is_schema_error(tmp_path):
    with pytest.raises(SchemaError):
        parse_workspace(str(tmp_path / "nope.json"))


def test_unknown_object_lookup(default_ws):
    with pytest.raises(UnknownObject):
        default_ws.semimodule("NOPE")


def test_named_fixture_objects_resolve(default_ws):
    seq = default_ws.diagrams["seq1"]
    arrows = [default_ws.morphism(a) for a in seq.arrows]
    assert arrows[0].source.size == 2 and arrows[0].target.size == 4
