from __future__ import annotations

import json
import pathlib

from semiflat.cli import main
from semiflat.workspace import emit_workspace, load_default_workspace

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def golden(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def test_tensor_golden(capsys):
    code, out = run_cli(capsys, "tensor", "BOOL", "BOOL")
    assert code == 0
    assert out == golden("tensor_bool.json")


def test_ttensor_golden(capsys):
    code, out = run_cli(capsys, "ttensor", "SAT3", "SAT3")
    assert code == 0
    assert out == golden("ttensor_sat3.json")


def test_exact_golden_and_exit(capsys):
    code, out = run_cli(capsys, "exact", "seq1")
    assert code == 1  # the fixture sequence is quasi-exact but not exact
    assert out == golden("exact_seq1.json")
    doc = json.loads(out)
    stage = doc["result"]["stages"][0]
    assert stage["semi_exact"] and stage["quasi_exact"]
    assert not stage["proper_exact"] and not stage["exact"]


def test_flat_golden_and_exit(capsys):
    code, out = run_cli(capsys, "flat", "ZMOD2", "--against", "ZMOD4")
    assert code == 1
    assert out == golden("flat_zmod2.json")
    doc = json.loads(out)
    assert doc["result"]["witness"]["subsemimodule"] == ["0", "2"]


def test_suite_golden(capsys):
    code, out = run_cli(capsys, "suite", "--only", "unit-law,flat-negative")
    assert code == 0
    assert out == golden("suite_subset.json")


def test_reports_are_deterministic(capsys):
    _, first = run_cli(capsys, "tensor", "ZMOD2", "ZMOD2")
    _, second = run_cli(capsys, "tensor", "ZMOD2", "ZMOD2")
    assert first == second


def test_exit_zero_on_positive_flat(capsys):
    code, out = run_cli(capsys, "flat", "ZMOD4", "--against", "ZMOD4")
    assert code == 0
    assert json.loads(out)["result"]["uniformly_flat"]


def test_unknown_object_is_exit_two(capsys):
    code, out = run_cli(capsys, "flat", "NOPE")
    assert code == 2
    assert json.loads(out)["error"] == "UnknownObject"


def test_catalog_emits_canonical_workspace(capsys):
    code, out = run_cli(capsys, "catalog")
    assert code == 0
    assert out == emit_workspace(load_default_workspace())


def test_validate_lists_objects(capsys):
    code, out = run_cli(capsys, "validate", "BOOL", "ZMOD2")
    assert code == 0
    doc = json.loads(out)
    assert doc["objects"]["ZMOD2"]["kind"] == "semimodule"


def test_hom_subcommand(capsys):
    code, out = run_cli(capsys, "hom", "BOOL", "BOOL")
    assert code == 0
    assert json.loads(out)["result"]["size"] == 2


def test_reflect_subcommand(capsys):
    code, out = run_cli(capsys, "reflect", "SAT3")
    assert code == 0
    assert json.loads(out)["result"]["size"] == 1


def test_limits_subcommand(capsys):
    code, out = run_cli(capsys, "limits", "chain_mod2")
    assert code == 0
    assert json.loads(out)["result"]["size"] == 2
    code, out = run_cli(capsys, "limits", "chain_mod2", "--op", "limit")
    assert code == 0
    assert json.loads(out)["result"]["size"] == 4


def test_inj_subcommand(capsys):
    code, out = run_cli(capsys, "inj", "TRIV_ZMOD4", "--family", "ZMOD4", "ZMOD2")
    assert code == 0
    assert json.loads(out)["result"]["uniformly_injective"]


def test_search_subcommand(capsys, tmp_path):
    out_path = tmp_path / "search.jsonl"
    code, out = run_cli(capsys, "search", "--semirings", "ZMOD4",
                        "--max-size", "3", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["classified"] == 2
    assert out_path.exists()


def test_workspace_flag(capsys, tmp_path):
    ws_path = tmp_path / "ws.json"
    ws_path.write_text(emit_workspace(load_default_workspace()), encoding="utf-8")
    code, out = run_cli(capsys, "--workspace", str(ws_path), "hom", "BOOL", "BOOL")
    assert code == 0


def test_bad_workspace_is_exit_two(capsys, tmp_path):
    ws_path = tmp_path / "bad.json"
    ws_path.write_text("{}", encoding="utf-8")
    code, out = run_cli(capsys, "--workspace", str(ws_path), "hom", "BOOL", "BOOL")
    assert code == 2
    assert json.loads(out)["error"] == "SchemaError"
