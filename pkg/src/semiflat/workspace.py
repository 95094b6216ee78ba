"""Workspace documents: canonical JSON in, validated structures out.

Format 1 keeps one top-level object with "semirings", "semimodules",
"morphisms", "systems" and "diagrams" maps; every operation table is a
row-major array of element labels.  Emission is canonical (sorted keys,
two-space indent, UTF-8), so parse/emit round-trips byte-identically on
canonicalized documents.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import SchemaError, UnknownObject
from .limits import DirectedSystem, directed_system
from .structures import (Morphism, SecondAction, Semimodule, Semiring,
                         build_morphism, build_semimodule, build_semiring)

FORMAT = 1


@dataclass
class Diagram:
    kind: str
    arrows: list[str]


@dataclass
class Workspace:
    semirings: dict[str, Semiring] = field(default_factory=dict)
    semimodules: dict[str, Semimodule] = field(default_factory=dict)
    morphisms: dict[str, Morphism] = field(default_factory=dict)
    systems: dict[str, DirectedSystem] = field(default_factory=dict)
    diagrams: dict[str, Diagram] = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    module_names: dict = field(default_factory=dict)

    def semimodule(self, name: str) -> Semimodule:
        if name not in self.semimodules:
            raise UnknownObject(f"no semimodule named {name!r}")
        return self.semimodules[name]

    def morphism(self, name: str) -> Morphism:
        if name not in self.morphisms:
            raise UnknownObject(f"no morphism named {name!r}")
        return self.morphisms[name]


def _expect(cond: bool, pointer: str, detail: str):
    if not cond:
        raise SchemaError(pointer, detail)


def _label_table(raw, labels_index, pointer, ncols=None):
    _expect(isinstance(raw, list), pointer, "table must be an array of rows")
    table = []
    for i, row in enumerate(raw):
        _expect(isinstance(row, list), f"{pointer}/{i}", "row must be an array")
        if ncols is not None:
            _expect(len(row) == ncols, f"{pointer}/{i}", f"expected {ncols} entries")
        out = []
        for j, cell in enumerate(row):
            idx = labels_index.get(cell)
            if idx is None:
                raise SchemaError(f"{pointer}/{i}/{j}", f"unknown element label {cell!r}")
            out.append(idx)
        table.append(out)
    return table


def _labels(raw, pointer):
    _expect(isinstance(raw, list) and raw, pointer, "elements must be a nonempty array")
    labels = [str(x) for x in raw]
    _expect(len(set(labels)) == len(labels), pointer, "element labels must be distinct")
    return labels


def parse_workspace_dict(doc: dict) -> Workspace:
    _expect(isinstance(doc, dict), "/", "document must be an object")
    _expect(doc.get("format") == FORMAT, "/format", f"unsupported format {doc.get('format')!r}")
    ws = Workspace(config=dict(doc.get("config", {})))
    for name, raw in sorted(doc.get("semirings", {}).items()):
        ptr = f"/semirings/{name}"
        labels = _labels(raw.get("elements"), f"{ptr}/elements")
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        add = _label_table(raw.get("add"), index, f"{ptr}/add", n)
        _expect(len(add) == n, f"{ptr}/add", "add table must be square")
        mul = _label_table(raw.get("mul"), index, f"{ptr}/mul", n)
        _expect(len(mul) == n, f"{ptr}/mul", "mul table must be square")
        _expect(raw.get("zero") in index, f"{ptr}/zero", "zero must name an element")
        _expect(raw.get("one") in index, f"{ptr}/one", "one must name an element")
        ws.semirings[name] = build_semiring(labels, add, mul,
                                            index[raw["zero"]], index[raw["one"]])
    for name, raw in sorted(doc.get("semimodules", {}).items()):
        ptr = f"/semimodules/{name}"
        sname = raw.get("semiring")
        _expect(sname in ws.semirings, f"{ptr}/semiring",
                f"unknown semiring {sname!r}")
        S = ws.semirings[sname]
        side = raw.get("side", "right")
        _expect(side in ("left", "right"), f"{ptr}/side", "side must be left or right")
        labels = _labels(raw.get("elements"), f"{ptr}/elements")
        index = {lab: i for i, lab in enumerate(labels)}
        m = len(labels)
        add = _label_table(raw.get("add"), index, f"{ptr}/add", m)
        _expect(len(add) == m, f"{ptr}/add", "add table must be square")
        action = _label_table(raw.get("action"), index, f"{ptr}/action", S.size)
        _expect(len(action) == m, f"{ptr}/action", "action table needs one row per element")
        _expect(raw.get("zero") in index, f"{ptr}/zero", "zero must name an element")
        second = None
        if "second" in raw:
            sec = raw["second"]
            _expect(sec.get("semiring") in ws.semirings, f"{ptr}/second/semiring",
                    f"unknown semiring {sec.get('semiring')!r}")
            T = ws.semirings[sec["semiring"]]
            sside = sec.get("side")
            _expect(sside in ("left", "right"), f"{ptr}/second/side",
                    "side must be left or right")
            stable = _label_table(sec.get("action"), index, f"{ptr}/second/action", T.size)
            second = SecondAction(T, sside, tuple(tuple(r) for r in stable))
        ws.semimodules[name] = build_semimodule(S, side, labels, add,
                                                index[raw["zero"]], action, second)
        ws.module_names[ws.semimodules[name]] = name
    for name, raw in sorted(doc.get("morphisms", {}).items()):
        ptr = f"/morphisms/{name}"
        _expect(raw.get("source") in ws.semimodules, f"{ptr}/source",
                f"unknown semimodule {raw.get('source')!r}")
        _expect(raw.get("target") in ws.semimodules, f"{ptr}/target",
                f"unknown semimodule {raw.get('target')!r}")
        src = ws.semimodules[raw["source"]]
        tgt = ws.semimodules[raw["target"]]
        tgt_index = {lab: i for i, lab in enumerate(tgt.labels)}
        raw_map = raw.get("map")
        _expect(isinstance(raw_map, list) and len(raw_map) == src.size, f"{ptr}/map",
                "map needs one target label per source element")
        mapping = []
        for j, cell in enumerate(raw_map):
            _expect(cell in tgt_index, f"{ptr}/map/{j}", f"unknown target label {cell!r}")
            mapping.append(tgt_index[cell])
        ws.morphisms[name] = build_morphism(src, tgt, mapping)
    for name, raw in sorted(doc.get("systems", {}).items()):
        ptr = f"/systems/{name}"
        node_names = raw.get("nodes")
        _expect(isinstance(node_names, list) and node_names, f"{ptr}/nodes",
                "nodes must be a nonempty array of semimodule names")
        nodes = []
        for j, nn in enumerate(node_names):
            _expect(nn in ws.semimodules, f"{ptr}/nodes/{j}", f"unknown semimodule {nn!r}")
            nodes.append(ws.semimodules[nn])
        rels = []
        maps = []
        for k, arrow in enumerate(raw.get("arrows", [])):
            aptr = f"{ptr}/arrows/{k}"
            j, j2 = arrow.get("from"), arrow.get("to")
            _expect(isinstance(j, int) and 0 <= j < len(nodes), f"{aptr}/from",
                    "from must index a node")
            _expect(isinstance(j2, int) and 0 <= j2 < len(nodes), f"{aptr}/to",
                    "to must index a node")
            tgt = nodes[j2]
            tgt_index = {lab: i for i, lab in enumerate(tgt.labels)}
            mapping = []
            for q, cell in enumerate(arrow.get("map", [])):
                _expect(cell in tgt_index, f"{aptr}/map/{q}",
                        f"unknown target label {cell!r}")
                mapping.append(tgt_index[cell])
            _expect(len(mapping) == nodes[j].size, f"{aptr}/map",
                    "map needs one entry per source element")
            rels.append((j, j2))
            maps.append(build_morphism(nodes[j], tgt, mapping))
        ws.systems[name] = directed_system(nodes, rels, maps)
    for name, raw in sorted(doc.get("diagrams", {}).items()):
        ptr = f"/diagrams/{name}"
        kind = raw.get("kind", "sequence")
        arrows = raw.get("arrows")
        _expect(isinstance(arrows, list) and arrows, f"{ptr}/arrows",
                "arrows must be a nonempty array of morphism names")
        for k, an in enumerate(arrows):
            _expect(an in ws.morphisms, f"{ptr}/arrows/{k}", f"unknown morphism {an!r}")
        ws.diagrams[name] = Diagram(kind, list(arrows))
    return ws


def parse_workspace(path: str) -> Workspace:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise SchemaError("/", f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise SchemaError("/", f"not valid JSON: {exc}")
    return parse_workspace_dict(doc)


def _emit_semiring(S: Semiring) -> dict:
    lab = S.labels
    return {
        "elements": list(lab),
        "add": [[lab[v] for v in row] for row in S.add],
        "mul": [[lab[v] for v in row] for row in S.mul],
        "zero": lab[S.zero],
        "one": lab[S.one],
    }


def _emit_semimodule(name_of_semiring, M: Semimodule) -> dict:
    lab = M.labels
    out = {
        "semiring": name_of_semiring[M.semiring],
        "side": M.side,
        "elements": list(lab),
        "add": [[lab[v] for v in row] for row in M.add],
        "zero": lab[M.zero],
        "action": [[lab[v] for v in row] for row in M.action],
    }
    if M.second is not None:
        out["second"] = {
            "semiring": name_of_semiring[M.second.semiring],
            "side": M.second.side,
            "action": [[lab[v] for v in row] for row in M.second.table],
        }
    return out


def emit_workspace_dict(ws: Workspace) -> dict:
    name_of_semiring = {S: n for n, S in ws.semirings.items()}
    name_of_module = {M: n for n, M in ws.semimodules.items()}
    doc = {"format": FORMAT}
    doc["semirings"] = {n: _emit_semiring(S) for n, S in ws.semirings.items()}
    doc["semimodules"] = {n: _emit_semimodule(name_of_semiring, M)
                          for n, M in ws.semimodules.items()}
    doc["morphisms"] = {
        n: {"source": name_of_module[f.source], "target": name_of_module[f.target],
            "map": [f.target.labels[v] for v in f.map]}
        for n, f in ws.morphisms.items()
    }
    doc["systems"] = {}
    for n, sys in ws.systems.items():
        doc["systems"][n] = {
            "nodes": [name_of_module[node] for node in sys.nodes],
            "arrows": [{"from": j, "to": k,
                        "map": [sys.nodes[k].labels[v] for v in f.map]}
                       for (j, k), f in zip(sys.order, sys.maps)],
        }
    doc["diagrams"] = {n: {"kind": d.kind, "arrows": list(d.arrows)}
                       for n, d in ws.diagrams.items()}
    if ws.config:
        doc["config"] = ws.config
    return doc


def emit_workspace(ws: Workspace) -> str:
    return canonical_json(emit_workspace_dict(ws))


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def default_workspace_path() -> str:
    return str(resources.files("semiflat").joinpath("data").joinpath("catalog.json"))


def load_default_workspace() -> Workspace:
    return parse_workspace(default_workspace_path())
