"""JSON instance files: parsing, validation and serialization.

Layout::

    {
      "name": "connected-sum",
      "bridge_index": 3,
      "notes": "...",                        # optional, free text
      "surface_systems": [
        {
          "name": "...", "notes": "...",     # optional
          "spheres": [{"id": 1, "parent": null, "punctures": 2}],
          "graph_table": [
            {"region": 1, "signs": {"1": "+"}, "bridge_number": 2,
             "admits_thinner": false, "notes": "..."}
          ]
        }
      ]
    }

``signs`` gives each boundary sphere's sign as seen from the row's region.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .decomposition import (
    BowlSphere,
    GraphTable,
    SphereSystem,
    enumerate_sign_assignments,
    regions,
    vertex_signs,
)
from .errors import InconsistentShape, MalformedForest, ParseError, ValidationError
from .graphs import MINUS, PLUS, Vertex, SignedVertexGraphSpec, bridge_shape
from .search import Instance, SurfaceSystem

_SIGN_ALIASES = {"+": PLUS, "-": MINUS, "−": MINUS}


def bundled_instances() -> list[str]:
    root = resources.files("thinpos") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def resolve_instance_path(ref: str | Path) -> Path:
    """Accept a file path or the name of a bundled instance."""
    p = Path(ref)
    if p.exists():
        return p
    bundled = resources.files("thinpos") / "data" / f"{ref}.json"
    if bundled.is_file():
        return Path(str(bundled))
    raise ParseError(f"no such instance file or bundled instance: {ref}")


def parse_instance(path: str | Path) -> Instance:
    path = resolve_instance_path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    except OSError as e:
        raise ParseError(f"{path}: {e}") from None
    return instance_from_dict(doc, source=str(path))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def instance_from_dict(doc: Any, source: str = "<instance>") -> Instance:
    errs: list[str] = []

    def bad(where, msg):
        errs.append(f"{source}: {where}: {msg}")

    if not isinstance(doc, dict):
        raise ValidationError([f"{source}: top level must be an object"])
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        bad("name", "must be a non-empty string")
    n = doc.get("bridge_index")
    if not _is_int(n) or n < 1:
        bad("bridge_index", "must be a positive integer")
        n = None
    raw_systems = doc.get("surface_systems", [])
    if not isinstance(raw_systems, list):
        bad("surface_systems", "must be a list")
        raw_systems = []

    systems = []
    for si, raw in enumerate(raw_systems):
        where = f"surface_systems[{si}]"
        ss = _parse_system(raw, where, n, bad)
        if ss is not None:
            systems.append(ss)
    if errs:
        raise ValidationError(errs)
    return Instance(name, n, systems, doc.get("notes", ""))


def _parse_system(raw, where, n, bad) -> SurfaceSystem | None:
    if not isinstance(raw, dict):
        bad(where, "must be an object")
        return None
    spheres = []
    seen_ids = set()
    for k, s in enumerate(raw.get("spheres", [])):
        w = f"{where}.spheres[{k}]"
        if not isinstance(s, dict):
            bad(w, "must be an object")
            continue
        sid, parent, p = s.get("id"), s.get("parent"), s.get("punctures")
        ok = True
        if not _is_int(sid) or sid < 1:
            bad(f"{w}.id", "must be a positive integer")
            ok = False
        elif sid in seen_ids:
            bad(f"{w}.id", f"duplicate sphere id {sid}")
            ok = False
        if parent is not None and not _is_int(parent):
            bad(f"{w}.parent", "must be a sphere id or null")
            ok = False
        if not _is_int(p):
            bad(f"{w}.punctures", "must be an integer")
            ok = False
        else:
            if p % 2:
                bad(f"{w}.punctures", "punctures must be even")
                ok = False
            if p < 2:
                bad(f"{w}.punctures", "punctures must be at least 2")
                ok = False
            if n is not None and p > 2 * n - 2:
                bad(f"{w}.punctures",
                    f"{p} punctures exceeds the cap 2n-2 = {2 * n - 2} for bridge index {n}")
                ok = False
        if ok:
            seen_ids.add(sid)
            spheres.append(BowlSphere(sid, parent, p))
    try:
        system = SphereSystem(spheres)
    except MalformedForest as e:
        bad(f"{where}.spheres", str(e))
        return None

    bounds = {r.id: set(r.spheres) for r in regions(system)}
    table = GraphTable()
    for k, row in enumerate(raw.get("graph_table", [])):
        w = f"{where}.graph_table[{k}]"
        if not isinstance(row, dict):
            bad(w, "must be an object")
            continue
        region = row.get("region")
        if not _is_int(region) or region not in bounds:
            bad(f"{w}.region", f"unknown region {region!r}")
            continue
        raw_signs = row.get("signs", {})
        if not isinstance(raw_signs, dict):
            bad(f"{w}.signs", "must be an object mapping sphere ids to '+' or '-'")
            continue
        signs = {}
        for key, val in raw_signs.items():
            try:
                sid = int(key)
            except ValueError:
                bad(f"{w}.signs", f"sphere id {key!r} is not an integer")
                continue
            if val not in _SIGN_ALIASES:
                bad(f"{w}.signs.{key}", f"sign must be '+' or '-', got {val!r}")
                continue
            signs[sid] = _SIGN_ALIASES[val]
        if set(signs) != bounds[region]:
            bad(f"{w}.signs", f"keys {sorted(signs)} must be exactly the boundary spheres "
                f"{sorted(bounds[region])} of region {region}")
            continue
        b = row.get("bridge_number")
        if not _is_int(b) or b < 1:
            bad(f"{w}.bridge_number", "must be a positive integer")
            continue
        thinner = row.get("admits_thinner", False)
        if not isinstance(thinner, bool):
            bad(f"{w}.admits_thinner", "must be true or false")
            continue
        verts = tuple(Vertex(s, signs[s], system.punctures(s)) for s in sorted(signs))
        try:
            spec = SignedVertexGraphSpec(region, verts, b, thinner, row.get("notes", ""))
            bridge_shape(spec)
        except InconsistentShape as e:
            bad(f"{w}.bridge_number", str(e))
            continue
        try:
            table.add(spec)
        except ValueError as e:
            bad(w, str(e))
    return SurfaceSystem(system, table, raw.get("name", ""), raw.get("notes", ""))


def missing_rows(instance: Instance) -> list[str]:
    """Sign patterns reachable by enumeration that the graph tables do not cover."""
    out = []
    for i, ss in enumerate(instance.systems):
        seen = set()
        for a in enumerate_sign_assignments(ss.system):
            for r in ss.system.region_ids:
                signs = vertex_signs(ss.system, r, a)
                key = (r, tuple(sorted(signs.items())))
                if key in seen:
                    continue
                seen.add(key)
                if (r, signs) not in ss.table:
                    pattern = ", ".join(f"{k}:{v}" for k, v in key[1])
                    out.append(f"surface_systems[{i}]: no graph_table row for region {r} "
                               f"with signs {{{pattern}}}")
    return out


def validate_file(path) -> list[str]:
    try:
        inst = parse_instance(path)
    except ValidationError as e:
        return e.violations
    except ParseError as e:
        return [str(e)]
    return missing_rows(inst)


def instance_to_dict(instance: Instance) -> dict:
    systems = []
    for ss in instance.systems:
        spheres = [{"id": s.id, "parent": s.parent, "punctures": s.punctures} for s in ss.system.spheres]
        rows = []
        for spec in ss.table:
            row = {
                "region": spec.region_id,
                "signs": {str(k): v for k, v in sorted(spec.signs.items())},
                "bridge_number": spec.bridge_number,
                "admits_thinner": spec.admits_thinner,
            }
            if spec.notes:
                row["notes"] = spec.notes
            rows.append(row)
        entry = {"name": ss.name, "spheres": spheres, "graph_table": rows}
        if ss.notes:
            entry["notes"] = ss.notes
        systems.append(entry)
    doc = {"name": instance.name, "bridge_index": instance.bridge_index}
    if instance.notes:
        doc["notes"] = instance.notes
    doc["surface_systems"] = systems
    return doc


def dump_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2) + "\n"
