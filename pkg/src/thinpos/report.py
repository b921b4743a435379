"""Deterministic search reports, as JSON or a fixed-width table."""
from __future__ import annotations

import json

from .search import Candidate, SearchResult, min_width, profile_multiplicities


def _origin(c: Candidate) -> str:
    return str(c.origin)


def _profile(p) -> str:
    return "+".join(str(x) for x in p) if p else "-"


def build_report(result: SearchResult, all_candidates: bool = False) -> dict:
    inst = result.instance
    by_system = {}
    for ar in result.per_assignment:
        by_system.setdefault(ar.system_index, []).append(ar)

    systems = []
    for i, ss in enumerate(inst.systems):
        ars = by_system.get(i, [])
        cands = [c for ar in ars for c in ar.candidates]
        entry = {
            "index": i,
            "name": ss.name,
            "spheres": len(ss.system),
            "sign_assignments": len(ars),
            "admissible_assignments": sum(ar.admissible for ar in ars),
            "candidates": len(cands),
            "min_width": None,
            "winning_profile": None,
            "gap_counts": None,
            "winner_origin": None,
            "multiplicities": [],
        }
        if cands:
            best = min_width(cands)
            entry.update(
                min_width=best.width,
                winning_profile=list(best.profile),
                gap_counts=list(best.presentation.gap_counts),
                winner_origin=_origin(best),
                multiplicities=[
                    {"width": sum(p), "profile": list(p), "count": k}
                    for p, k in profile_multiplicities(cands)
                ],
            )
        systems.append(entry)

    winner = result.winner
    doc = {
        "instance": inst.name,
        "bridge_index": inst.bridge_index,
        "pruned": result.prune,
        "baseline_width": result.baseline.width,
        "overall_min": winner.width,
        "winner": {
            "origin": _origin(winner),
            "profile": list(winner.profile),
            "word": str(winner.word),
        },
        "systems": systems,
    }
    if all_candidates:
        doc["all_candidates"] = [
            {"origin": _origin(c), "width": c.width, "profile": list(c.profile)}
            for c in sorted(result.candidates, key=lambda c: c.sort_key)
        ]
    return doc


def format_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def format_table(doc: dict) -> str:
    lines = [
        f"instance        {doc['instance']}",
        f"bridge index    {doc['bridge_index']}",
        f"pruned          {'yes' if doc['pruned'] else 'no'}",
        f"baseline width  {doc['baseline_width']}",
        f"overall minimum {doc['overall_min']}",
        f"winner          {doc['winner']['origin']}",
        f"winning profile {_profile(doc['winner']['profile'])}",
        "",
        f"{'#':>2}  {'system':<24} {'m':>2} {'signs':>5} {'adm':>4} {'cands':>6} {'min':>5}  profile / gaps",
    ]
    for s in doc["systems"]:
        mw = "-" if s["min_width"] is None else str(s["min_width"])
        tail = ""
        if s["winning_profile"] is not None:
            tail = f"{_profile(s['winning_profile'])} / {_profile(s['gap_counts'])}"
        lines.append(
            f"{s['index']:>2}  {s['name'][:24]:<24} {s['spheres']:>2} {s['sign_assignments']:>5} "
            f"{s['admissible_assignments']:>4} {s['candidates']:>6} {mw:>5}  {tail}"
        )
        for m in s["multiplicities"]:
            lines.append(f"{'':>40}{m['width']:>5} x{m['count']:<4} {_profile(m['profile'])}")
    if "all_candidates" in doc:
        lines += ["", "all candidates:"]
        for c in doc["all_candidates"]:
            lines.append(f"  {c['width']:>5}  {_profile(c['profile'])}  {c['origin']}")
    return "\n".join(lines) + "\n"
