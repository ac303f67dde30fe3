"""JSON input/output for all the document kinds the command line touches.

Emission is canonical: keys sorted, two-space indent, arc and edge lists
sorted, trailing newline.  Parsing is strict -- unknown keys and wrong shapes
are FormatError with a JSON-path diagnostic, and syntax errors keep their
line/column.
"""

from __future__ import annotations

import json
from typing import Any

from .classify import Classification, NoveltyReport, Relation
from .solver import Constraint, Instance, Orientation, SolveResult, VerifyResult
from .tournaments import ForbiddenSet, Tournament
from .voting import Counterexample, FreeSetsVerdict, PreservationVerdict

__all__ = [
    "FormatError",
    "dumps",
    "classification_to_obj",
    "forbidden_to_obj",
    "instance_to_obj",
    "novelty_to_obj",
    "orientation_to_obj",
    "parse_forbidden",
    "parse_instance",
    "parse_orientation",
    "parse_relations",
    "relations_to_obj",
    "solve_result_to_obj",
    "tournament_from_obj",
    "tournament_to_obj",
    "verify_result_to_obj",
]


class FormatError(ValueError):
    """A document does not match its schema; the message carries the path."""


def dumps(obj: Any) -> str:
    """Canonical JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _loads(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"{what}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _need(obj: Any, path: str, keys: set[str], optional: set[str] = frozenset()) -> None:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected an object")
    missing = keys - obj.keys()
    if missing:
        raise FormatError(f"{path}: missing key(s) {sorted(missing)}")
    unknown = obj.keys() - keys - optional
    if unknown:
        raise FormatError(f"{path}: unknown key(s) {sorted(unknown)}")


def _int(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{path}: expected an integer")
    return value


def _pair(value: Any, path: str) -> tuple[int, int]:
    if not isinstance(value, list) or len(value) != 2:
        raise FormatError(f"{path}: expected a two-element list")
    return _int(value[0], f"{path}[0]"), _int(value[1], f"{path}[1]")


def _list(obj: dict, key: str, path: str) -> list:
    value = obj.get(key, [])
    if not isinstance(value, list):
        raise FormatError(f"{path}.{key}: expected a list")
    return value


def tournament_from_obj(obj: Any, path: str = "tournament") -> Tournament:
    _need(obj, path, {"n", "arcs"})
    n = _int(obj["n"], f"{path}.n")
    arcs = obj["arcs"]
    if not isinstance(arcs, list):
        raise FormatError(f"{path}.arcs: expected a list")
    pairs = [_pair(a, f"{path}.arcs[{i}]") for i, a in enumerate(arcs)]
    try:
        return Tournament.from_arcs(n, pairs)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def tournament_to_obj(t: Tournament) -> dict:
    return {"n": t.order, "arcs": [list(a) for a in t.arcs()]}


def parse_forbidden(text: str) -> ForbiddenSet:
    doc = _loads(text, "forbidden set")
    _need(doc, "$", {"tournaments"})
    items = doc["tournaments"]
    if not isinstance(items, list):
        raise FormatError("$.tournaments: expected a list")
    members = []
    for i, item in enumerate(items):
        t = tournament_from_obj(item, f"$.tournaments[{i}]")
        if t.order < 2:
            raise FormatError(f"$.tournaments[{i}]: order must be >= 2")
        members.append(t)
    return ForbiddenSet(tuple(members))


def forbidden_to_obj(f: ForbiddenSet) -> dict:
    return {"tournaments": [tournament_to_obj(t) for t in f.members]}


def parse_relations(text: str) -> tuple[Relation, ...]:
    doc = _loads(text, "relations")
    _need(doc, "$", {"relations"})
    items = doc["relations"]
    if not isinstance(items, list):
        raise FormatError("$.relations: expected a list")
    out = []
    for i, item in enumerate(items):
        path = f"$.relations[{i}]"
        _need(item, path, {"name", "arity", "tournaments"})
        name = item["name"]
        if not isinstance(name, str) or not name:
            raise FormatError(f"{path}.name: expected a nonempty string")
        arity = _int(item["arity"], f"{path}.arity")
        ts = item["tournaments"]
        if not isinstance(ts, list):
            raise FormatError(f"{path}.tournaments: expected a list")
        members = tuple(
            tournament_from_obj(t, f"{path}.tournaments[{j}]")
            for j, t in enumerate(ts)
        )
        try:
            out.append(Relation(name, arity, members))
        except ValueError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return tuple(out)


def relations_to_obj(relations) -> dict:
    return {
        "relations": [
            {
                "name": r.name,
                "arity": r.arity,
                "tournaments": [tournament_to_obj(t) for t in r.tournaments],
            }
            for r in relations
        ]
    }


def parse_instance(text: str) -> Instance:
    doc = _loads(text, "instance")
    _need(doc, "$", {"vertices"}, optional={"edges", "oriented", "constraints"})
    vertices = _int(doc["vertices"], "$.vertices")
    edges = tuple(
        _pair(e, f"$.edges[{i}]") for i, e in enumerate(_list(doc, "edges", "$"))
    )
    oriented = tuple(
        _pair(e, f"$.oriented[{i}]")
        for i, e in enumerate(_list(doc, "oriented", "$"))
    )
    constraints = []
    for i, item in enumerate(_list(doc, "constraints", "$")):
        path = f"$.constraints[{i}]"
        _need(item, path, {"relation", "tuple"})
        name = item["relation"]
        if not isinstance(name, str):
            raise FormatError(f"{path}.relation: expected a string")
        verts = item["tuple"]
        if not isinstance(verts, list):
            raise FormatError(f"{path}.tuple: expected a list")
        constraints.append(
            Constraint(
                name,
                tuple(_int(v, f"{path}.tuple[{j}]") for j, v in enumerate(verts)),
            )
        )
    return Instance(vertices, edges, oriented, tuple(constraints))


def instance_to_obj(inst: Instance) -> dict:
    obj: dict[str, Any] = {"vertices": inst.vertex_count}
    if inst.edges:
        obj["edges"] = sorted([min(e), max(e)] for e in inst.edges)
    if inst.oriented:
        obj["oriented"] = [list(e) for e in inst.oriented]
    if inst.constraints:
        obj["constraints"] = [
            {"relation": c.relation, "tuple": list(c.vertices)}
            for c in inst.constraints
        ]
    return obj


def parse_orientation(text: str) -> Orientation:
    doc = _loads(text, "orientation")
    _need(doc, "$", {"arcs"})
    arcs = doc["arcs"]
    if not isinstance(arcs, list):
        raise FormatError("$.arcs: expected a list")
    return Orientation(
        tuple(_pair(a, f"$.arcs[{i}]") for i, a in enumerate(arcs))
    )


def orientation_to_obj(o: Orientation) -> dict:
    return {"arcs": [list(a) for a in o.arcs]}


def _counterexample_to_obj(ce: Counterexample | None) -> dict | None:
    if ce is None:
        return None
    return {
        "triple": [tournament_to_obj(t) for t in ce.triple],
        "result": tournament_to_obj(ce.result),
    }


def _verdict_to_obj(v: PreservationVerdict) -> dict:
    return {
        "preserved": v.preserved,
        "counterexample": _counterexample_to_obj(v.counterexample),
    }


def _free_sets_to_obj(fs: FreeSetsVerdict) -> dict:
    return {str(n): _verdict_to_obj(v) for n, v in sorted(fs.by_order.items())}


def classification_to_obj(c: Classification) -> dict:
    largest = c.largest_free_transitive
    return {
        "summary": c.summary(),
        "verdict": "NP-complete" if c.np_complete else "P",
        "primary_case": None if c.primary is None else int(c.primary),
        "cases_holding": [int(x) for x in c.holds],
        "evidence": {
            "largest_free_transitive": "unbounded" if largest is None else largest,
            "no_free_tournament_above": c.no_free_above,
            "relations_all_transitive": dict(sorted(c.reps_all_transitive.items())),
            "free_sets_minority": _free_sets_to_obj(c.free_minority),
            "free_sets_majority": _free_sets_to_obj(c.free_majority),
            "relations_minority": {
                k: _verdict_to_obj(v) for k, v in sorted(c.rel_minority.items())
            },
            "relations_majority": {
                k: _verdict_to_obj(v) for k, v in sorted(c.rel_majority.items())
            },
        },
    }


def novelty_to_obj(r: NoveltyReport) -> dict:
    obj: dict[str, Any] = {"status": r.status.value}
    if r.henson_order is not None:
        obj["order"] = r.henson_order
    return obj


def verify_result_to_obj(r: VerifyResult) -> dict:
    return {
        "ok": r.ok,
        "violations": [
            {"kind": v.kind, "detail": v.detail} for v in r.violations
        ],
    }


def solve_result_to_obj(r: SolveResult) -> dict:
    obj: dict[str, Any] = {"status": r.status, "route": r.route}
    if r.orientation is not None:
        obj["arcs"] = [list(a) for a in r.orientation.arcs]
    if r.reason is not None:
        obj["reason"] = r.reason
    if r.classification is not None:
        obj["classification"] = r.classification.summary()
    return obj
