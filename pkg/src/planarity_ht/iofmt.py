"""File formats: graph JSON, drawing JSON, and the textual constraint dump."""

from __future__ import annotations

import json
import re
from typing import Any

from .constraints import (
    BoolVar,
    ConstraintSystem,
    FlagVar,
    PairVar,
    TransitivityClause,
    TripleVar,
    XorEquation,
)
from .drawing import LevelDrawing, RadialDrawing
from .graphs import Edge, LevelGraph


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Graph files


def parse_graph(data: Any) -> LevelGraph:
    if not isinstance(data, dict):
        raise FormatError("graph document must be a JSON object")
    try:
        k = data["levels"]
        vertices = data["vertices"]
        edges = data["edges"]
    except KeyError as missing:
        raise FormatError(f"graph document lacks key {missing}") from None
    if not isinstance(k, int):
        raise FormatError("'levels' must be an integer")
    level: dict[str, int] = {}
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry or "level" not in entry:
            raise FormatError(f"vertex entry {entry!r} needs 'id' and 'level'")
        vid, lv = entry["id"], entry["level"]
        if not isinstance(vid, str) or not isinstance(lv, int):
            raise FormatError(f"vertex entry {entry!r} must have string id and integer level")
        if vid in level:
            raise FormatError(f"duplicate vertex id {vid!r}")
        level[vid] = lv
    parsed_edges: list[Edge] = []
    for pair in edges:
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"edge entry {pair!r} must be a two-element list")
        parsed_edges.append((pair[0], pair[1]))
    return LevelGraph(k, level, tuple(parsed_edges))


def graph_to_json(g: LevelGraph) -> dict:
    return {
        "levels": g.k,
        "vertices": [{"id": v, "level": g.level[v]} for v in g.vertices()],
        "edges": [list(e) for e in sorted(g.edges)],
    }


def load_graph(path: str) -> LevelGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(json.load(fh))


# ---------------------------------------------------------------------------
# Drawing files


def edge_key(e: Edge) -> str:
    return f"{e[0]}->{e[1]}"


def parse_edge_key(key: str) -> Edge:
    parts = key.split("->")
    if len(parts) != 2:
        raise FormatError(f"edge key {key!r} is not of the form tail->head")
    return (parts[0], parts[1])


def parse_drawing(data: Any) -> LevelDrawing | RadialDrawing:
    if not isinstance(data, dict) or "kind" not in data or "orders" not in data:
        raise FormatError("drawing document needs 'kind' and 'orders'")
    orders: dict[int, tuple[str, ...]] = {}
    for key, ids in data["orders"].items():
        orders[int(key)] = tuple(ids)
    if data["kind"] == "level":
        return LevelDrawing(orders)
    if data["kind"] == "radial":
        flags = {parse_edge_key(k): bool(v) for k, v in data.get("flags", {}).items()}
        return RadialDrawing(orders, flags)
    raise FormatError(f"unknown drawing kind {data['kind']!r}")


def drawing_to_json(d: LevelDrawing | RadialDrawing) -> dict:
    if isinstance(d, LevelDrawing):
        return {"kind": "level", "orders": {str(i): list(o) for i, o in sorted(d.orders.items())}, "flags": {}}
    return {
        "kind": "radial",
        "orders": {str(i): list(o) for i, o in sorted(d.cyclic.items())},
        "flags": {edge_key(e): int(v) for e, v in sorted(d.left_flag.items())},
    }


def load_drawing(path: str) -> LevelDrawing | RadialDrawing:
    with open(path, encoding="utf-8") as fh:
        return parse_drawing(json.load(fh))


# ---------------------------------------------------------------------------
# Constraint dumps

DUMP_HEADER = (
    "# variables: x(u,w) = u left of w | t(a,u,v) = a,u,v clockwise | "
    "l(u,v) = edge (u,v) left of its reference edge"
)

_VAR_RE = re.compile(r"([xtl])\(([^()]*)\)")


def _var_str(v: BoolVar) -> str:
    return str(v)


def dump_system(system: ConstraintSystem) -> str:
    lines = [DUMP_HEADER]
    lines.extend(str(eq) for eq in system.xors)
    lines.extend(str(cl) for cl in system.transitivity)
    return "\n".join(lines) + "\n"


def _parse_var(token: str) -> BoolVar:
    m = _VAR_RE.fullmatch(token)
    if not m:
        raise FormatError(f"cannot parse variable {token!r}")
    kind, body = m.groups()
    parts = body.split(",")
    if kind == "x" and len(parts) == 2:
        return PairVar(*parts)
    if kind == "t" and len(parts) == 3:
        return TripleVar(*parts)
    if kind == "l" and len(parts) == 2:
        return FlagVar(*parts)
    raise FormatError(f"variable {token!r} has the wrong arity")


def parse_dump(text: str) -> tuple[list[XorEquation], list[TransitivityClause]]:
    """Inverse of dump_system, up to the declared variable set.

    Vertex ids containing commas, parentheses or '->' are not representable
    in this format.
    """
    xors: list[XorEquation] = []
    trans: list[TransitivityClause] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "->" in line:
            body, head = line.split("->")
            a_str, b_str = body.split("&")
            head = head.strip()
            negated = head.startswith("!")
            trans.append(
                TransitivityClause(
                    _parse_var(a_str.strip()), _parse_var(b_str.strip()),
                    _parse_var(head.lstrip("!")), negated,
                )
            )
        else:
            body, parity = line.rsplit("=", 1)
            vars_ = tuple(_parse_var(tok.strip()) for tok in body.split("+"))
            xors.append(XorEquation(vars_, int(parity)))
    return xors, trans
