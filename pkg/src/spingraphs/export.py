"""Deterministic JSON and DOT renderings of spin graphs."""

from __future__ import annotations

import json

from .graphs import GraphKind, SpinGraph, graph_branch_number

_INT0 = {"type": "integer", "minimum": 0}
_INT1 = {"type": "integer", "minimum": 1}

JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["genus", "kind", "class", "vertices", "edges", "branch_number"],
    "properties": {
        "genus": {"type": "integer", "minimum": 2},
        "kind": {"enum": [k.value for k in GraphKind]},
        "class": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["r", "khat", "i", "p"],
                    "properties": {
                        "r": _INT0,
                        "khat": {"type": "array", "items": _INT1, "minItems": 1},
                        "i": _INT0,
                        "p": {"type": "array", "items": _INT0},
                    },
                },
            ]
        },
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "conjugate", "divisor", "k0", "eps_degree"],
                "properties": {
                    "id": {"type": "string"},
                    "conjugate": {"type": "string"},
                    "divisor": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "additionalProperties": False,
                            "required": ["point", "mult"],
                            "properties": {"point": {"type": "string"}, "mult": _INT1},
                        },
                    },
                    "k0": _INT1,
                    "eps_degree": _INT1,
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["u", "v", "mult", "arc"],
                "properties": {
                    "u": {"type": "string"},
                    "v": {"type": "string"},
                    "mult": _INT1,
                    "arc": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "additionalProperties": False,
                                "required": ["from", "label"],
                                "properties": {"from": {"type": "string"}, "label": _INT1},
                            },
                        ]
                    },
                },
            },
        },
        "branch_number": _INT0,
    },
}


def graph_to_dict(graph: SpinGraph) -> dict:
    c = graph.exceptional_class
    return {
        "genus": graph.genus,
        "kind": graph.kind.value,
        "class": None if c is None else {"r": c.r, "khat": list(c.khat), "i": c.i, "p": list(c.p)},
        "vertices": [
            {
                "id": v.name,
                "conjugate": v.conjugate().name,
                "divisor": [{"point": q.name, "mult": m} for q, m in d.items()],
                "k0": graph.self_exponent(v),
                "eps_degree": len(d),
            }
            for v, d in graph.vertices
        ],
        "edges": [
            {
                "u": e.u.name,
                "v": e.v.name,
                "mult": e.mult,
                "arc": None if e.arc is None else {"from": e.arc.start.name, "label": e.arc.label},
            }
            for e in graph.edges
        ],
        "branch_number": graph_branch_number(graph),
    }


def to_json(graph: SpinGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2) + "\n"


def to_dot(graph: SpinGraph) -> str:
    """Straight edges carry no arrowhead; arcs are dashed arrows labelled ``k``."""
    name = f"spin_g{graph.genus}_{graph.kind.value}"
    if graph.exceptional_class is not None:
        name += "_" + "_".join(map(str, graph.exceptional_class.khat))
    lines = [f'digraph "{name}" {{', "  node [shape=circle];"]
    lines += [f'  "{v.name}";' for v in graph.labels]
    for e in graph.edges:
        lines.append(f'  "{e.u.name}" -> "{e.v.name}" [dir=none, label="{e.mult}"];')
    for e in graph.edges:
        if e.arc is not None:
            tail = e.arc.start
            lines.append(
                f'  "{tail.name}" -> "{e.other(tail).name}" '
                f'[style=dashed, label="{e.arc.label}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(graph: SpinGraph, fmt: str) -> str:
    if fmt == "json":
        return to_json(graph)
    if fmt == "dot":
        return to_dot(graph)
    raise ValueError(f"unknown graph format {fmt!r}")
