"""DOT and JSON serialization of graded graphs.

JSON layout (key order is fixed)::

    {"name": ..., "quantized": ...,
     "levels": [{"height": 0, "vertices": ["()"]}, ...],
     "edges": [{"from": "()", "to": "(1)", "mult": "1"}, ...]}

Vertices use the label string forms, multiplicities the canonical
polynomial string.  Loading gives back a graph whose vertices are those
strings.
"""

from __future__ import annotations

import json
from typing import Iterable

from .dgg import GradedGraph
from .qpoly import QPoly


def _q(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def to_dot(G: GradedGraph) -> str:
    lines = [f"digraph {_q(G.name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for level in G.levels:
        nodes = " ".join(f"{_q(str(v))};" for v in level)
        lines.append(f"  {{ rank=same; {nodes} }}")
    for v, u, m in G.edges():
        attr = "" if m == 1 else f" [label={_q(str(m))}]"
        lines.append(f"  {_q(str(v))} -> {_q(str(u))}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(G: GradedGraph) -> dict:
    return {
        "name": G.name,
        "quantized": G.quantized,
        "levels": [
            {"height": h, "vertices": [str(v) for v in level]}
            for h, level in enumerate(G.levels)
        ],
        "edges": [{"from": str(v), "to": str(u), "mult": str(m)} for v, u, m in G.edges()],
    }


def to_json(G: GradedGraph | Iterable[GradedGraph]) -> str:
    if isinstance(G, GradedGraph):
        payload = to_dict(G)
    else:
        payload = [to_dict(g) for g in G]
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def from_dict(data: dict) -> GradedGraph:
    levels = tuple(tuple(level["vertices"]) for level in data["levels"])
    mult = {(e["from"], e["to"]): QPoly.parse(e["mult"]) for e in data["edges"]}
    return GradedGraph(
        data["name"], len(levels) - 1, levels, mult, bool(data.get("quantized", False))
    )


def from_json(text: str) -> GradedGraph:
    return from_dict(json.loads(text))
