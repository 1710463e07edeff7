"""Labelled-graph JSON documents and DOT export.

The document is the package's one persistent artifact: vertex ids are
dense from 0, the mode field records what the verifier certified when
the document was written, and provenance carries enough to rebuild the
labelling (sequence text, kind, plan summary).  Loading is lenient so
that a corrupted document can still be re-verified and reported on.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .cactus import CactusGraph

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Structurally unusable document file."""


def doc_from_graph(g: CactusGraph, mode: str, provenance: dict[str, Any]) -> dict[str, Any]:
    if g.labelling is None:
        raise DocumentError("cannot serialize an unlabelled graph")
    return {
        "schema": SCHEMA_VERSION,
        "mode": mode,
        "vertices": [{"id": v, "label": g.labelling[v]} for v in g.vertices],
        "edges": [list(e) for e in g.edges],
        "blocks": [list(b) for b in g.blocks],
        "provenance": provenance,
    }


def write_doc(g: CactusGraph, mode: str, provenance: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc_from_graph(g, mode, provenance), indent=2) + "\n")


def graph_from_doc(doc: dict[str, Any]) -> CactusGraph:
    try:
        if doc["schema"] != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema {doc['schema']!r}")
        vertices = tuple(sorted(v["id"] for v in doc["vertices"]))
        labelling = {v["id"]: v["label"] for v in doc["vertices"]}
        edges = tuple(sorted(tuple(sorted(e)) for e in doc["edges"]))
        blocks = tuple(sorted(tuple(sorted(b)) for b in doc["blocks"]))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed document: {exc}") from exc
    if len(labelling) != len(vertices):
        raise DocumentError("duplicate vertex ids")
    return CactusGraph(vertices, edges, blocks, labelling)


def read_doc(path: str | Path) -> tuple[CactusGraph, str, dict[str, Any]]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    graph = graph_from_doc(doc)
    return graph, doc.get("mode", "unknown"), doc.get("provenance", {})


def to_dot(g: CactusGraph) -> str:
    """Deterministic DOT with vertex labels on nodes, |f(u)-f(v)| on edges."""
    if g.labelling is None:
        raise DocumentError("cannot export an unlabelled graph")
    lines = ["graph labelled {"]
    for v in g.vertices:
        lines.append(f'  n{v} [label="{g.labelling[v]}"];')
    for u, v in g.edges:
        diff = abs(g.labelling[u] - g.labelling[v])
        lines.append(f'  n{u} -- n{v} [label="{diff}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
