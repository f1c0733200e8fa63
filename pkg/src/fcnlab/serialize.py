"""Canonical serialization: graph JSON/DOT/edge-list, certificates, digests.

The JSON writers emit one fixed byte sequence per object (stable key order,
fixed separators, trailing newline) so that identical inputs always produce
identical files.  Parsers accept any JSON whitespace.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .graph import Graph, GraphError, build_graph, graph_from_label_edges
from .verify import Certificate, ParameterKind


def graph_to_obj(g: Graph) -> dict[str, Any]:
    return {
        "name": g.name,
        "n": g.n,
        "labels": list(g.labels) if g.labels is not None else None,
        "edges": [[u, v] for u, v in g.edges()],
    }


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_obj(g), separators=(",", ":")) + "\n"


def graph_digest(g: Graph) -> str:
    """sha256 over the canonical JSON bytes."""
    return hashlib.sha256(graph_to_json(g).encode("ascii")).hexdigest()


def _reject(condition: bool, message: str) -> None:
    if condition:
        raise GraphError(message)


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _reject(not isinstance(obj, dict), "graph JSON must be an object")
    for key in ("name", "n", "labels", "edges"):
        _reject(key not in obj, f"graph JSON is missing the {key!r} field")
    name = obj["name"]
    _reject(not isinstance(name, str), f"graph name must be a string, got {name!r}")
    n = obj["n"]
    _reject(not isinstance(n, int) or isinstance(n, bool), f"graph n must be an integer, got {n!r}")
    labels = obj["labels"]
    if labels is not None:
        _reject(not isinstance(labels, list), "labels must be a list or null")
        for lab in labels:
            _reject(not isinstance(lab, str), f"label {lab!r} is not a string")
    edges_obj = obj["edges"]
    _reject(not isinstance(edges_obj, list), "edges must be a list")
    edges = []
    for e in edges_obj:
        _reject(not isinstance(e, list) or len(e) != 2, f"edge entry {e!r} is not a pair")
        u, v = e
        _reject(
            not isinstance(u, int) or not isinstance(v, int) or isinstance(u, bool) or isinstance(v, bool),
            f"edge entry {e!r} has non-integer endpoints",
        )
        edges.append((u, v))
    return build_graph(n, edges, labels=labels, name=name)


def graph_to_dot(g: Graph) -> str:
    lines = [f'graph "{g.name}" {{']
    for v in range(g.n):
        lines.append(f'  "{g.vertex_name(v)}";')
    for u, v in g.edges():
        lines.append(f'  "{g.vertex_name(u)}" -- "{g.vertex_name(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_edges(g: Graph) -> str:
    """One "u v" line per edge, sorted.  Isolated vertices do not appear."""
    lines = []
    for u, v in g.edges():
        a, b = sorted((g.vertex_name(u), g.vertex_name(v)))
        lines.append(f"{a} {b}")
    return "\n".join(sorted(lines)) + ("\n" if lines else "")


def graph_from_edges(text: str, name: str = "") -> Graph:
    """Rebuild a graph from the edge-list format (labeled vertices only)."""
    labels: set[str] = set()
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"edge list line {lineno} is not a pair: {raw!r}")
        a, b = parts
        if a == b:
            raise GraphError(f"edge list line {lineno} is a self-loop: {raw!r}")
        labels.update((a, b))
        pairs.append((a, b))
    if not labels:
        raise GraphError("edge list contains no edges")
    return graph_from_label_edges(sorted(labels), pairs, name=name)


def certificate_to_obj(cert: Certificate) -> dict[str, Any]:
    return {
        "kind": cert.kind.value,
        "graph_name": cert.graph_name,
        "graph_digest": cert.graph_digest,
        "vertices": list(cert.vertices),
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_obj(cert), separators=(",", ":")) + "\n"


def certificate_from_json(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed certificate JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _reject(not isinstance(obj, dict), "certificate JSON must be an object")
    for key in ("kind", "graph_digest", "vertices"):
        _reject(key not in obj, f"certificate JSON is missing the {key!r} field")
    kind = ParameterKind.from_string(str(obj["kind"]))
    digest = obj["graph_digest"]
    _reject(not isinstance(digest, str), "graph_digest must be a string")
    vertices = obj["vertices"]
    _reject(not isinstance(vertices, list), "vertices must be a list")
    for item in vertices:
        _reject(not isinstance(item, str), f"certificate vertex {item!r} is not a string")
    return Certificate(
        kind=kind,
        vertices=tuple(vertices),
        graph_digest=digest,
        graph_name=str(obj.get("graph_name", "")),
    )


def make_certificate(g: Graph, kind: ParameterKind, members: list[int]) -> Certificate:
    names = sorted(g.vertex_name(v) for v in members)
    return Certificate(
        kind=kind,
        vertices=tuple(names),
        graph_digest=graph_digest(g),
        graph_name=g.name,
    )
