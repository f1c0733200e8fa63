"""Predicates for domination and resolving set properties, plus certificates.

Every predicate is a pure function of (graph, vertex set) and returns a bool.
The empty set fails every property, including on one-vertex graphs; the
minimisation layer owns the few degenerate conventions (see solve.py).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graph import Graph, GraphError, all_pairs_distances, is_connected


class ParameterKind(str, Enum):
    """The set parameters this package can verify, minimise, and adjudicate."""

    DOM = "dom"            # dominating set
    IDOM = "idom"          # independent dominating set
    TDOM = "tdom"          # total dominating set
    CDOM = "cdom"          # connected dominating set
    DDOM = "ddom"          # double dominating set: |N[v] & D| >= 2 for all v
    TWODOM = "twodom"      # 2-dominating set: |N(v) & D| >= 2 for v outside D
    QDDOM = "qddom"        # quasi double domination pair (solver-only)
    DIM = "dim"            # resolving set (metric dimension)
    RDOM = "rdom"          # resolving + dominating
    RIDOM = "ridom"        # resolving + independent dominating
    RTDOM = "rtdom"        # resolving + total dominating
    RCDOM = "rcdom"        # resolving + connected dominating

    @classmethod
    def from_string(cls, text: str) -> "ParameterKind":
        try:
            return cls(text.lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise GraphError(f"unknown parameter kind {text!r}; expected one of: {valid}") from None


RESOLVING_KINDS = frozenset(
    {ParameterKind.DIM, ParameterKind.RDOM, ParameterKind.RIDOM, ParameterKind.RTDOM, ParameterKind.RCDOM}
)


@dataclass(frozen=True)
class Certificate:
    """A vertex set claimed to witness a parameter kind on a specific graph.

    graph_digest ties the certificate to the canonical serialization of the
    graph it was built for, so a stale certificate fails loudly instead of
    verifying against the wrong graph.
    """

    kind: ParameterKind
    vertices: tuple[str, ...]
    graph_digest: str
    graph_name: str = ""

    def size(self) -> int:
        return len(self.vertices)


def _as_vertex_set(g: Graph, members: Iterable[int]) -> set[int]:
    out = set()
    for v in members:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        out.add(v)
    return out


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True when every vertex is in ``d`` or adjacent to a member of ``d``."""
    ds = _as_vertex_set(g, d)
    if not ds:
        return False
    return all(v in ds or g.adjacency[v] & ds for v in range(g.n))


def is_independent(g: Graph, d: Iterable[int]) -> bool:
    """True when no two members of ``d`` are adjacent.  Empty sets fail."""
    ds = _as_vertex_set(g, d)
    if not ds:
        return False
    return all(not (g.adjacency[v] & ds) for v in ds)


def is_total_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True when every vertex has a neighbor in ``d`` (members included)."""
    ds = _as_vertex_set(g, d)
    if not ds:
        return False
    return all(g.adjacency[v] & ds for v in range(g.n))


def is_connected_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True when ``d`` dominates and induces a connected subgraph."""
    ds = _as_vertex_set(g, d)
    if not ds:
        return False
    if not is_dominating(g, ds):
        return False
    start = min(ds)
    seen = {start}
    q = deque([start])
    while q:
        u = q.popleft()
        for w in g.adjacency[u] & ds:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == len(ds)


def is_double_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True when |N[v] & D| >= 2 for every vertex v."""
    ds = _as_vertex_set(g, d)
    if not ds:
        return False
    for v in range(g.n):
        hits = len(g.adjacency[v] & ds) + (1 if v in ds else 0)
        if hits < 2:
            return False
    return True


def is_2_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True when every vertex outside ``d`` has >= 2 neighbors in ``d``."""
    ds = _as_vertex_set(g, d)
    if not ds:
        return False
    return all(v in ds or len(g.adjacency[v] & ds) >= 2 for v in range(g.n))


def codes(g: Graph, reference: Iterable[int]) -> list[tuple[int, ...]]:
    """Distance code of every vertex against the sorted reference set.

    Requires a connected graph; entry j of code i is d(i, r_j).
    """
    refs = sorted(_as_vertex_set(g, reference))
    dm = all_pairs_distances(g)
    if not dm.is_finite():
        raise GraphError("codes are only defined on connected graphs")
    out = []
    for v in range(g.n):
        row = dm.rows[v]
        out.append(tuple(row[r] for r in refs))  # type: ignore[misc]
    return out


def is_resolving(g: Graph, r: Iterable[int]) -> bool:
    """True when the distance codes against ``r`` are pairwise distinct.

    Rejects disconnected graphs; the empty set fails by convention.
    """
    rs = _as_vertex_set(g, r)
    if not is_connected(g):
        raise GraphError("resolving sets are only defined on connected graphs")
    if not rs:
        return False
    vectors = codes(g, rs)
    return len(set(vectors)) == g.n


_CHECKS = {
    ParameterKind.DOM: lambda g, d: is_dominating(g, d),
    ParameterKind.IDOM: lambda g, d: is_dominating(g, d) and is_independent(g, d),
    ParameterKind.TDOM: lambda g, d: is_total_dominating(g, d),
    ParameterKind.CDOM: lambda g, d: is_connected_dominating(g, d),
    ParameterKind.DDOM: lambda g, d: is_double_dominating(g, d),
    ParameterKind.TWODOM: lambda g, d: is_2_dominating(g, d),
    ParameterKind.DIM: lambda g, d: is_resolving(g, d),
    ParameterKind.RDOM: lambda g, d: is_dominating(g, d) and is_resolving(g, d),
    ParameterKind.RIDOM: lambda g, d: is_dominating(g, d) and is_independent(g, d) and is_resolving(g, d),
    ParameterKind.RTDOM: lambda g, d: is_total_dominating(g, d) and is_resolving(g, d),
    ParameterKind.RCDOM: lambda g, d: is_connected_dominating(g, d) and is_resolving(g, d),
}


def check(kind: ParameterKind, g: Graph, d: Iterable[int]) -> bool:
    """Dispatch to the predicate for ``kind``.

    QDDOM is a pair property (two disjoint sets), so it has no single-set
    predicate and is rejected here; see solve.is_quasi_double_pair.
    """
    if kind is ParameterKind.QDDOM:
        raise GraphError("qddom is a pair property; it has no single-set predicate")
    return _CHECKS[kind](g, d)


def explain_violation(kind: ParameterKind, g: Graph, d: Iterable[int]) -> str | None:
    """Human-readable witness of the first failure, or None when valid.

    Slow path used by the command line; the bool predicates stay lean.
    """
    ds = _as_vertex_set(g, d)
    name = g.vertex_name
    if kind is ParameterKind.QDDOM:
        raise GraphError("qddom is a pair property; it has no single-set predicate")
    if not ds:
        return "the empty set satisfies no property"
    if kind in RESOLVING_KINDS and not is_connected(g):
        raise GraphError("resolving sets are only defined on connected graphs")

    def first_undominated() -> str | None:
        for v in range(g.n):
            if v not in ds and not (g.adjacency[v] & ds):
                return f"vertex {name(v)} is not dominated"
        return None

    if kind in (ParameterKind.DOM, ParameterKind.IDOM, ParameterKind.RDOM, ParameterKind.RIDOM):
        msg = first_undominated()
        if msg:
            return msg
    if kind in (ParameterKind.IDOM, ParameterKind.RIDOM):
        for v in sorted(ds):
            hit = g.adjacency[v] & ds
            if hit:
                return f"members {name(v)} and {name(min(hit))} are adjacent"
    if kind in (ParameterKind.TDOM, ParameterKind.RTDOM):
        for v in range(g.n):
            if not (g.adjacency[v] & ds):
                return f"vertex {name(v)} has no neighbor in the set"
    if kind in (ParameterKind.CDOM, ParameterKind.RCDOM):
        msg = first_undominated()
        if msg:
            return msg
        if not is_connected_dominating(g, ds):
            return "the set does not induce a connected subgraph"
    if kind is ParameterKind.DDOM:
        for v in range(g.n):
            hits = len(g.adjacency[v] & ds) + (1 if v in ds else 0)
            if hits < 2:
                return f"vertex {name(v)} has only {hits} of 2 required closed-neighborhood hits"
    if kind is ParameterKind.TWODOM:
        for v in range(g.n):
            if v not in ds and len(g.adjacency[v] & ds) < 2:
                return f"vertex {name(v)} has fewer than 2 neighbors in the set"
    if kind in RESOLVING_KINDS:
        vectors = codes(g, ds)
        seen: dict[tuple[int, ...], int] = {}
        for v, vec in enumerate(vectors):
            if vec in seen:
                return f"vertices {name(seen[vec])} and {name(v)} share the code {vec}"
            seen[vec] = v
    return None


def certificate_indices(g: Graph, cert: Certificate) -> list[int]:
    """Map certificate vertex names back to indices on ``g``."""
    out = []
    for item in cert.vertices:
        if g.labels is not None:
            out.append(g.index_of(item))
        else:
            try:
                out.append(int(item))
            except ValueError:
                raise GraphError(f"certificate names vertex {item!r} but the graph is unlabeled") from None
    return out
