"""Immutable simple graphs with canonical vertex order, distances, and twins.

Vertices are integers 0..n-1.  When labels are present they are distinct
strings and the label tuple is lexicographically sorted, so vertex i is the
i-th smallest label; every generator and parser in this package goes through
that convention, which keeps indices stable across runs and machines.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph data or an invalid query against a graph."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.  Instances are immutable and hashable."""

    n: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None
    name: str = ""

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (i, j) with i < j, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertex_name(self, v: int) -> str:
        """Label of v, or its index rendered as text on unlabeled graphs."""
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise GraphError(f"graph {self.name!r} has no labels (lookup {label!r})")
        try:
            return self._label_index()[label]
        except KeyError:
            raise GraphError(f"no vertex labeled {label!r} in graph {self.name!r}") from None

    def _label_index(self) -> dict[str, int]:
        # labels is sorted and immutable, so the map is rebuilt cheaply on
        # demand; graphs here are small enough that caching is not worth the
        # dataclass gymnastics.
        assert self.labels is not None
        return {lab: i for i, lab in enumerate(self.labels)}


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
    name: str = "",
) -> Graph:
    """Validate and build a Graph from an edge list over 0..n-1.

    Rejects self-loops, out-of-range endpoints, duplicate labels, and label
    tuples that are not lexicographically sorted (canonical order).
    """
    if n < 1:
        raise GraphError(f"graph must have at least one vertex, got n={n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise GraphError(f"edge {e!r} is not a pair") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphError(f"edge {e!r} has non-integer endpoints")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {e!r} out of range for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    label_tuple: tuple[str, ...] | None = None
    if labels is not None:
        label_tuple = tuple(labels)
        if len(label_tuple) != n:
            raise GraphError(f"{len(label_tuple)} labels for {n} vertices")
        if len(set(label_tuple)) != n:
            seen: set[str] = set()
            for lab in label_tuple:
                if lab in seen:
                    raise GraphError(f"duplicate label {lab!r}")
                seen.add(lab)
        if list(label_tuple) != sorted(label_tuple):
            raise GraphError("labels must be given in lexicographic order")
    return Graph(n=n, adjacency=tuple(frozenset(a) for a in adj), labels=label_tuple, name=name)


def graph_from_label_edges(
    labels: Iterable[str],
    label_edges: Iterable[tuple[str, str]],
    name: str = "",
) -> Graph:
    """Build a labeled graph from label pairs, sorting labels canonically."""
    ordered = sorted(set(labels))
    index = {lab: i for i, lab in enumerate(ordered)}
    edges = []
    for a, b in label_edges:
        if a not in index:
            raise GraphError(f"edge endpoint {a!r} is not a declared label")
        if b not in index:
            raise GraphError(f"edge endpoint {b!r} is not a declared label")
        edges.append((index[a], index[b]))
    return build_graph(len(ordered), edges, labels=ordered, name=name)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest path lengths; None marks an unreachable pair."""

    rows: tuple[tuple[int | None, ...], ...]

    def get(self, u: int, v: int) -> int | None:
        return self.rows[u][v]

    @property
    def n(self) -> int:
        return len(self.rows)

    def is_finite(self) -> bool:
        return all(d is not None for row in self.rows for d in row)

    def diameter(self) -> int | None:
        """Largest finite distance; None when some pair is unreachable."""
        best = 0
        for row in self.rows:
            for d in row:
                if d is None:
                    return None
                if d > best:
                    best = d
        return best


@lru_cache(maxsize=128)
def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex.  Symmetric, zero diagonal, None off-component."""
    rows = []
    for s in range(g.n):
        dist: list[int | None] = [None] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[u]
            assert du is not None
            for w in g.adjacency[u]:
                if dist[w] is None:
                    dist[w] = du + 1
                    q.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(rows=tuple(rows))


@dataclass(frozen=True)
class TwinClass:
    """A maximal set of vertices sharing a neighborhood.

    kind is "open" when all members share N(v) (pairwise non-adjacent) and
    "closed" when all members share N[v] (pairwise adjacent).
    """

    vertices: frozenset[int]
    kind: str


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]

    def lower_bound(self) -> int:
        """Sum of (|class| - 1) over all classes."""
        return sum(len(c.vertices) - 1 for c in self.classes)


def twin_partition(g: Graph) -> TwinPartition:
    """Maximal twin classes of size >= 2, open and closed, singletons omitted.

    A vertex never belongs to both an open and a closed class: if N(u)=N(v)
    and N[u]=N[w] with u,v,w distinct, then u would need a self-loop.
    """
    by_open: dict[frozenset[int], list[int]] = {}
    by_closed: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        by_open.setdefault(g.adjacency[v], []).append(v)
        by_closed.setdefault(g.adjacency[v] | {v}, []).append(v)
    classes = []
    for members in by_open.values():
        if len(members) >= 2:
            classes.append(TwinClass(vertices=frozenset(members), kind="open"))
    for members in by_closed.values():
        if len(members) >= 2:
            classes.append(TwinClass(vertices=frozenset(members), kind="closed"))
    seen: set[int] = set()
    for c in classes:
        if seen & c.vertices:
            raise GraphError("twin classes overlap; graph data is inconsistent")
        seen |= c.vertices
    classes.sort(key=lambda c: min(c.vertices))
    return TwinPartition(classes=tuple(classes))


def is_connected(g: Graph) -> bool:
    seen = {0}
    q = deque([0])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == g.n


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, reindexed; labels are preserved."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    for v in keep:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    remap = {v: i for i, v in enumerate(keep)}
    edges = [(remap[u], remap[v]) for u, v in g.edges() if u in remap and v in remap]
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in keep]
    return build_graph(len(keep), edges, labels=labels, name=g.name)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(len(a) for a in g.adjacency))
