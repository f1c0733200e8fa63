"""Graph generators: classical families, fractal cubic networks, rooted products.

The fractal cubic network fcn(l) lives on all binary strings of length 2l+2.
fcn(0) is the labeled 4-cycle 00-01-11-10-00.  For l >= 1 the graph is four
prefixed copies of fcn(l-1) (prefixes 11, 01, 10, 00) joined by one new
4-cycle on the copy roots, the vertices ab + "10" + "01"*(l-1).
"""

from __future__ import annotations

from itertools import product as iter_product

from .graph import Graph, GraphError, build_graph, graph_from_label_edges

PREFIXES = ("11", "01", "10", "00")


def _decimal_labels(n: int) -> list[str]:
    width = len(str(n - 1))
    return [str(i).zfill(width) for i in range(n)]


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got n={n}")
    labels = _decimal_labels(n)
    edges = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(n, edges, labels=labels, name=f"C{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"a path needs at least 1 vertex, got n={n}")
    labels = _decimal_labels(n)
    edges = [(i, i + 1) for i in range(n - 1)]
    return build_graph(n, edges, labels=labels, name=f"P{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"a complete graph needs at least 1 vertex, got n={n}")
    labels = _decimal_labels(n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return build_graph(n, edges, labels=labels, name=f"K{n}")


def hypercube(dim: int) -> Graph:
    """Q_dim on bit-string labels; vertices are adjacent at Hamming distance 1."""
    if dim < 0:
        raise GraphError(f"hypercube dimension must be >= 0, got {dim}")
    labels = ["".join(bits) for bits in iter_product("01", repeat=dim)]
    edges = []
    for i, lab in enumerate(labels):
        for b in range(dim):
            flipped = lab[:b] + ("1" if lab[b] == "0" else "0") + lab[b + 1 :]
            j = int(flipped, 2)
            if i < j:
                edges.append((i, j))
    return build_graph(len(labels), edges, labels=sorted(labels), name=f"Q{dim}")


def fcn_root_suffix(level: int) -> str:
    """Suffix shared by the four vertices that gain the level's new edges."""
    if level < 1:
        raise GraphError(f"root suffix exists for levels >= 1, got {level}")
    return "10" + "01" * (level - 1)


def fcn(level: int) -> Graph:
    """Fractal cubic network of the given level (4**(level+1) vertices)."""
    if level < 0:
        raise GraphError(f"fcn level must be >= 0, got {level}")
    label_edges: list[tuple[str, str]] = [("00", "01"), ("01", "11"), ("11", "10"), ("10", "00")]
    for l in range(1, level + 1):
        expanded = []
        for a, b in label_edges:
            for p in PREFIXES:
                expanded.append((p + a, p + b))
        r = fcn_root_suffix(l)
        expanded.extend(
            [("00" + r, "10" + r), ("10" + r, "11" + r), ("11" + r, "01" + r), ("01" + r, "00" + r)]
        )
        label_edges = expanded
    width = 2 * level + 2
    labels = ["".join(bits) for bits in iter_product("01", repeat=width)]
    return graph_from_label_edges(labels, label_edges, name=f"FCN{level}")


def rooted_product(gamma: Graph, omega: Graph, root: int | str) -> Graph:
    """Rooted product: one copy of omega per gamma vertex, roots merged.

    Copy i's root plays the role of gamma vertex i, so the result has
    |V(gamma)| * |V(omega)| vertices and |E(gamma)| + |V(gamma)| * |E(omega)|
    edges.  Vertex labels read "<gamma label>:<omega label>".
    """
    if isinstance(root, str):
        root_idx = omega.index_of(root)
    else:
        root_idx = root
        if not (0 <= root_idx < omega.n):
            raise GraphError(f"root index {root} out of range for n={omega.n}")
    gl = [gamma.vertex_name(i) for i in range(gamma.n)]
    wl = [omega.vertex_name(i) for i in range(omega.n)]
    labels = [f"{a}:{b}" for a in gl for b in wl]
    label_edges = []
    for i in range(gamma.n):
        for u, v in omega.edges():
            label_edges.append((f"{gl[i]}:{wl[u]}", f"{gl[i]}:{wl[v]}"))
    root_name = wl[root_idx]
    for i, j in gamma.edges():
        label_edges.append((f"{gl[i]}:{root_name}", f"{gl[j]}:{root_name}"))
    name = f"{gamma.name or 'G'}o{omega.name or 'H'}@{root_name}"
    return graph_from_label_edges(labels, label_edges, name=name)


def relabeled_equal(g: Graph, h: Graph, mapping: dict[str, str]) -> bool:
    """True when ``mapping`` applied to g's labels reproduces h exactly."""
    if g.labels is None or h.labels is None:
        raise GraphError("relabeling comparison needs labeled graphs on both sides")
    if g.n != h.n:
        return False
    if sorted(mapping[lab] for lab in g.labels) != list(h.labels):
        return False
    g_edges = {tuple(sorted((mapping[g.labels[u]], mapping[g.labels[v]]))) for u, v in g.edges()}
    h_edges = {tuple(sorted((h.labels[u], h.labels[v]))) for u, v in h.edges()}
    return g_edges == h_edges


def fcn_prefix_bijection(level: int) -> dict[str, str]:
    """Label map showing fcn(level) is the rooted product of the 4-cycle
    with fcn(level-1): "ab:x" goes to the concatenation ab + x."""
    if level < 1:
        raise GraphError(f"the product decomposition needs level >= 1, got {level}")
    inner = fcn(level - 1)
    assert inner.labels is not None
    mapping = {}
    for ab in PREFIXES:
        for x in inner.labels:
            mapping[f"{ab}:{x}"] = ab + x
    return mapping
