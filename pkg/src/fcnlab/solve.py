"""Exact and budgeted minimisation for the twelve set parameters.

Two independent routes compute every value:

* ``naive_min_param`` enumerates subsets in increasing size and lexicographic
  order, calling the public predicates.  It is the trusted oracle and also
  backs the guaranteed-exhaustive mode (lexicographically least witness).
* ``min_param`` runs pruned search: iterative deepening over the target size
  with demand-driven branching for the domination kinds, connected-growth
  search for connected domination, and pruned lexicographic scans for the
  resolving kinds.  Under a budget it degrades to certified bounds instead
  of an exact value.

Budgets are deterministic when expressed in nodes; wall-clock limits are
supported but can make a run machine-dependent, so reports built from
node-limited runs are byte-stable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product as iter_product
from typing import Iterable

from .graph import Graph, GraphError, all_pairs_distances, is_connected, twin_partition
from .verify import ParameterKind, RESOLVING_KINDS, check

EXHAUSTIVE_CEILING = 20
QDDOM_EXHAUSTIVE_CEILING = 12
_RESOLVING_SCAN_CEILING = 20


class SolverStatus(str, Enum):
    EXACT = "exact"
    BOUNDS = "bounds"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Budget:
    """Resource limits for one minimisation call.

    ``exhaustive`` forces the enumeration engine (and rejects graphs above
    the ceiling); otherwise the pruned engines run until done or until a
    limit trips, whichever is first.  ``max_nodes`` is deterministic;
    ``max_seconds`` depends on the machine.
    """

    max_seconds: float | None = None
    max_nodes: int | None = None
    exhaustive: bool = False

    def limited(self) -> bool:
        return self.max_seconds is not None or self.max_nodes is not None


@dataclass
class SolverResult:
    kind: ParameterKind
    status: SolverStatus
    value: int | None
    lower: int
    upper: int | None
    witness: tuple[int, ...] | None
    nodes: int
    elapsed: float
    detail: dict = field(default_factory=dict)

    def witness_names(self, g: Graph) -> tuple[str, ...] | None:
        if self.witness is None:
            return None
        return tuple(sorted(g.vertex_name(v) for v in self.witness))


class _BudgetExhausted(Exception):
    pass


class _Ctx:
    """Node/time accounting shared by every engine in one solve call."""

    __slots__ = ("max_nodes", "deadline", "nodes", "_next_clock")

    def __init__(self, budget: Budget):
        self.max_nodes = budget.max_nodes
        self.deadline = None
        if budget.max_seconds is not None:
            self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0
        self._next_clock = 1024

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes >= self._next_clock:
            self._next_clock = self.nodes + 1024
            if time.monotonic() > self.deadline:
                raise _BudgetExhausted


def _bit_masks(g: Graph) -> tuple[list[int], list[int]]:
    nmask = [0] * g.n
    for v in range(g.n):
        m = 0
        for w in g.adjacency[v]:
            m |= 1 << w
        nmask[v] = m
    cmask = [nmask[v] | (1 << v) for v in range(g.n)]
    return nmask, cmask


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def dim_lower_bound_twins(g: Graph) -> int:
    """Resolving-set lower bound: twins force all but one member per class."""
    return twin_partition(g).lower_bound()


# ---------------------------------------------------------------------------
# demand profiles for the coverage kinds


def _profile(kind: ParameterKind, nmask: list[int], cmask: list[int]):
    # (need, suppliers, member_satisfies, independent)
    if kind in (ParameterKind.DOM, ParameterKind.IDOM):
        return 1, cmask, False, kind is ParameterKind.IDOM
    if kind is ParameterKind.TDOM:
        return 1, nmask, False, False
    if kind is ParameterKind.DDOM:
        return 2, cmask, False, False
    if kind is ParameterKind.TWODOM:
        return 2, nmask, True, False
    raise GraphError(f"{kind.value} is not a coverage kind")


def _coverage_state(n, chosen, banned, need, sup, self_sat):
    """Per-vertex residual demand and usable options; None when some vertex
    can no longer be satisfied."""
    unsat = []
    for v in range(n):
        if self_sat and (chosen >> v) & 1:
            continue
        have = (sup[v] & chosen).bit_count()
        if have >= need:
            continue
        r = need - have
        avail = sup[v] & ~chosen & ~banned
        self_ok = self_sat and not ((banned >> v) & 1)
        if avail.bit_count() < r and not self_ok:
            return None
        unsat.append((v, r, avail, self_ok))
    return unsat


def _packing_bound(unsat) -> int:
    taken = 0
    lb = 0
    for v, r, avail, self_ok in unsat:
        opts = avail | ((1 << v) if self_ok else 0)
        if opts & taken:
            continue
        lb += 1 if self_ok else r
        taken |= opts
    return lb


def _coverage_level(ctx, n, k, need, sup, self_sat, indep, nmask):
    """Depth-first search for a solution of size <= k, None if none exists.

    Branches on the hardest unsatisfied vertex: each branch commits to the
    lowest-index option taken for it, banning the earlier options, which
    enumerates every candidate set exactly once.
    """

    def rec(chosen, banned, left):
        ctx.tick()
        while True:
            unsat = _coverage_state(n, chosen, banned, need, sup, self_sat)
            if unsat is None:
                return None
            if not unsat:
                return chosen
            if left == 0:
                return None
            if _packing_bound(unsat) > left:
                return None
            # unit propagation: satisfy vertices with no slack
            forced = 0
            for v, r, avail, self_ok in unsat:
                if self_ok:
                    if avail.bit_count() < r:
                        forced |= 1 << v  # suppliers cannot do it alone
                elif avail.bit_count() == r:
                    forced |= avail
            forced &= ~chosen
            if not forced:
                break
            count = forced.bit_count()
            if count > left:
                return None
            if indep:
                # a forced vertex adjacent to the set (or to another forced
                # vertex) kills the branch
                probe = chosen
                for u in _bits(forced):
                    if nmask[u] & probe:
                        return None
                    probe |= 1 << u
            chosen |= forced
            left -= count
            if indep:
                for u in _bits(forced):
                    banned |= nmask[u]
        # branch on the unsatisfied vertex with the fewest options
        best = None
        for v, r, avail, self_ok in unsat:
            opts = avail | ((1 << v) if self_ok else 0)
            width = opts.bit_count()
            if best is None or width < best[0]:
                best = (width, v, opts)
        assert best is not None
        _, _, opts = best
        banned_here = banned
        for u in _bits(opts):
            if indep and (nmask[u] & chosen):
                banned_here |= 1 << u
                continue
            extra_ban = nmask[u] if indep else 0
            got = rec(chosen | (1 << u), banned_here | extra_ban, left - 1)
            if got is not None:
                return got
            banned_here |= 1 << u
        return None

    return rec(0, 0, k)


# ---------------------------------------------------------------------------
# connected domination: grow connected sets from a seed, never revisiting one


def _connected_level(ctx, g, n, k, nmask, cmask):
    full = (1 << n) - 1

    def rec(chosen, banned, covered, size):
        ctx.tick()
        if covered == full:
            return chosen
        if size == k:
            return None
        allowed = ~banned & full
        # BFS over allowed vertices, measuring how far help can be
        dist = {v: 0 for v in _bits(chosen)}
        frontier = chosen
        reach = chosen
        step = 0
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= nmask[u]
            nxt &= allowed & ~reach
            step += 1
            for u in _bits(nxt):
                dist[u] = step
            reach |= nxt
            frontier = nxt
        uncovered = full & ~covered
        lb = 0
        taken = 0
        worst_path = 0
        m = uncovered
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            suppliers = cmask[v] & reach & ~chosen
            if not suppliers:
                return None
            if not (suppliers & taken):
                lb += 1
                taken |= suppliers
            nearest = min(dist[u] for u in _bits(suppliers))
            if nearest > worst_path:
                worst_path = nearest
        if size + max(lb, worst_path) > k:
            return None
        cands = nmask_of_set(chosen) & allowed & ~chosen
        if not cands:
            return None
        order = sorted(_bits(cands), key=lambda u: (-(cmask[u] & uncovered).bit_count(), u))
        banned_here = banned
        for u in order:
            got = rec(chosen | (1 << u), banned_here, covered | cmask[u], size + 1)
            if got is not None:
                return got
            banned_here |= 1 << u
        return None

    def nmask_of_set(mask):
        out = 0
        for u in _bits(mask):
            out |= nmask[u]
        return out

    for s in range(n):
        if k < 1:
            return None
        banned0 = (1 << s) - 1  # the seed is the least member of the set
        got = rec(1 << s, banned0, cmask[s], 1)
        if got is not None:
            return got
    return None


# ---------------------------------------------------------------------------
# greedy feasible sets (upper bounds for budgeted runs)


def _greedy_cover(g, kind) -> list[int] | None:
    n = g.n
    nmask, cmask = _bit_masks(g)
    need, sup, self_sat, indep = _profile(kind, nmask, cmask)
    chosen = 0
    banned = 0
    for _ in range(n + 1):
        unsat = _coverage_state(n, chosen, banned, need, sup, self_sat)
        if unsat is None:
            return None
        if not unsat:
            break
        best = None
        for u in range(n):
            if (chosen >> u) & 1 or (banned >> u) & 1:
                continue
            gain = 0
            for v, r, avail, self_ok in unsat:
                if u == v and self_ok:
                    gain += r
                elif (avail >> u) & 1:
                    gain += 1
            if gain > 0 and (best is None or gain > best[0]):
                best = (gain, u)
        if best is None:
            return None
        u = best[1]
        chosen |= 1 << u
        if indep:
            banned |= nmask[u]
    members = _bits(chosen)
    for u in sorted(members, reverse=True):
        trial = [v for v in members if v != u]
        if trial and check(kind, g, trial):
            members = trial
    return members


def _greedy_connected(g) -> list[int] | None:
    if not is_connected(g):
        return None
    if g.n == 1:
        return [0]
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    parent: dict[int, int] = {start: start}
    order = [start]
    for u in order:
        for w in sorted(g.adjacency[u]):
            if w not in parent:
                parent[w] = u
                order.append(w)
    internal = sorted({parent[v] for v in range(g.n) if v != start} | {start})
    members = internal
    for u in sorted(members, reverse=True):
        trial = [v for v in members if v != u]
        if trial and check(ParameterKind.CDOM, g, trial):
            members = trial
    return members


def _greedy_resolving_family(g, kind) -> list[int] | None:
    n = g.n
    if kind is ParameterKind.RIDOM:
        for seed in range(n):
            chosen: list[int] = []
            banned: set[int] = set()
            for u in [seed] + [v for v in range(n) if v != seed]:
                if u not in banned:
                    chosen.append(u)
                    banned.add(u)
                    banned |= set(g.adjacency[u])
            if check(kind, g, chosen):
                members = sorted(chosen)
                for u in sorted(members, reverse=True):
                    trial = [v for v in members if v != u]
                    if trial and check(kind, g, trial):
                        members = trial
                return members
        return None
    members = list(range(n))
    if not check(kind, g, members):
        return None
    for u in sorted(members, reverse=True):
        trial = [v for v in members if v != u]
        if trial and check(kind, g, trial):
            members = trial
    return members


def _greedy_upper(g, kind) -> list[int] | None:
    if kind in (ParameterKind.DOM, ParameterKind.TDOM, ParameterKind.DDOM, ParameterKind.TWODOM, ParameterKind.IDOM):
        return _greedy_cover(g, kind)
    if kind is ParameterKind.CDOM:
        return _greedy_connected(g)
    if kind in RESOLVING_KINDS:
        return _greedy_resolving_family(g, kind)
    raise GraphError(f"no greedy rule for {kind.value}")


# ---------------------------------------------------------------------------
# resolving kinds: pruned lexicographic scan (exact) and transversal search


def _twin_class_masks(g) -> list[tuple[int, int]]:
    out = []
    for c in twin_partition(g).classes:
        mask = 0
        for v in c.vertices:
            mask |= 1 << v
        out.append((mask, len(c.vertices)))
    return out


def _resolving_combo_ok(kind, g, combo) -> bool:
    if kind is ParameterKind.DIM:
        from .verify import is_resolving

        return is_resolving(g, combo)
    return check(kind, g, combo)


def _domination_floor(ctx, g, kind, budget_nmask_cmask) -> int:
    """Exact optimum of the domination side of a resolving kind (small n)."""
    nmask, cmask = budget_nmask_cmask
    side = {
        ParameterKind.RDOM: ParameterKind.DOM,
        ParameterKind.RIDOM: ParameterKind.IDOM,
        ParameterKind.RTDOM: ParameterKind.TDOM,
        ParameterKind.RCDOM: ParameterKind.CDOM,
    }.get(kind)
    if side is None:
        return 0
    n = g.n
    if side is ParameterKind.CDOM:
        for k in range(1, n + 1):
            if _connected_level(ctx, g, n, k, nmask, cmask) is not None:
                return k
        return n + 1
    need, sup, self_sat, indep = _profile(side, nmask, cmask)
    for k in range(1, n + 1):
        if _coverage_level(ctx, n, k, need, sup, self_sat, indep, nmask) is not None:
            return k
    return n + 1


def _resolving_scan(ctx, g, kind, lower, progress) -> tuple[int, tuple[int, ...]] | None:
    """Lexicographic scan by size with twin and domination pre-filters.

    The first surviving combination is the lexicographically least minimum
    witness.  Returns None when the kind is infeasible on g.
    """
    n = g.n
    nmask, cmask = _bit_masks(g)
    class_masks = _twin_class_masks(g)
    dom_checks = {
        ParameterKind.RDOM: lambda mask: _covers(mask, cmask, n),
        ParameterKind.RTDOM: lambda mask: _covers(mask, nmask, n),
        ParameterKind.RIDOM: lambda mask: _covers(mask, cmask, n) and _independent_mask(mask, nmask),
        ParameterKind.RCDOM: lambda mask: _covers(mask, cmask, n) and _connected_mask(mask, nmask),
        ParameterKind.DIM: lambda mask: True,
    }[kind]
    for k in range(max(lower, 1), n + 1):
        progress["k"] = k
        for combo in combinations(range(n), k):
            ctx.tick()
            mask = 0
            for v in combo:
                mask |= 1 << v
            ok = True
            for cm, size in class_masks:
                if (mask & cm).bit_count() < size - 1:
                    ok = False
                    break
            if not ok:
                continue
            if not dom_checks(mask):
                continue
            if _resolving_combo_ok(kind, g, combo):
                return k, combo
    return None


def _covers(mask, sup, n) -> bool:
    got = 0
    for v in _bits(mask):
        got |= sup[v]
    return got == (1 << n) - 1


def _independent_mask(mask, nmask) -> bool:
    for v in _bits(mask):
        if nmask[v] & mask:
            return False
    return True


def _connected_mask(mask, nmask) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= nmask[u]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


TRANSVERSAL_CAP = 1 << 18


def resolving_transversal_search(ctx, g) -> tuple[int, ...] | None | str:
    """Look for a resolving set meeting the twin lower bound exactly.

    Any resolving set of that size must take all but one member from every
    twin class and nothing else, so scanning those selections is a complete
    decision procedure at that size.  Returns a witness, None when no
    selection resolves, or "skipped" when the selection space is too large
    to scan.
    """
    classes = twin_partition(g).classes
    if not classes:
        return None
    space = 1
    for c in classes:
        space *= len(c.vertices)
        if space > TRANSVERSAL_CAP:
            return "skipped"
    choices = []
    for c in classes:
        members = sorted(c.vertices)
        choices.append([tuple(x for x in members if x != omit) for omit in members])
    from .verify import is_resolving

    for pick in iter_product(*choices):
        ctx.tick()
        combo = sorted(v for part in pick for v in part)
        if is_resolving(g, combo):
            return tuple(combo)
    return None


# ---------------------------------------------------------------------------
# quasi double domination


def is_quasi_double_pair(g: Graph, u_set: Iterable[int], v_set: Iterable[int]) -> bool:
    """Check the pair property: U and V disjoint, U|V 2-dominating, and V
    double-dominating the graph with U removed."""
    nmask, _ = _bit_masks(g)
    u_mask = 0
    for x in u_set:
        u_mask |= 1 << x
    v_mask = 0
    for x in v_set:
        v_mask |= 1 << x
    if u_mask & v_mask:
        return False
    t_mask = u_mask | v_mask
    if t_mask == 0:
        return False
    for v in range(g.n):
        if not ((t_mask >> v) & 1) and (nmask[v] & t_mask).bit_count() < 2:
            return False
    for v in range(g.n):
        if (u_mask >> v) & 1:
            continue
        hits = (nmask[v] & v_mask).bit_count() + ((v_mask >> v) & 1)
        if hits < 2:
            return False
    return True


def _qddom_exhaustive(ctx, g) -> tuple[int, tuple[int, ...], dict]:
    n = g.n
    nmask, _ = _bit_masks(g)
    for k in range(1, n + 1):
        for team in combinations(range(n), k):
            ctx.tick()
            t_mask = 0
            for v in team:
                t_mask |= 1 << v
            ok = True
            for v in range(n):
                if not ((t_mask >> v) & 1) and (nmask[v] & t_mask).bit_count() < 2:
                    ok = False
                    break
            if not ok:
                continue
            for usize in range(0, k + 1):
                for u_part in combinations(team, usize):
                    v_part = tuple(x for x in team if x not in u_part)
                    if is_quasi_double_pair(g, u_part, v_part):
                        return k, team, {"u": list(u_part), "v": list(v_part)}
    raise GraphError("quasi double domination found no pair, which cannot happen")


def quasi_double_domination_number(g: Graph, budget: Budget | None = None) -> SolverResult:
    """Minimum |U| + |V| over valid quasi double domination pairs.

    Exhaustive for n <= 12; larger graphs get certified bounds derived from
    the 2-domination and double domination numbers.
    """
    budget = budget or Budget()
    started = time.monotonic()
    ctx = _Ctx(budget)
    if g.n <= QDDOM_EXHAUSTIVE_CEILING:
        try:
            value, team, split = _qddom_exhaustive(ctx, g)
        except _BudgetExhausted:
            return SolverResult(
                kind=ParameterKind.QDDOM,
                status=SolverStatus.BOUNDS,
                value=None,
                lower=1,
                upper=None,
                witness=None,
                nodes=ctx.nodes,
                elapsed=time.monotonic() - started,
                detail={"note": "budget exhausted before the scan finished"},
            )
        return SolverResult(
            kind=ParameterKind.QDDOM,
            status=SolverStatus.EXACT,
            value=value,
            lower=value,
            upper=value,
            witness=tuple(team),
            nodes=ctx.nodes,
            elapsed=time.monotonic() - started,
            detail=split,
        )
    two = min_param(g, ParameterKind.TWODOM, budget)
    double = min_param(g, ParameterKind.DDOM, budget)
    lower = two.lower  # any valid pair's union 2-dominates
    upper = None
    witness = None
    detail: dict = {"note": "bounds from the 2-domination and double domination numbers"}
    if double.witness is not None and is_quasi_double_pair(g, (), double.witness):
        upper = len(double.witness)
        witness = double.witness
        detail["u"] = []
        detail["v"] = sorted(double.witness)
    return SolverResult(
        kind=ParameterKind.QDDOM,
        status=SolverStatus.BOUNDS,
        value=None,
        lower=lower,
        upper=upper,
        witness=witness,
        nodes=ctx.nodes + two.nodes + double.nodes,
        elapsed=time.monotonic() - started,
        detail=detail,
    )


# ---------------------------------------------------------------------------
# the oracle


def naive_min_param(g: Graph, kind: ParameterKind) -> SolverResult:
    """Increasing-size full enumeration.  Slow and trusted."""
    started = time.monotonic()
    nodes = 0
    if kind is ParameterKind.QDDOM:
        best: tuple[int, tuple, tuple] | None = None
        for assignment in iter_product((0, 1, 2), repeat=g.n):
            nodes += 1
            u_part = tuple(v for v, a in enumerate(assignment) if a == 1)
            v_part = tuple(v for v, a in enumerate(assignment) if a == 2)
            size = len(u_part) + len(v_part)
            if best is not None and size >= best[0]:
                continue
            if is_quasi_double_pair(g, u_part, v_part):
                best = (size, u_part, v_part)
        assert best is not None
        value, u_part, v_part = best
        return SolverResult(
            kind=kind,
            status=SolverStatus.EXACT,
            value=value,
            lower=value,
            upper=value,
            witness=tuple(sorted(u_part + v_part)),
            nodes=nodes,
            elapsed=time.monotonic() - started,
            detail={"u": list(u_part), "v": list(v_part)},
        )
    if kind in RESOLVING_KINDS and not is_connected(g):
        raise GraphError(f"{kind.value} needs a connected graph")
    if kind is ParameterKind.DIM and g.n == 1:
        return SolverResult(
            kind=kind,
            status=SolverStatus.EXACT,
            value=0,
            lower=0,
            upper=0,
            witness=(),
            nodes=0,
            elapsed=time.monotonic() - started,
            detail={"note": "metric dimension of the one-vertex graph is 0 by convention"},
        )
    for k in range(0, g.n + 1):
        for combo in combinations(range(g.n), k):
            nodes += 1
            if check(kind, g, combo):
                return SolverResult(
                    kind=kind,
                    status=SolverStatus.EXACT,
                    value=k,
                    lower=k,
                    upper=k,
                    witness=combo,
                    nodes=nodes,
                    elapsed=time.monotonic() - started,
                )
    return SolverResult(
        kind=kind,
        status=SolverStatus.INFEASIBLE,
        value=None,
        lower=g.n + 1,
        upper=None,
        witness=None,
        nodes=nodes,
        elapsed=time.monotonic() - started,
        detail={"note": "no vertex set of any size satisfies the property"},
    )


# ---------------------------------------------------------------------------
# the pruned engines behind min_param


def _root_packing_bound(g, kind) -> int:
    nmask, cmask = _bit_masks(g)
    need, sup, self_sat, _ = _profile(kind, nmask, cmask)
    unsat = _coverage_state(g.n, 0, 0, need, sup, self_sat)
    if unsat is None:
        return g.n + 1
    return max(1, _packing_bound(unsat))


def _solve_coverage(ctx, g, kind, progress) -> tuple[int, tuple[int, ...]] | None:
    n = g.n
    nmask, cmask = _bit_masks(g)
    need, sup, self_sat, indep = _profile(kind, nmask, cmask)
    start = _root_packing_bound(g, kind)
    if start > n:
        return None
    for k in range(start, n + 1):
        progress["k"] = k
        got = _coverage_level(ctx, n, k, need, sup, self_sat, indep, nmask)
        if got is not None:
            return k, tuple(sorted(_bits(got)))
    return None


def _solve_connected(ctx, g, progress) -> tuple[int, tuple[int, ...]] | None:
    if not is_connected(g):
        return None
    n = g.n
    nmask, cmask = _bit_masks(g)
    dm = all_pairs_distances(g)
    diam = dm.diameter() or 0
    start = max(1, diam - 1, _root_packing_bound(g, ParameterKind.DOM))
    for k in range(start, n + 1):
        progress["k"] = k
        got = _connected_level(ctx, g, n, k, nmask, cmask)
        if got is not None:
            return k, tuple(sorted(_bits(got)))
    return None


def _solve_resolving(ctx, g, kind, progress) -> SolverResult | None:
    """Exact scan when the graph is small; otherwise certified bounds.

    Returns a full SolverResult for the bounds path, or None to signal the
    caller that an exact (value, witness) pair was placed in ``progress``.
    """
    n = g.n
    twin_lb = dim_lower_bound_twins(g)
    if n <= _RESOLVING_SCAN_CEILING:
        lower = max(twin_lb, 1)
        if kind is not ParameterKind.DIM:
            lower = max(lower, _domination_floor(ctx, g, kind, _bit_masks(g)))
        got = _resolving_scan(ctx, g, kind, lower, progress)
        if got is None:
            progress["infeasible"] = True
            return None
        progress["exact"] = got
        return None
    # large graph: twin-transversal decision at the bound, else bounds
    upper_members = _greedy_upper(g, kind)
    lower = max(1, twin_lb)
    if kind is ParameterKind.DIM and twin_lb > 0:
        witness = resolving_transversal_search(ctx, g)
        if witness == "skipped":
            pass  # selection space too large; fall through to bounds
        elif witness is not None:
            progress["exact"] = (twin_lb, witness)
            return None
        else:
            lower = twin_lb + 1
    value = None
    upper = None
    witness_t = None
    if upper_members is not None:
        upper = len(upper_members)
        witness_t = tuple(sorted(upper_members))
        if upper == lower:
            progress["exact"] = (upper, witness_t)
            return None
    return SolverResult(
        kind=kind,
        status=SolverStatus.BOUNDS,
        value=value,
        lower=lower,
        upper=upper,
        witness=witness_t,
        nodes=ctx.nodes,
        elapsed=0.0,
        detail={"note": "graph above the exhaustive scan ceiling"},
    )


def min_param(g: Graph, kind: ParameterKind, budget: Budget | None = None) -> SolverResult:
    """Minimise a parameter kind on g under the given budget.

    Exact results carry a verified witness; budget exhaustion yields
    certified bounds (lower from refuted sizes, upper from a greedy set).
    Infeasible kinds (for example total domination with an isolated vertex)
    report INFEASIBLE, which is itself an exact statement.
    """
    budget = budget or Budget()
    started = time.monotonic()
    if kind in RESOLVING_KINDS and not is_connected(g):
        raise GraphError(f"{kind.value} needs a connected graph")
    if kind is ParameterKind.QDDOM:
        if budget.exhaustive and g.n > QDDOM_EXHAUSTIVE_CEILING:
            raise GraphError(
                f"exhaustive qddom accepts at most {QDDOM_EXHAUSTIVE_CEILING} vertices, got {g.n}"
            )
        return quasi_double_domination_number(g, budget)
    if kind is ParameterKind.DIM and g.n == 1:
        res = naive_min_param(g, kind)
        res.elapsed = time.monotonic() - started
        return res
    if budget.exhaustive:
        if g.n > EXHAUSTIVE_CEILING:
            raise GraphError(f"exhaustive mode accepts at most {EXHAUSTIVE_CEILING} vertices, got {g.n}")
        res = naive_min_param(g, kind)
        res.elapsed = time.monotonic() - started
        return res

    ctx = _Ctx(budget)
    progress: dict = {}
    try:
        if kind in (ParameterKind.DOM, ParameterKind.IDOM, ParameterKind.TDOM, ParameterKind.DDOM, ParameterKind.TWODOM):
            got = _solve_coverage(ctx, g, kind, progress)
        elif kind is ParameterKind.CDOM:
            got = _solve_connected(ctx, g, progress)
        else:
            bounded = _solve_resolving(ctx, g, kind, progress)
            if bounded is not None:
                bounded.nodes = ctx.nodes
                bounded.elapsed = time.monotonic() - started
                return bounded
            if progress.get("infeasible"):
                got = None
            else:
                got = progress["exact"]
    except _BudgetExhausted:
        refuted_below = progress.get("k", 1)
        if kind in RESOLVING_KINDS:
            refuted_below = max(refuted_below, dim_lower_bound_twins(g))
        upper_members = _greedy_upper(g, kind)
        upper = len(upper_members) if upper_members else None
        witness = tuple(sorted(upper_members)) if upper_members else None
        return SolverResult(
            kind=kind,
            status=SolverStatus.BOUNDS,
            value=None,
            lower=refuted_below,
            upper=upper,
            witness=witness,
            nodes=ctx.nodes,
            elapsed=time.monotonic() - started,
            detail={"note": "budget exhausted; lower bound from fully refuted sizes"},
        )
    if got is None:
        return SolverResult(
            kind=kind,
            status=SolverStatus.INFEASIBLE,
            value=None,
            lower=g.n + 1,
            upper=None,
            witness=None,
            nodes=ctx.nodes,
            elapsed=time.monotonic() - started,
            detail={"note": "no vertex set of any size satisfies the property"},
        )
    value, witness = got
    if witness and not check(kind, g, witness):
        raise GraphError(f"internal error: {kind.value} witness failed re-verification")
    return SolverResult(
        kind=kind,
        status=SolverStatus.EXACT,
        value=value,
        lower=value,
        upper=value,
        witness=witness,
        nodes=ctx.nodes,
        elapsed=time.monotonic() - started,
    )
