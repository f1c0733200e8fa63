"""Claim registry and adjudication.

Three families of claims are checked against the solver:

* fcn claims: a closed-form value for one parameter kind on fcn(l),
  adjudicated per level by combining solver bounds with the verified
  constructed certificates.
* rooted-product claims: the parameter of gamma rooted at a vertex of omega
  lies in a small membership set; checked on seeded random instances.
* bound claims: inequalities between parameters of a single graph; checked
  on seeded random connected graphs.

Verdicts are conservative.  Confirmed needs the exact value (or matching
certified bounds); refuted needs a machine-checkable witness or a fully
refuted size range; anything else stays undecided.  Reports contain no
wall-clock readings, so a node-budgeted run serialises byte-identically
across machines.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .constructions import VARIANT_KINDS, construct, formula_value
from .generators import cycle, complete, fcn, path, rooted_product
from .graph import Graph, GraphError, induced_subgraph, is_connected
from .serialize import graph_digest, graph_to_obj
from .solve import Budget, SolverResult, SolverStatus, dim_lower_bound_twins, min_param
from .verify import ParameterKind, certificate_indices, check


class Verdict(str, Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    UNDECIDED = "undecided"


class InstanceOutcome(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"


DEFAULT_INSTANCES = 200
DEFAULT_LEVEL_NODES = 2_000_000
_VIOLATION_CAP = 5


def _rng_for(tag: str, seed: int) -> random.Random:
    digest = hashlib.sha256(f"{tag}:{seed}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


# ---------------------------------------------------------------------------
# random instances


def random_graph(rng: random.Random, n: int, p: float, name: str = "R") -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    width = len(str(n - 1))
    labels = [str(i).zfill(width) for i in range(n)]
    from .graph import build_graph

    return build_graph(n, edges, labels=labels, name=name)


def random_connected_graph(rng: random.Random, n: int, p: float, name: str = "R") -> Graph:
    for _ in range(1000):
        g = random_graph(rng, n, p, name)
        if is_connected(g):
            return g
    # a connected fallback so seeded runs never die: a path plus chords
    base = [(i, i + 1) for i in range(n - 1)]
    extra = [(u, v) for u in range(n) for v in range(u + 2, n) if rng.random() < p]
    from .graph import build_graph

    width = len(str(n - 1))
    return build_graph(n, base + extra, labels=[str(i).zfill(width) for i in range(n)], name=name)


def random_isolate_free_graph(rng: random.Random, n: int, p: float, name: str = "R") -> Graph:
    for _ in range(1000):
        g = random_graph(rng, n, p, name)
        if all(g.degree(v) > 0 for v in range(g.n)):
            return g
    return random_connected_graph(rng, n, p, name)


# ---------------------------------------------------------------------------
# fcn claims


@dataclass(frozen=True)
class FcnClaim:
    claim_id: str
    kind: ParameterKind
    description: str
    min_level: int
    max_level: int | None = None

    def applies(self, level: int) -> bool:
        if level < self.min_level:
            return False
        return self.max_level is None or level <= self.max_level


FCN_CLAIMS: dict[str, FcnClaim] = {
    c.claim_id: c
    for c in (
        FcnClaim("dom-rec", ParameterKind.DOM, "domination number follows 4x-2 from level 0", 1),
        FcnClaim("idom-rec", ParameterKind.IDOM, "independent domination number follows 4x-2 from level 0", 1),
        FcnClaim("tdom-base", ParameterKind.TDOM, "total domination number at level 1 is 8", 1, 1),
        FcnClaim("tdom-rec", ParameterKind.TDOM, "total domination number follows 4x-2 from level 1", 2),
        FcnClaim("cdom-rec", ParameterKind.CDOM, "connected domination number follows 4(x+1) from level 0", 1),
        FcnClaim("ddom-base", ParameterKind.DDOM, "double domination number at level 1 is 12", 1, 1),
        FcnClaim("ddom-rec", ParameterKind.DDOM, "double domination number follows 4(x-1) from level 1", 2),
        FcnClaim("twodom-rec", ParameterKind.TWODOM, "2-domination number follows 4x from level 0", 1),
        FcnClaim("dim-power", ParameterKind.DIM, "metric dimension equals 4^l", 1),
        FcnClaim("rdom-rec", ParameterKind.RDOM, "resolving domination number equals 4 times the previous 2-domination number", 1),
        FcnClaim("ridom-rec", ParameterKind.RIDOM, "resolving independent domination number equals 4 times the previous 2-domination number", 1),
        FcnClaim("rtdom-base", ParameterKind.RTDOM, "resolving total domination number at level 1 is 8", 1, 1),
        FcnClaim("rtdom-rec", ParameterKind.RTDOM, "resolving total domination number follows 4x from level 1", 2),
        FcnClaim("rcdom-rec", ParameterKind.RCDOM, "resolving connected domination number follows 4(x+1) from level 0", 1),
    )
}


@dataclass
class FcnClaimOutcome:
    claim_id: str
    level: int
    kind: ParameterKind
    formula: int
    verdict: Verdict
    lower: int
    upper: int | None
    solver_status: SolverStatus
    solver_value: int | None
    nodes: int
    certificates: list[dict]
    witness: tuple[str, ...] | None
    note: str

    def to_obj(self) -> dict:
        return {
            "claim": self.claim_id,
            "level": self.level,
            "kind": self.kind.value,
            "formula": self.formula,
            "verdict": self.verdict.value,
            "lower": self.lower,
            "upper": self.upper,
            "solver_status": self.solver_status.value,
            "solver_value": self.solver_value,
            "nodes": self.nodes,
            "certificates": self.certificates,
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }


def _certificate_evidence(kind: ParameterKind, level: int, g: Graph) -> list[dict]:
    out = []
    variants = ("neighborhood", "twins") if kind in VARIANT_KINDS else ("default",)
    for variant in variants:
        try:
            cert = construct(kind, level, variant)
        except GraphError:
            continue
        members = certificate_indices(g, cert)
        ok = check(kind, g, members)
        out.append({"variant": variant, "size": cert.size(), "verifies": ok, "vertices": list(cert.vertices)})
    return out


def check_fcn_claim(claim_id: str, level: int, budget: Budget | None = None) -> FcnClaimOutcome:
    """Adjudicate one closed-form claim at one level."""
    claim = FCN_CLAIMS[claim_id]
    if not claim.applies(level):
        raise GraphError(f"{claim_id} makes no statement at level {level}")
    kind = claim.kind
    formula = formula_value(kind, level)
    g = fcn(level)
    if budget is None and level >= 2:
        budget = Budget(max_nodes=DEFAULT_LEVEL_NODES)
    res = min_param(g, kind, budget)
    certs = _certificate_evidence(kind, level, g)

    lower = res.lower
    upper = res.upper
    witness_names = res.witness_names(g)
    for entry in certs:
        if entry["verifies"] and (upper is None or entry["size"] < upper):
            upper = entry["size"]
            witness_names = tuple(entry["vertices"])
    note = ""
    if res.status is SolverStatus.INFEASIBLE:
        verdict = Verdict.REFUTED
        note = "no set of any size has the property, so the claimed value cannot be attained"
        witness_names = None
    elif upper is not None and formula > upper:
        verdict = Verdict.REFUTED
        note = f"a verified set of size {upper} beats the claimed {formula}"
    elif formula < lower:
        verdict = Verdict.REFUTED
        note = f"every size below {lower} is refuted by search, above the claimed {formula}"
        witness_names = None
    elif upper is not None and lower == upper == formula:
        verdict = Verdict.CONFIRMED
        note = "optimum matches the claimed value"
    else:
        verdict = Verdict.UNDECIDED
        note = f"bounds [{lower}, {upper}] do not settle the claimed {formula} within budget"
    if verdict is not Verdict.REFUTED:
        mismatched = [e for e in certs if e["verifies"] and e["size"] != formula]
        if mismatched:
            sizes = ", ".join(f"{e['variant']}={e['size']}" for e in mismatched)
            note += f"; constructed set sizes differ from the formula ({sizes})"
    failing = [e for e in certs if not e["verifies"]]
    if failing:
        names = ", ".join(e["variant"] for e in failing)
        note += f"; construction variant {names} fails the property check"
    return FcnClaimOutcome(
        claim_id=claim_id,
        level=level,
        kind=kind,
        formula=formula,
        verdict=verdict,
        lower=lower,
        upper=upper,
        solver_status=res.status,
        solver_value=res.value,
        nodes=res.nodes,
        certificates=[{k: v for k, v in e.items() if k != "vertices"} for e in certs],
        witness=witness_names,
        note=note,
    )


# ---------------------------------------------------------------------------
# rooted-product claims


@dataclass(frozen=True)
class ProductClaim:
    claim_id: str
    kind: ParameterKind
    description: str
    gamma_shape: str  # any | isolate-free | connected
    omega_shape: str
    needs_gamma: tuple[ParameterKind, ...]
    needs_omega: tuple[ParameterKind, ...]
    fixed_omega: str | None = None  # generator name for a pinned omega


PRODUCT_CLAIMS: dict[str, ProductClaim] = {
    c.claim_id: c
    for c in (
        ProductClaim(
            "rp-dom", ParameterKind.DOM,
            "domination of the rooted product lands on n*y(omega) or n*y(omega)-n+y(gamma)",
            "isolate-free", "any", (ParameterKind.DOM,), (ParameterKind.DOM,),
        ),
        ProductClaim(
            "rp-idom", ParameterKind.IDOM,
            "independent domination of the rooted product lands on n*yi(omega) or n*yi(omega)-n+yi(gamma)",
            "isolate-free", "any", (ParameterKind.IDOM,), (ParameterKind.IDOM,),
        ),
        ProductClaim(
            "rp-tdom", ParameterKind.TDOM,
            "total domination of the rooted product lands in a four-value set",
            "isolate-free", "isolate-free",
            (ParameterKind.DOM, ParameterKind.TDOM), (ParameterKind.TDOM,),
        ),
        ProductClaim(
            "rp-cdom", ParameterKind.CDOM,
            "connected domination of the rooted product lands on n*yc(omega) or n*yc(omega)+n",
            "connected", "connected", (), (ParameterKind.CDOM,),
        ),
        ProductClaim(
            "rp-ddom", ParameterKind.DDOM,
            "double domination of the rooted product lands in a six-value set",
            "connected", "connected",
            (ParameterKind.DOM, ParameterKind.TWODOM, ParameterKind.DDOM, ParameterKind.QDDOM),
            (ParameterKind.DDOM,),
        ),
        ProductClaim(
            "rp-ddom-c4", ParameterKind.DDOM,
            "double domination of the rooted product with a 4-cycle equals 3n",
            "isolate-free", "any", (), (ParameterKind.DDOM,), fixed_omega="C4",
        ),
        ProductClaim(
            "rp-2dom", ParameterKind.TWODOM,
            "2-domination of the rooted product lands in a three-value set",
            "any", "any", (ParameterKind.DOM, ParameterKind.TWODOM), (ParameterKind.TWODOM,),
        ),
        ProductClaim(
            "rp-2dom-equiv", ParameterKind.TWODOM,
            "2-domination equals n*y2(omega) exactly when deleting the root does not lower y2",
            "isolate-free", "any", (ParameterKind.TWODOM,), (ParameterKind.TWODOM,),
        ),
    )
}


def _membership_set(claim: ProductClaim, n: int, gp: dict, op: dict) -> set[int]:
    K = ParameterKind
    if claim.claim_id == "rp-dom":
        return {n * op[K.DOM], n * op[K.DOM] - n + gp[K.DOM]}
    if claim.claim_id == "rp-idom":
        return {n * op[K.IDOM], n * op[K.IDOM] - n + gp[K.IDOM]}
    if claim.claim_id == "rp-tdom":
        t = n * op[K.TDOM]
        return {t - n, gp[K.DOM] + t - n, gp[K.TDOM] + t - n, t}
    if claim.claim_id == "rp-cdom":
        return {n * op[K.CDOM], n * op[K.CDOM] + n}
    if claim.claim_id == "rp-ddom":
        d = n * op[K.DDOM]
        return {d, gp[K.QDDOM] + d - n, gp[K.TWODOM] + d - n, gp[K.DOM] + d - n, d - n, gp[K.DDOM] + d - 2 * n}
    if claim.claim_id == "rp-ddom-c4":
        return {3 * n}
    if claim.claim_id == "rp-2dom":
        d = n * op[K.TWODOM]
        return {gp[K.DOM] + d - n, gp[K.TWODOM] + d - n, d}
    raise GraphError(f"no membership set for {claim.claim_id}")


class _ParamCache:
    """min_param memoised by (graph content, kind) for one claim run."""

    def __init__(self):
        self.store: dict[tuple[str, ParameterKind], SolverResult] = {}
        self.nodes = 0

    def value(self, g: Graph, kind: ParameterKind) -> int | None:
        key = (graph_digest(g), kind)
        if key not in self.store:
            res = min_param(g, kind)
            self.store[key] = res
            self.nodes += res.nodes
        res = self.store[key]
        return res.value if res.status is SolverStatus.EXACT else None


def _draw_graph(rng: random.Random, shape: str, n: int, p: float, name: str) -> Graph:
    if shape == "connected":
        return random_connected_graph(rng, n, p, name)
    if shape == "isolate-free":
        return random_isolate_free_graph(rng, n, p, name)
    return random_graph(rng, n, p, name)


@dataclass
class ProductClaimOutcome:
    claim_id: str
    seed: int
    verdict: Verdict
    checked: int
    vacuous: int
    nodes: int
    violations: list[dict]
    vacuous_reasons: dict[str, int] = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {
            "claim": self.claim_id,
            "seed": self.seed,
            "verdict": self.verdict.value,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "nodes": self.nodes,
            "violations": self.violations,
            "vacuous_reasons": dict(sorted(self.vacuous_reasons.items())),
        }


def check_product_claim(claim_id: str, seed: int, instances: int = DEFAULT_INSTANCES) -> ProductClaimOutcome:
    """Sample rooted products and check the membership claim on each."""
    claim = PRODUCT_CLAIMS[claim_id]
    rng = _rng_for(claim_id, seed)
    cache = _ParamCache()
    checked = 0
    vacuous = 0
    reasons: dict[str, int] = {}
    violations: list[dict] = []
    done = 0
    while done < instances:
        n_g = rng.randint(2, 6)
        p = rng.choice((0.3, 0.5, 0.7))
        gamma = _draw_graph(rng, claim.gamma_shape, n_g, p, "G")
        if claim.fixed_omega == "C4":
            omega = cycle(4)
        else:
            omega = _draw_graph(rng, claim.omega_shape, rng.randint(2, 5), rng.choice((0.3, 0.5, 0.7)), "H")
        for root in range(omega.n):
            if done >= instances:
                break
            done += 1
            outcome, info = _check_product_instance(claim, gamma, omega, root, cache)
            if outcome is InstanceOutcome.VACUOUS:
                vacuous += 1
                reasons[info["reason"]] = reasons.get(info["reason"], 0) + 1
            elif outcome is InstanceOutcome.VIOLATED:
                checked += 1
                if len(violations) < _VIOLATION_CAP:
                    violations.append(info)
            else:
                checked += 1
    if violations:
        verdict = Verdict.REFUTED
    elif checked:
        verdict = Verdict.CONFIRMED
    else:
        verdict = Verdict.UNDECIDED
    return ProductClaimOutcome(
        claim_id=claim_id,
        seed=seed,
        verdict=verdict,
        checked=checked,
        vacuous=vacuous,
        nodes=cache.nodes,
        violations=violations,
        vacuous_reasons=reasons,
    )


def _check_product_instance(claim, gamma, omega, root, cache):
    n = gamma.n
    if gamma.n < 2 or omega.n < 2:
        return InstanceOutcome.VACUOUS, {"reason": "graph below the stated order"}
    prod = rooted_product(gamma, omega, root)
    gp: dict[ParameterKind, int] = {}
    op: dict[ParameterKind, int] = {}
    for kind in claim.needs_gamma:
        v = cache.value(gamma, kind)
        if v is None:
            return InstanceOutcome.VACUOUS, {"reason": f"{kind.value} undefined on the outer graph"}
        gp[kind] = v
    for kind in claim.needs_omega:
        v = cache.value(omega, kind)
        if v is None:
            return InstanceOutcome.VACUOUS, {"reason": f"{kind.value} undefined on the inner graph"}
        op[kind] = v

    if claim.claim_id == "rp-2dom-equiv":
        if gp[ParameterKind.TWODOM] >= n:
            return InstanceOutcome.VACUOUS, {"reason": "2-domination of the outer graph is not below its order"}
        keep = [v for v in range(omega.n) if v != root]
        reduced = induced_subgraph(omega, keep)
        y2_reduced = cache.value(reduced, ParameterKind.TWODOM)
        lhs = cache.value(prod, ParameterKind.TWODOM)
        if lhs is None or y2_reduced is None:
            return InstanceOutcome.VACUOUS, {"reason": "a needed value did not solve exactly"}
        equal_side = lhs == n * op[ParameterKind.TWODOM]
        stable_side = y2_reduced >= op[ParameterKind.TWODOM]
        if equal_side == stable_side:
            return InstanceOutcome.HOLDS, {}
        return InstanceOutcome.VIOLATED, {
            "gamma": graph_to_obj(gamma),
            "omega": graph_to_obj(omega),
            "root": omega.vertex_name(root),
            "lhs": lhs,
            "n_times_y2": n * op[ParameterKind.TWODOM],
            "y2_omega_minus_root": y2_reduced,
            "y2_omega": op[ParameterKind.TWODOM],
        }

    lhs = cache.value(prod, claim.kind)
    if lhs is None:
        return InstanceOutcome.VACUOUS, {"reason": f"{claim.kind.value} undefined on the product"}
    allowed = _membership_set(claim, n, gp, op)
    if lhs in allowed:
        return InstanceOutcome.HOLDS, {}
    return InstanceOutcome.VIOLATED, {
        "gamma": graph_to_obj(gamma),
        "omega": graph_to_obj(omega),
        "root": omega.vertex_name(root),
        "lhs": lhs,
        "allowed": sorted(allowed),
    }


# ---------------------------------------------------------------------------
# bound claims on single graphs


@dataclass(frozen=True)
class BoundClaim:
    claim_id: str
    description: str
    needs: tuple[ParameterKind, ...]
    # returns None for vacuous, True/False for checked
    relation: Callable[[dict], bool | None]


def _rel_rdom(v):
    return max(v[ParameterKind.DOM], v[ParameterKind.DIM]) <= v[ParameterKind.RDOM] <= v[ParameterKind.DOM] + v[ParameterKind.DIM]


def _rel_ridom(v):
    if v[ParameterKind.RIDOM] is None:
        return None
    return max(v[ParameterKind.IDOM], v[ParameterKind.DIM]) <= v[ParameterKind.RIDOM] <= v[ParameterKind.IDOM] + v[ParameterKind.DIM]


def _rel_rtdom(v):
    return max(v[ParameterKind.TDOM], v[ParameterKind.DIM]) <= v[ParameterKind.RTDOM] <= v[ParameterKind.TDOM] + v[ParameterKind.DIM]


def _rel_rcdom(v):
    return max(v[ParameterKind.CDOM], v[ParameterKind.DIM]) <= v[ParameterKind.RCDOM] <= v[ParameterKind.CDOM] + v[ParameterKind.DIM]


def _rel_rtdom_ge(v):
    if v[ParameterKind.TDOM] < v[ParameterKind.DIM]:
        return None
    return v[ParameterKind.TDOM] <= v[ParameterKind.RTDOM] <= v[ParameterKind.TDOM] + v[ParameterKind.DIM]


def _rel_rtdom_le(v):
    if v[ParameterKind.TDOM] > v[ParameterKind.DIM]:
        return None
    return v[ParameterKind.DIM] <= v[ParameterKind.RTDOM] <= v[ParameterKind.TDOM] + v[ParameterKind.DIM]


def _rel_rcdom_ge(v):
    if v[ParameterKind.CDOM] < v[ParameterKind.DIM]:
        return None
    return v[ParameterKind.CDOM] <= v[ParameterKind.RCDOM] <= v[ParameterKind.CDOM] + v[ParameterKind.DIM]


def _rel_rcdom_le(v):
    if v[ParameterKind.CDOM] > v[ParameterKind.DIM]:
        return None
    return v[ParameterKind.DIM] <= v[ParameterKind.RCDOM] <= v[ParameterKind.CDOM] + v[ParameterKind.DIM]


def _rel_chain(v):
    return v[ParameterKind.RDOM] <= v[ParameterKind.RTDOM] <= v[ParameterKind.RCDOM]


BOUND_CLAIMS: dict[str, BoundClaim] = {
    c.claim_id: c
    for c in (
        BoundClaim(
            "rdom-bounds",
            "resolving domination sits between max(y, dim) and y + dim",
            (ParameterKind.DOM, ParameterKind.DIM, ParameterKind.RDOM),
            _rel_rdom,
        ),
        BoundClaim(
            "ridom-bounds",
            "resolving independent domination sits between max(yi, dim) and yi + dim",
            (ParameterKind.IDOM, ParameterKind.DIM, ParameterKind.RIDOM),
            _rel_ridom,
        ),
        BoundClaim(
            "rtdom-bounds",
            "resolving total domination sits between max(yt, dim) and yt + dim",
            (ParameterKind.TDOM, ParameterKind.DIM, ParameterKind.RTDOM),
            _rel_rtdom,
        ),
        BoundClaim(
            "rcdom-bounds",
            "resolving connected domination sits between max(yc, dim) and yc + dim",
            (ParameterKind.CDOM, ParameterKind.DIM, ParameterKind.RCDOM),
            _rel_rcdom,
        ),
        BoundClaim(
            "rtdom-cond-ge",
            "when yt >= dim the resolving total domination number lies in [yt, yt + dim]",
            (ParameterKind.TDOM, ParameterKind.DIM, ParameterKind.RTDOM),
            _rel_rtdom_ge,
        ),
        BoundClaim(
            "rtdom-cond-le",
            "when yt <= dim the resolving total domination number lies in [dim, yt + dim]",
            (ParameterKind.TDOM, ParameterKind.DIM, ParameterKind.RTDOM),
            _rel_rtdom_le,
        ),
        BoundClaim(
            "rcdom-cond-ge",
            "when yc >= dim the resolving connected domination number lies in [yc, yc + dim]",
            (ParameterKind.CDOM, ParameterKind.DIM, ParameterKind.RCDOM),
            _rel_rcdom_ge,
        ),
        BoundClaim(
            "rcdom-cond-le",
            "when yc <= dim the resolving connected domination number lies in [dim, yc + dim]",
            (ParameterKind.CDOM, ParameterKind.DIM, ParameterKind.RCDOM),
            _rel_rcdom_le,
        ),
        BoundClaim(
            "rchain",
            "resolving domination <= resolving total domination <= resolving connected domination",
            (ParameterKind.RDOM, ParameterKind.RTDOM, ParameterKind.RCDOM),
            _rel_chain,
        ),
    )
}


@dataclass
class BoundClaimOutcome:
    claim_id: str
    seed: int
    verdict: Verdict
    checked: int
    vacuous: int
    nodes: int
    violations: list[dict]

    def to_obj(self) -> dict:
        return {
            "claim": self.claim_id,
            "seed": self.seed,
            "verdict": self.verdict.value,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "nodes": self.nodes,
            "violations": self.violations,
        }


def check_bound_claim(claim_id: str, seed: int, instances: int = DEFAULT_INSTANCES) -> BoundClaimOutcome:
    """Check one inequality claim on seeded random connected graphs."""
    claim = BOUND_CLAIMS[claim_id]
    rng = _rng_for(claim_id, seed)
    checked = 0
    vacuous = 0
    nodes = 0
    violations: list[dict] = []
    for _ in range(instances):
        n = rng.randint(3, 8)
        g = random_connected_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
        values: dict[ParameterKind, int | None] = {}
        for kind in claim.needs:
            res = min_param(g, kind)
            nodes += res.nodes
            values[kind] = res.value if res.status is SolverStatus.EXACT else None
        if any(values[k] is None for k in claim.needs if k is not ParameterKind.RIDOM):
            vacuous += 1
            continue
        got = claim.relation(values)
        if got is None:
            vacuous += 1
        elif got:
            checked += 1
        else:
            checked += 1
            if len(violations) < _VIOLATION_CAP:
                violations.append(
                    {
                        "graph": graph_to_obj(g),
                        "values": {k.value: values[k] for k in claim.needs},
                    }
                )
    if violations:
        verdict = Verdict.REFUTED
    elif checked:
        verdict = Verdict.CONFIRMED
    else:
        verdict = Verdict.UNDECIDED
    return BoundClaimOutcome(
        claim_id=claim_id,
        seed=seed,
        verdict=verdict,
        checked=checked,
        vacuous=vacuous,
        nodes=nodes,
        violations=violations,
    )


def check_twin_bound_claim(seed: int, instances: int = DEFAULT_INSTANCES) -> BoundClaimOutcome:
    """Metric dimension is at least the twin lower bound on connected graphs."""
    rng = _rng_for("twin-dim-bound", seed)
    checked = 0
    nodes = 0
    violations: list[dict] = []
    for _ in range(instances):
        n = rng.randint(3, 8)
        g = random_connected_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
        res = min_param(g, ParameterKind.DIM)
        nodes += res.nodes
        lb = dim_lower_bound_twins(g)
        if res.value is not None and res.value >= lb:
            checked += 1
        else:
            checked += 1
            if len(violations) < _VIOLATION_CAP:
                violations.append({"graph": graph_to_obj(g), "dim": res.value, "twin_bound": lb})
    verdict = Verdict.REFUTED if violations else Verdict.CONFIRMED
    return BoundClaimOutcome("twin-dim-bound", seed, verdict, checked, 0, nodes, violations)


def check_extremes_example() -> BoundClaimOutcome:
    """The bridged-triangles example attains the stated extremes.

    Resolving domination hits its lower bound there while the resolving
    total and resolving connected variants hit their upper bounds.
    """
    g = rooted_product(path(2), complete(3), 0)
    vals = {}
    nodes = 0
    for kind in (
        ParameterKind.DOM, ParameterKind.TDOM, ParameterKind.CDOM, ParameterKind.DIM,
        ParameterKind.RDOM, ParameterKind.RTDOM, ParameterKind.RCDOM,
    ):
        res = min_param(g, kind)
        nodes += res.nodes
        vals[kind] = res.value
    ok = (
        vals[ParameterKind.RDOM] == max(vals[ParameterKind.DOM], vals[ParameterKind.DIM])
        and vals[ParameterKind.RTDOM] == vals[ParameterKind.TDOM] + vals[ParameterKind.DIM]
        and vals[ParameterKind.RCDOM] == vals[ParameterKind.CDOM] + vals[ParameterKind.DIM]
    )
    violations = [] if ok else [{"graph": graph_to_obj(g), "values": {k.value: v for k, v in vals.items()}}]
    return BoundClaimOutcome(
        "extremes-demo", 0, Verdict.CONFIRMED if ok else Verdict.REFUTED, 1, 0, nodes, violations
    )


# ---------------------------------------------------------------------------
# whole-registry runs


def _run_product_claim(args):
    claim_id, seed, instances = args
    return check_product_claim(claim_id, seed, instances)


def _run_bound_claim(args):
    claim_id, seed, instances = args
    if claim_id == "twin-dim-bound":
        return check_twin_bound_claim(seed, instances)
    if claim_id == "extremes-demo":
        return check_extremes_example()
    return check_bound_claim(claim_id, seed, instances)


def run_all_claims(
    seed: int,
    instances: int = DEFAULT_INSTANCES,
    levels: tuple[int, ...] = (1, 2),
    budget: Budget | None = None,
    threads: int = 1,
) -> dict:
    """Adjudicate the full registry and assemble a deterministic report."""
    fcn_outcomes = []
    for claim in sorted(FCN_CLAIMS.values(), key=lambda c: c.claim_id):
        for level in levels:
            if claim.applies(level):
                fcn_outcomes.append(check_fcn_claim(claim.claim_id, level, budget))
    product_jobs = [(cid, seed, instances) for cid in sorted(PRODUCT_CLAIMS)]
    bound_jobs = [(cid, seed, instances) for cid in sorted(BOUND_CLAIMS)]
    bound_jobs += [("twin-dim-bound", seed, instances), ("extremes-demo", seed, instances)]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            product_outcomes = list(pool.map(_run_product_claim, product_jobs))
            bound_outcomes = list(pool.map(_run_bound_claim, bound_jobs))
    else:
        product_outcomes = [_run_product_claim(j) for j in product_jobs]
        bound_outcomes = [_run_bound_claim(j) for j in bound_jobs]
    all_verdicts = (
        [o.verdict for o in fcn_outcomes]
        + [o.verdict for o in product_outcomes]
        + [o.verdict for o in bound_outcomes]
    )
    return {
        "seed": seed,
        "instances": instances,
        "levels": list(levels),
        "fcn": [o.to_obj() for o in fcn_outcomes],
        "product": [o.to_obj() for o in product_outcomes],
        "bounds": [o.to_obj() for o in bound_outcomes],
        "summary": {
            "confirmed": sum(1 for v in all_verdicts if v is Verdict.CONFIRMED),
            "refuted": sum(1 for v in all_verdicts if v is Verdict.REFUTED),
            "undecided": sum(1 for v in all_verdicts if v is Verdict.UNDECIDED),
        },
    }
