"""Acceptance gate: nine criteria, one printed pass/fail line each.

Each test prints ``acceptance N (<title>): PASS|FAIL [elapsed]`` directly to
the real stdout so the lines survive pytest's capture, then asserts.  The
fixed seed 2026 makes every sampled criterion reproducible.
"""

import json
import sys
import time

from fcnlab.constructions import VARIANT_KINDS, construct, formula_value
from fcnlab.generators import complete, cycle, fcn, fcn_root_suffix, path, relabeled_equal, rooted_product
from fcnlab.graph import twin_partition
from fcnlab.harness import (
    BOUND_CLAIMS,
    PRODUCT_CLAIMS,
    Verdict,
    _rng_for,
    check_bound_claim,
    check_extremes_example,
    check_fcn_claim,
    check_product_claim,
    check_twin_bound_claim,
    random_connected_graph,
    run_all_claims,
)
from fcnlab.serialize import certificate_to_json, graph_digest, graph_from_json, graph_to_json
from fcnlab.solve import (
    Budget,
    SolverStatus,
    dim_lower_bound_twins,
    min_param,
    naive_min_param,
)
from fcnlab.verify import ParameterKind, certificate_indices, check

K = ParameterKind
SEED = 2026


def _report(num: int, title: str, ok: bool, started: float) -> None:
    elapsed = time.monotonic() - started
    line = f"acceptance {num} ({title}): {'PASS' if ok else 'FAIL'} [{elapsed:.1f}s]"
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()


def test_criterion_1_structure_and_serialization():
    started = time.monotonic()
    notes = []
    expected = {0: (4, 4), 1: (16, 20), 2: (64, 84), 3: (256, 340)}
    for level, (n, m) in expected.items():
        g = fcn(level)
        if (g.n, g.edge_count()) != (n, m):
            notes.append(f"level {level}: got ({g.n}, {g.edge_count()}), want ({n}, {m})")
        back = graph_from_json(graph_to_json(g))
        if graph_digest(back) != graph_digest(g):
            notes.append(f"level {level}: serialization round trip changed the digest")
    elapsed = time.monotonic() - started
    if elapsed >= 1.0:
        notes.append(f"generation + serialization took {elapsed:.2f}s, limit 1s")
    _report(1, "fcn structure and serialization", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_2_rooted_product_identity():
    started = time.monotonic()
    notes = []
    pref = {"0": "00", "1": "01", "2": "11", "3": "10"}
    for level in (1, 2):
        inner = fcn(level - 1)
        prod = rooted_product(cycle(4), inner, fcn_root_suffix(level))
        mapping = {f"{i}:{x}": p + x for i, p in pref.items() for x in inner.labels}
        if len(set(mapping.values())) != len(mapping):
            notes.append(f"level {level}: label map is not injective")
        if not relabeled_equal(prod, fcn(level), mapping):
            notes.append(f"level {level}: rooted product does not reproduce the fractal graph")
    elapsed = time.monotonic() - started
    if elapsed >= 1.0:
        notes.append(f"identity check took {elapsed:.2f}s, limit 1s")
    _report(2, "rooted product identity", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_3_fcn1_exhaustive_suite():
    started = time.monotonic()
    notes = []
    g = fcn(1)
    expected = {
        K.DOM: 6, K.IDOM: 6, K.TDOM: 8, K.DDOM: 12, K.TWODOM: 8,
        K.DIM: 4, K.RDOM: 8, K.RIDOM: 8, K.RTDOM: 8,
    }
    for kind, want in expected.items():
        t0 = time.monotonic()
        res = min_param(g, kind, Budget(exhaustive=True))
        dt = time.monotonic() - t0
        if res.status is not SolverStatus.EXACT or res.value != want:
            notes.append(f"{kind.value}: got {res.status.value}/{res.value}, want exact/{want}")
        elif not check(kind, g, res.witness):
            notes.append(f"{kind.value}: witness failed verification")
        if dt >= 60:
            notes.append(f"{kind.value}: exhaustive solve took {dt:.1f}s, limit 60s")

    # connected variants: exhaustive value 8, claim verdicts refuted against
    # the formula value 12 and the 8-vertex constructed set
    for kind, claim_id in ((K.CDOM, "cdom-rec"), (K.RCDOM, "rcdom-rec")):
        res = min_param(g, kind, Budget(exhaustive=True))
        if res.status is not SolverStatus.EXACT or res.value != 8:
            notes.append(f"{kind.value}: exhaustive value {res.value}, want 8")
        if formula_value(kind, 1) != 12:
            notes.append(f"{kind.value}: formula at level 1 is not 12")
        cert = construct(kind, 1)
        if cert.size() != 8 or not check(kind, g, certificate_indices(g, cert)):
            notes.append(f"{kind.value}: constructed 8-vertex set missing or invalid")
        out = check_fcn_claim(claim_id, 1)
        if out.verdict is not Verdict.REFUTED:
            notes.append(f"{claim_id}: verdict {out.verdict.value}, want refuted")
        elif out.witness is None or not check(kind, g, [g.index_of(x) for x in out.witness]):
            notes.append(f"{claim_id}: verdict does not carry a verifying witness")
    _report(3, "fcn(1) exhaustive parameter suite", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_4_fcn2_certificates_and_level3_extension():
    started = time.monotonic()
    notes = []
    g2 = fcn(2)
    single = {K.DOM: 22, K.IDOM: 22, K.TDOM: 30, K.DDOM: 44, K.RTDOM: 32,
              K.CDOM: 36, K.RCDOM: 36}
    t0 = time.monotonic()
    for kind, size in single.items():
        cert = construct(kind, 2)
        if cert.size() != size:
            notes.append(f"{kind.value}@2: size {cert.size()}, want {size}")
        if not check(kind, g2, certificate_indices(g2, cert)):
            notes.append(f"{kind.value}@2: set fails its predicate")
    # sizes that the closed forms claim for the exactly-recursive kinds
    for kind in (K.DOM, K.IDOM, K.TDOM, K.DDOM, K.RTDOM):
        if construct(kind, 2).size() != formula_value(kind, 2):
            notes.append(f"{kind.value}@2: size disagrees with the formula")
    # both 2-domination-shaped variants, with the size discrepancy surfaced
    variant_sizes = {}
    for kind in sorted(VARIANT_KINDS, key=lambda k: k.value):
        for variant in ("neighborhood", "twins"):
            cert = construct(kind, 2, variant)
            ok = check(kind, g2, certificate_indices(g2, cert))
            variant_sizes[(kind.value, variant)] = (cert.size(), ok)
            expected_ok = not (kind is K.RIDOM and variant == "neighborhood")
            if ok != expected_ok:
                notes.append(f"{kind.value}@2 {variant}: verifies={ok}, want {expected_ok}")
    for kind in ("twodom", "rdom", "ridom"):
        if variant_sizes[(kind, "neighborhood")][0] != 36 or variant_sizes[(kind, "twins")][0] != 32:
            notes.append(f"{kind}@2: variant sizes are not 36 vs 32")
    flagged = check_fcn_claim("ridom-rec", 2, Budget(max_nodes=2_000)).note
    if "fails the property check" not in flagged:
        notes.append("ridom claim note does not flag the failing variant")
    dt = time.monotonic() - t0
    if dt >= 10:
        notes.append(f"level-2 certificate block took {dt:.1f}s, limit 10s")

    # level-3 extension: certificates verify; optimisation gets bound
    # intervals under a stated node budget rather than exact values
    g3 = fcn(3)
    for kind, factor in ((K.DOM, 4), (K.TDOM, 4), (K.DDOM, 4)):
        cert = construct(kind, 3)
        if not check(kind, g3, certificate_indices(g3, cert)):
            notes.append(f"{kind.value}@3: set fails its predicate")
    if not check(K.TWODOM, g3, certificate_indices(g3, construct(K.TWODOM, 3, "twins"))):
        notes.append("twodom@3 twins: set fails its predicate")
    res = min_param(g3, K.DOM, Budget(max_nodes=100_000))
    cert_size = construct(K.DOM, 3).size()
    if res.status is not SolverStatus.BOUNDS or not (res.lower <= cert_size):
        notes.append(
            f"dom@3 under budget: status {res.status.value}, interval [{res.lower}, {res.upper}] "
            f"does not sit below the verified certificate size {cert_size}"
        )
    _report(4, "fcn(2) certificates and fcn(3) extension", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_5_twin_bound_and_metric_dimension():
    started = time.monotonic()
    notes = []
    for level in (1, 2):
        if dim_lower_bound_twins(fcn(level)) != 4**level:
            notes.append(f"twin bound at level {level} is not {4 ** level}")

    g1 = fcn(1)
    res1 = naive_min_param(g1, K.DIM)
    if res1.value != 4 or not check(K.DIM, g1, res1.witness):
        notes.append("level 1: exhaustive search did not produce a verified 4-vertex resolving set")

    g2 = fcn(2)
    t0 = time.monotonic()
    res2 = min_param(g2, K.DIM)
    dt = time.monotonic() - t0
    if res2.status is not SolverStatus.EXACT or res2.value != 16:
        notes.append(f"level 2: got {res2.status.value}/{res2.value}, want exact/16")
    elif not check(K.DIM, g2, res2.witness):
        notes.append("level 2: resolving witness failed verification")
    if dt >= 120:
        notes.append(f"level 2 search took {dt:.1f}s, limit 120s")
    _report(5, "twin lower bound and metric dimension", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_6_rooted_product_membership_claims():
    started = time.monotonic()
    notes = []
    for claim_id in sorted(PRODUCT_CLAIMS):
        out = check_product_claim(claim_id, seed=SEED, instances=200)
        if out.violations:
            notes.append(f"{claim_id}: {len(out.violations)} violations, first {out.violations[0]}")
        if out.verdict is not Verdict.CONFIRMED:
            notes.append(f"{claim_id}: verdict {out.verdict.value}")
        if out.checked + out.vacuous != 200:
            notes.append(f"{claim_id}: instance accounting is off")
    elapsed = time.monotonic() - started
    if elapsed >= 600:
        notes.append(f"product claims took {elapsed:.0f}s, limit 600s")
    _report(6, "rooted product membership claims", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_7_bound_claims_and_extremes():
    started = time.monotonic()
    notes = []
    for claim_id in sorted(BOUND_CLAIMS):
        out = check_bound_claim(claim_id, seed=SEED, instances=200)
        if out.violations:
            notes.append(f"{claim_id}: violations {out.violations[:1]}")
        if out.verdict is not Verdict.CONFIRMED:
            notes.append(f"{claim_id}: verdict {out.verdict.value}")
    twin = check_twin_bound_claim(seed=SEED, instances=200)
    if twin.verdict is not Verdict.CONFIRMED:
        notes.append("twin-dim-bound: not confirmed")
    demo = check_extremes_example()
    if demo.verdict is not Verdict.CONFIRMED:
        notes.append("extremes-demo: the bridged-triangles instance missed its extremes")
    _report(7, "resolving bound claims and extremes", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_8_oracle_equivalence():
    started = time.monotonic()
    notes = []
    graphs = (
        [cycle(n) for n in range(3, 9)]
        + [path(n) for n in range(1, 9)]
        + [complete(n) for n in range(1, 9)]
    )
    rng = _rng_for("acceptance-oracle", SEED)
    graphs += [
        random_connected_graph(rng, rng.randint(2, 8), rng.choice((0.3, 0.5, 0.7)))
        for _ in range(100)
    ]
    mismatches = 0
    for g in graphs:
        for kind in K:
            fast = min_param(g, kind)
            slow = naive_min_param(g, kind)
            if (fast.status, fast.value) != (slow.status, slow.value):
                mismatches += 1
                if len(notes) < 5:
                    notes.append(
                        f"{g.name} n={g.n} {kind.value}: engine {fast.status.value}/{fast.value} "
                        f"vs oracle {slow.status.value}/{slow.value}"
                    )
    if mismatches:
        notes.append(f"{mismatches} total mismatches")
    _report(8, "engine equals exhaustive oracle", not notes, started)
    assert not notes, "; ".join(notes)


def test_criterion_9_determinism():
    started = time.monotonic()
    notes = []
    kwargs = dict(seed=SEED, instances=20, levels=(1,), threads=1)
    a = json.dumps(run_all_claims(**kwargs), sort_keys=True, separators=(",", ":"))
    b = json.dumps(run_all_claims(**kwargs), sort_keys=True, separators=(",", ":"))
    if a != b:
        notes.append("two identical report runs differ byte for byte")
    for kind, variant in ((K.DOM, "default"), (K.TWODOM, "twins")):
        one = certificate_to_json(construct(kind, 2, variant))
        two = certificate_to_json(construct(kind, 2, variant))
        if one != two:
            notes.append(f"certificate for {kind.value}/{variant} is not reproducible")
    solver_a = min_param(fcn(1), K.TDOM)
    solver_b = min_param(fcn(1), K.TDOM)
    if (solver_a.witness, solver_a.nodes) != (solver_b.witness, solver_b.nodes):
        notes.append("solver runs with equal inputs diverge")
    _report(9, "byte-identical reports and certificates", not notes, started)
    assert not notes, "; ".join(notes)
