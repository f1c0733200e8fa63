"""Claim adjudication: registries, verdicts, sampling, determinism."""

import json
import random

import pytest

from fcnlab.graph import is_connected
from fcnlab.harness import (
    BOUND_CLAIMS,
    FCN_CLAIMS,
    PRODUCT_CLAIMS,
    Verdict,
    _rng_for,
    check_bound_claim,
    check_extremes_example,
    check_fcn_claim,
    check_product_claim,
    check_twin_bound_claim,
    random_connected_graph,
    random_graph,
    random_isolate_free_graph,
    run_all_claims,
)
from fcnlab.graph import GraphError
from fcnlab.solve import Budget


class TestRegistries:
    def test_fcn_claim_ids(self):
        assert sorted(FCN_CLAIMS) == [
            "cdom-rec", "ddom-base", "ddom-rec", "dim-power", "dom-rec",
            "idom-rec", "rcdom-rec", "rdom-rec", "ridom-rec", "rtdom-base",
            "rtdom-rec", "tdom-base", "tdom-rec", "twodom-rec",
        ]

    def test_product_claim_ids(self):
        assert sorted(PRODUCT_CLAIMS) == [
            "rp-2dom", "rp-2dom-equiv", "rp-cdom", "rp-ddom",
            "rp-ddom-c4", "rp-dom", "rp-idom", "rp-tdom",
        ]

    def test_bound_claim_ids(self):
        assert sorted(BOUND_CLAIMS) == [
            "rcdom-bounds", "rcdom-cond-ge", "rcdom-cond-le", "rchain",
            "rdom-bounds", "ridom-bounds", "rtdom-bounds", "rtdom-cond-ge",
            "rtdom-cond-le",
        ]

    def test_level_applicability(self):
        assert FCN_CLAIMS["tdom-base"].applies(1)
        assert not FCN_CLAIMS["tdom-base"].applies(2)
        assert not FCN_CLAIMS["tdom-rec"].applies(1)
        assert FCN_CLAIMS["tdom-rec"].applies(2)


class TestSampling:
    def test_rng_deterministic_per_tag(self):
        a = _rng_for("x", 7).random()
        b = _rng_for("x", 7).random()
        c = _rng_for("y", 7).random()
        assert a == b and a != c

    def test_connected_sampler(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 8), 0.3)
            assert is_connected(g)

    def test_isolate_free_sampler(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_isolate_free_graph(rng, rng.randint(2, 8), 0.3)
            assert all(g.degree(v) > 0 for v in range(g.n))

    def test_plain_sampler_labels(self):
        g = random_graph(random.Random(1), 12, 0.5)
        assert g.labels[0] == "00" and g.labels[-1] == "11"


LEVEL1_EXPECTED = {
    "dom-rec": Verdict.CONFIRMED,
    "idom-rec": Verdict.CONFIRMED,
    "tdom-base": Verdict.CONFIRMED,
    "cdom-rec": Verdict.REFUTED,
    "ddom-base": Verdict.CONFIRMED,
    "twodom-rec": Verdict.CONFIRMED,
    "dim-power": Verdict.CONFIRMED,
    "rdom-rec": Verdict.CONFIRMED,
    "ridom-rec": Verdict.CONFIRMED,
    "rtdom-base": Verdict.CONFIRMED,
    "rcdom-rec": Verdict.REFUTED,
}


class TestFcnClaims:
    @pytest.mark.parametrize("claim_id", sorted(LEVEL1_EXPECTED))
    def test_level1_verdicts(self, claim_id):
        out = check_fcn_claim(claim_id, 1)
        assert out.verdict is LEVEL1_EXPECTED[claim_id], out.note

    def test_cdom_refutation_cites_witness(self):
        out = check_fcn_claim("cdom-rec", 1)
        assert out.formula == 12
        assert out.upper == 8
        assert out.witness is not None and len(out.witness) == 8
        assert "beats the claimed 12" in out.note

    def test_inapplicable_level_rejected(self):
        with pytest.raises(GraphError):
            check_fcn_claim("tdom-base", 2)
        with pytest.raises(GraphError):
            check_fcn_claim("tdom-rec", 1)

    def test_dim_power_level2_confirmed(self):
        out = check_fcn_claim("dim-power", 2)
        assert out.verdict is Verdict.CONFIRMED
        assert out.formula == 16 and out.lower == out.upper == 16
        assert out.certificates == []

    def test_small_budget_leaves_dom_rec_undecided(self):
        out = check_fcn_claim("dom-rec", 2, Budget(max_nodes=5_000))
        assert out.verdict is Verdict.UNDECIDED
        assert out.lower <= 22 <= out.upper
        assert "do not settle" in out.note

    def test_cdom_level2_refuted_by_certificate_despite_budget(self):
        out = check_fcn_claim("cdom-rec", 2, Budget(max_nodes=50_000))
        assert out.verdict is Verdict.REFUTED
        assert out.formula == 52 and out.upper <= 36

    def test_ridom_level2_flags_failing_variant(self):
        out = check_fcn_claim("ridom-rec", 2, Budget(max_nodes=5_000))
        assert "neighborhood fails the property check" in out.note
        twins = [c for c in out.certificates if c["variant"] == "twins"]
        assert twins and twins[0]["verifies"] and twins[0]["size"] == 32

    def test_to_obj_shape(self):
        obj = check_fcn_claim("dom-rec", 1).to_obj()
        assert obj["claim"] == "dom-rec"
        assert obj["verdict"] == "confirmed"
        assert obj["formula"] == 6
        assert set(obj) == {
            "claim", "level", "kind", "formula", "verdict", "lower", "upper",
            "solver_status", "solver_value", "nodes", "certificates",
            "witness", "note",
        }


class TestProductClaims:
    @pytest.mark.parametrize("claim_id", ["rp-dom", "rp-2dom", "rp-ddom-c4"])
    def test_confirmed_on_sample(self, claim_id):
        out = check_product_claim(claim_id, seed=11, instances=10)
        assert out.verdict is Verdict.CONFIRMED
        assert out.violations == []
        assert out.checked + out.vacuous == 10

    def test_equivalence_claim(self):
        out = check_product_claim("rp-2dom-equiv", seed=11, instances=10)
        assert out.verdict is Verdict.CONFIRMED
        assert out.checked + out.vacuous == 10

    def test_deterministic_per_seed(self):
        a = check_product_claim("rp-idom", seed=4, instances=8).to_obj()
        b = check_product_claim("rp-idom", seed=4, instances=8).to_obj()
        assert a == b

    def test_different_seeds_draw_differently(self):
        a = check_product_claim("rp-dom", seed=1, instances=6)
        b = check_product_claim("rp-dom", seed=2, instances=6)
        # node totals track the drawn graphs, which differ with the seed
        assert a.nodes != b.nodes

    def test_unknown_claim_id(self):
        with pytest.raises(KeyError):
            check_product_claim("rp-nope", seed=1, instances=1)


class TestBoundClaims:
    @pytest.mark.parametrize("claim_id", sorted(BOUND_CLAIMS))
    def test_confirmed_on_sample(self, claim_id):
        out = check_bound_claim(claim_id, seed=23, instances=8)
        assert out.verdict in (Verdict.CONFIRMED, Verdict.UNDECIDED)
        assert out.violations == []
        assert out.checked + out.vacuous == 8

    def test_twin_bound(self):
        out = check_twin_bound_claim(seed=23, instances=8)
        assert out.verdict is Verdict.CONFIRMED
        assert out.checked == 8

    def test_extremes_example(self):
        out = check_extremes_example()
        assert out.verdict is Verdict.CONFIRMED
        assert out.claim_id == "extremes-demo"


class TestFullRun:
    def test_report_shape_and_determinism(self):
        kwargs = dict(seed=9, instances=3, levels=(1,), threads=1)
        a = run_all_claims(**kwargs)
        b = run_all_claims(**kwargs)
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
        assert a["seed"] == 9
        assert len(a["fcn"]) == 11  # claims applicable at level 1
        assert len(a["product"]) == 8
        assert len(a["bounds"]) == 11  # 9 inequalities + twin bound + extremes
        s = a["summary"]
        assert s["confirmed"] + s["refuted"] + s["undecided"] == 30
        assert s["refuted"] == 2  # the two level-1 refutations

    def test_no_wall_clock_in_report(self):
        report = run_all_claims(seed=9, instances=2, levels=(1,), threads=1)
        assert "elapsed" not in json.dumps(report)
