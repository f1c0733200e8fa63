"""Command line behavior and exit codes.

Exit code contract: 0 success/confirmed/valid, 1 refuted or invalid,
2 usage or input error, 3 bounds-only or undecided.
"""

import json

import pytest

from fcnlab.cli import main
from fcnlab.generators import fcn
from fcnlab.serialize import graph_digest


class TestGenerate:
    def test_json_to_stdout(self, capsys):
        assert main(["generate", "fcn", "0"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["name"] == "FCN0" and obj["n"] == 4

    def test_edges_format(self, capsys):
        assert main(["generate", "cycle", "3"]) == 0
        capsys.readouterr()
        assert main(["generate", "cycle", "3", "--format", "edges"]) == 0
        out = capsys.readouterr().out
        assert "0 1" in out and "{" not in out

    def test_dot_format(self, capsys):
        assert main(["generate", "path", "2", "--format", "dot"]) == 0
        assert "--" in capsys.readouterr().out

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "g.json"
        assert main(["generate", "fcn", "1", "-o", str(target)]) == 0
        assert capsys.readouterr().out == ""
        obj = json.loads(target.read_text())
        assert obj["n"] == 16

    def test_file_spec_roundtrip(self, tmp_path, capsys):
        target = tmp_path / "g.json"
        main(["generate", "cycle", "6", "-o", str(target)])
        capsys.readouterr()
        assert main(["solve", "dom", str(target)]) == 0
        assert "value   2" in capsys.readouterr().out

    def test_bad_size(self, capsys):
        assert main(["generate", "cycle", "1"]) == 2


class TestProduct:
    def test_product_json(self, capsys):
        assert main(["product", "cycle:4", "fcn:0", "--root", "10"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["n"] == 16
        assert "0:00" in obj["labels"]

    def test_bad_root(self, capsys):
        assert main(["product", "cycle:4", "fcn:0", "--root", "99"]) == 2

    def test_bad_spec(self, capsys):
        assert main(["product", "blob:4", "fcn:0", "--root", "10"]) == 2


class TestSolve:
    def test_exact_text(self, capsys):
        assert main(["solve", "dom", "cycle:6"]) == 0
        out = capsys.readouterr().out
        assert "exact" in out and "value   2" in out

    def test_exact_json(self, capsys):
        assert main(["solve", "dim", "fcn:1", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["value"] == 4 and obj["status"] == "exact"
        assert len(obj["witness"]) == 4
        assert obj["digest"] == graph_digest(fcn(1))
        assert "elapsed" not in obj

    def test_bounds_exit_code(self, capsys):
        assert main(["solve", "dom", "fcn:2", "--budget-nodes", "100", "--json"]) == 3
        obj = json.loads(capsys.readouterr().out)
        assert obj["status"] == "bounds" and obj["value"] is None

    def test_infeasible_is_a_definite_answer(self, capsys):
        assert main(["solve", "tdom", "path:1"]) == 0
        assert "no set of any size" in capsys.readouterr().out

    def test_unknown_kind(self, capsys):
        assert main(["solve", "chromatic", "cycle:4"]) == 2

    def test_exhaustive_ceiling(self, capsys):
        assert main(["solve", "dom", "cycle:21", "--exhaustive"]) == 2


class TestVerify:
    def test_valid_set(self, capsys):
        assert main(["verify", "dom", "cycle:4", "--set", "0,2"]) == 0
        assert "valid" in capsys.readouterr().out

    def test_invalid_set_explains(self, capsys):
        assert main(["verify", "dom", "cycle:4", "--set", "0"]) == 1
        assert "INVALID" in capsys.readouterr().out

    def test_unknown_member(self, capsys):
        assert main(["verify", "dom", "cycle:4", "--set", "0,9"]) == 2

    def test_missing_set_and_cert(self, capsys):
        assert main(["verify", "dom", "cycle:4"]) == 2

    def test_qddom_pair(self, capsys):
        assert main(["verify", "qddom", "cycle:4", "--u", "", "--v", "0,1,2"]) == 0
        capsys.readouterr()
        assert main(["verify", "qddom", "cycle:4", "--u", "0", "--v", "0,1"]) == 1

    def test_qddom_rejects_plain_set(self, capsys):
        assert main(["verify", "qddom", "cycle:4", "--set", "0,1,2"]) == 2

    def test_cert_roundtrip(self, tmp_path, capsys):
        cert_file = tmp_path / "c.json"
        assert main(["construct", "dom", "1", "-o", str(cert_file)]) == 0
        capsys.readouterr()
        assert main(["verify", "dom", "fcn:1", "--cert", str(cert_file)]) == 0

    def test_cert_digest_mismatch(self, tmp_path, capsys):
        cert_file = tmp_path / "c.json"
        main(["construct", "dom", "1", "-o", str(cert_file)])
        capsys.readouterr()
        assert main(["verify", "dom", "fcn:2", "--cert", str(cert_file)]) == 2
        assert "digest" in capsys.readouterr().err

    def test_cert_kind_mismatch(self, tmp_path, capsys):
        cert_file = tmp_path / "c.json"
        main(["construct", "dom", "1", "-o", str(cert_file)])
        capsys.readouterr()
        assert main(["verify", "idom", "fcn:1", "--cert", str(cert_file)]) == 2


class TestConstruct:
    def test_emits_certificate(self, capsys):
        assert main(["construct", "tdom", "1", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["kind"] == "tdom" and len(obj["vertices"]) == 8

    def test_check_pass(self, capsys):
        assert main(["construct", "ddom", "2", "--check"]) == 0

    def test_check_failure_still_emits(self, capsys):
        code = main(["construct", "ridom", "2", "--variant", "neighborhood", "--check"])
        captured = capsys.readouterr()
        assert code == 1
        assert "fails its property" in captured.err
        obj = json.loads(captured.out)
        assert len(obj["vertices"]) == 36

    def test_no_rule(self, capsys):
        assert main(["construct", "dim", "1"]) == 2

    def test_bad_variant(self, capsys):
        assert main(["construct", "dom", "1", "--variant", "twins"]) == 2


class TestCheck:
    def test_confirmed_claim(self, capsys):
        assert main(["check", "dom-rec", "--level", "1"]) == 0
        assert "confirmed" in capsys.readouterr().out

    def test_refuted_claim(self, capsys):
        assert main(["check", "cdom-rec", "--level", "1", "--json"]) == 1
        obj = json.loads(capsys.readouterr().out)
        assert obj["verdict"] == "refuted"
        assert obj["formula"] == 12 and obj["upper"] == 8

    def test_undecided_within_budget(self, capsys):
        assert main(["check", "dom-rec", "--level", "2", "--budget-nodes", "5000"]) == 3

    def test_fcn_claim_needs_level(self, capsys):
        assert main(["check", "dom-rec"]) == 2

    def test_sampled_claim_needs_seed(self, capsys):
        assert main(["check", "rp-dom"]) == 2
        assert "--seed" in capsys.readouterr().err

    def test_sampled_claim_runs(self, capsys):
        assert main(["check", "rp-dom", "--seed", "3", "--instances", "6"]) == 0
        assert "confirmed" in capsys.readouterr().out

    def test_bound_claim_runs(self, capsys):
        assert main(["check", "rchain", "--seed", "3", "--instances", "5", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["checked"] + obj["vacuous"] == 5

    def test_extremes_demo_needs_no_seed(self, capsys):
        assert main(["check", "extremes-demo"]) == 0

    def test_unknown_claim_lists_known(self, capsys):
        assert main(["check", "nonsense"]) == 2
        assert "dom-rec" in capsys.readouterr().err


class TestTable:
    def test_level1_registry(self, capsys):
        code = main(["table", "--seed", "5", "--instances", "2", "--levels", "1"])
        out = capsys.readouterr().out
        # level 1 contains two refuted closed forms, so the run exits 1
        assert code == 1
        assert "2 refuted" in out
        assert "cdom-rec" in out and "rp-dom" in out and "extremes-demo" in out

    def test_json_report(self, capsys):
        code = main(["table", "--seed", "5", "--instances", "2", "--levels", "1", "--json"])
        obj = json.loads(capsys.readouterr().out)
        assert code == 1
        assert obj["summary"]["refuted"] == 2
        assert len(obj["fcn"]) == 11

    def test_seed_required(self, capsys):
        with pytest.raises(SystemExit):
            main(["table", "--instances", "2"])
