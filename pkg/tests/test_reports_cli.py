"""Report determinism, JSON schema, suite orchestration and the CLI."""

import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from mhv.cli import main
from mhv.lsa import EpsMode
from mhv.reports import Failure, Report, reports_to_json
from mhv.suite import CHECK_ORDER, RunConfig, run_suite


class TestReports:
    def test_schema_fields(self):
        r = Report("demo", 3, "symbolic", 10,
                   [Failure("(d(1), d(2))", "eq", "d(3)")])
        doc = r.to_dict()
        assert doc["schema"] == 1
        assert list(doc) == ["schema", "check", "window", "eps_mode",
                             "total_cases", "passed", "failures"]
        assert doc["passed"] is False

    def test_failures_sorted(self):
        r = Report("demo", 3, "symbolic", 2,
                   [Failure("(d(2))", "b", "0"), Failure("(d(1))", "a", "0")])
        assert [f.inputs for f in r.sorted().failures] == ["(d(1))", "(d(2))"]

    def test_evaluated_at_maps_residuals(self):
        r = Report("demo", 3, "symbolic", 1,
                   [Failure("(d(2), d(1))", "eq",
                            "((1+e)/(1+3*e))*d(3)")])
        ev = r.evaluated_at(Fraction(1, 5))
        assert ev.eps_mode == "eps=1/5"
        assert ev.failures[0].residual == "3/4*d(3)"

    def test_evaluated_at_leaves_free_text(self):
        r = Report("demo", 3, "symbolic", 1,
                   [Failure("w", "eq", "rank 4 < 5: nope")])
        assert r.evaluated_at(Fraction(1, 5)).failures[0].residual \
            == "rank 4 < 5: nope"

    def test_json_byte_determinism(self):
        a = run_suite(RunConfig(window=2, checks=("jacobi", "solve-theta")))
        b = run_suite(RunConfig(window=2, checks=("jacobi", "solve-theta")))
        assert reports_to_json(a) == reports_to_json(b)


class TestSuite:
    def test_jacobi_case_count_formula(self):
        # full-mode basis of window 4 has 2*9+2 = 20 vectors
        reports = run_suite(RunConfig(window=4, checks=("jacobi",)))
        assert reports[0].total_cases == 20**3
        assert reports[0].passed

    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError):
            RunConfig(window=2, checks=("nonsense",))

    def test_numeric_run_is_evaluated_symbolic(self):
        sym = run_suite(RunConfig(window=2))
        eps = Fraction(2, 5)
        num = run_suite(RunConfig(window=2, eps=EpsMode.numeric(eps)))
        assert reports_to_json([r.evaluated_at(eps) for r in sym]) \
            == reports_to_json(num)

    def test_inadmissible_eps_refused(self):
        from mhv.lsa import AdmissibilityError
        with pytest.raises(AdmissibilityError):
            run_suite(RunConfig(window=3, eps=EpsMode.numeric(Fraction(-1, 2)),
                                checks=("lsa-identity",)))

    def test_reciprocal_outside_window_admissible(self):
        reports = run_suite(RunConfig(window=3,
                                      eps=EpsMode.numeric(Fraction(1, 7)),
                                      checks=("lsa-identity",)))
        assert reports[0].passed
        assert reports[0].eps_mode == "eps=1/7"

    def test_workers_do_not_change_output(self):
        cfg = RunConfig(window=2, checks=("jacobi", "lsa-identity"))
        serial = reports_to_json(run_suite(cfg, workers=1))
        parallel = reports_to_json(run_suite(cfg, workers=3))
        assert serial == parallel


class TestCli:
    def run(self, capsys, *argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    def test_bracket(self, capsys):
        code, out, _ = self.run(capsys, "bracket", "d(2)", "d(-2)",
                                "--format", "text")
        assert code == 0
        assert out.strip() == "4*d(0) + 1/2*c"

    def test_bracket_centerless(self, capsys):
        code, out, _ = self.run(capsys, "bracket", "d(2)", "d(-2)",
                                "--centerless", "--format", "text")
        assert out.strip() == "4*d(0)"

    def test_bracket_json(self, capsys):
        code, out, _ = self.run(capsys, "bracket", "d(2)", "d(1)")
        assert json.loads(out) == {"schema": 1, "result": "d(3)"}

    def test_lsa_mul(self, capsys):
        code, out, _ = self.run(capsys, "lsa-mul", "d(2)", "d(1)",
                                "--format", "text")
        assert out.strip() == "((-1-e)/(1+3*e))*d(3)"

    def test_lsa_mul_numeric(self, capsys):
        code, out, _ = self.run(capsys, "lsa-mul", "d(2)", "d(1)",
                                "--eps", "1/5", "--format", "text")
        assert out.strip() == "-3/4*d(3)"

    def test_lsa_mul_pole(self, capsys):
        code, _, err = self.run(capsys, "lsa-mul", "d(-3)", "d(-4)",
                                "--eps", "1/7")
        assert code == 2
        assert "d(-3)*d(-4)" in err

    def test_parse_error_exit(self, capsys):
        code, _, err = self.run(capsys, "bracket", "h(2/2)", "d(0)")
        assert code == 2
        assert "odd half" in err

    def test_verify_json(self, capsys):
        code, out, _ = self.run(capsys, "verify", "--window", "2",
                                "--checks", "jacobi,antisym")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert [r["check"] for r in doc["reports"]] == ["jacobi", "antisym"]
        assert all(r["passed"] for r in doc["reports"])

    def test_verify_inadmissible(self, capsys):
        code, _, err = self.run(capsys, "verify", "--window", "3",
                                "--eps=-1/2", "--checks", "lsa-identity")
        assert code == 2
        assert "not admissible" in err

    def test_lsa_check_numeric(self, capsys):
        code, out, _ = self.run(capsys, "lsa-check", "--window", "2",
                                "--eps", "1/7")
        assert code == 0
        doc = json.loads(out)
        assert doc["reports"][0]["check"] == "lsa-identity"
        assert doc["reports"][0]["passed"]

    def test_solve_theta(self, capsys):
        code, out, _ = self.run(capsys, "solve-theta", "--window", "3")
        assert code == 0
        doc = json.loads(out)
        extra = doc["reports"][0]["extra"]
        assert extra["theta"]["1"] == "3/4"
        assert extra["rank"] == extra["unknowns"]

    def test_bider_check(self, capsys):
        code, out, _ = self.run(capsys, "bider-check", "--lambda", "2",
                                "--omega", "1=1,-2=3/4", "--window", "2")
        assert code == 0
        assert json.loads(out)["reports"][0]["passed"]

    def test_bider_check_full_mode_exposes_obstruction(self, capsys):
        code, out, _ = self.run(capsys, "bider-check", "--lambda", "0",
                                "--omega", "0=1", "--window", "2", "--full")
        assert code == 1
        assert not json.loads(out)["reports"][0]["passed"]

    def test_postlie_grid(self, capsys):
        code, out, _ = self.run(capsys, "postlie-grid", "--window", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["reports"][0]["extra"]["passing_points"] \
            == ["lambda=0, omega={}"]

    def test_installed_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mhv.cli", "bracket", "h(1/2)", "h(-1/2)",
             "--format", "text"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.strip() == "1/2*l"
