import json

import pytest

from svfrac import gamma_fn
from svfrac.cli import main


def run(tmp_path, *argv):
    return main(list(argv))


@pytest.fixture
def problem_file(tmp_path):
    path = tmp_path / "problem.json"
    path.write_text(
        json.dumps(
            {
                "alpha": 1.5, "t0": 0.0, "T": 1.0, "u0": 0.0, "u1": 0.0,
                "rhs": {"kind": "constant", "params": {"lo": 1.0}},
                "lipschitz_u": 0.0,
            }
        )
    )
    return str(path)


class TestIntegrate:
    def test_builtin_order_one(self, tmp_path):
        out = tmp_path / "g.csv"
        code = main(
            ["integrate", "--builtin", "sym_linear", "--rho", "1", "--grid", "4",
             "--output", str(out)]
        )
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "u,lo,hi"
        rows = [line.split(",") for line in lines[1:]]
        us = [float(r[0]) for r in rows]
        assert us == [0.0, 0.25, 0.5, 0.75, 1.0]
        for r in rows:
            u, lo, hi = map(float, r)
            assert abs(hi - u**2 / 2) < 1e-12 and abs(lo + u**2 / 2) < 1e-12

    def test_rho_zero_is_parameter_error(self, tmp_path, capsys):
        out = tmp_path / "never.csv"
        code = main(["integrate", "--rho", "0", "--output", str(out)])
        assert code == 3
        assert not out.exists()  # no result written on parameter error
        assert "rho" in capsys.readouterr().err

    def test_half_order_final_row(self, tmp_path):
        out = tmp_path / "g.csv"
        assert main(
            ["integrate", "--builtin", "sym_linear", "--rho", "0.5", "--grid", "256",
             "--output", str(out)]
        ) == 0
        last = out.read_text().strip().split("\n")[-1].split(",")
        expected = 1.0 / gamma_fn(2.5)
        assert abs(float(last[1]) + expected) < 1e-9
        assert abs(float(last[2]) - expected) < 1e-9

    def test_malformed_map_spec(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["integrate", "--rho", "1", "--input", str(bad)]) == 2

    def test_json_format(self, tmp_path):
        out = tmp_path / "g.json"
        assert main(
            ["integrate", "--builtin", "constant", "--rho", "1", "--grid", "4",
             "--format", "json", "--output", str(out)]
        ) == 0
        obj = json.loads(out.read_text())
        assert obj["segments"] == 4


class TestVerify:
    def test_default_run_passes(self, tmp_path):
        out = tmp_path / "report.json"
        code = main(["verify", "--grid", "24", "--output", str(out)])
        assert code == 0
        reports = json.loads(out.read_text())
        assert {r["theorem"] for r in reports} >= {"3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7/3.8"}
        assert all(r["pass"] for r in reports)

    def test_restricted_rho_skips_inheritance_theorems(self, tmp_path):
        out = tmp_path / "report.json"
        assert main(["verify", "--grid", "16", "--rho", "0.5", "--output", str(out)]) == 0
        reports = json.loads(out.read_text())
        skipped = [r for r in reports if r["status"] == "skipped (requires rho>1)"]
        assert {r["theorem"] for r in skipped} == {"3.5", "3.6", "3.7/3.8"}

    def test_corrupted_fixture_file(self, tmp_path):
        bad = tmp_path / "fixtures.json"
        bad.write_text('{"broken": {"a": 0}}')
        assert main(["verify", "--input", str(bad)]) == 2

    def test_determinism_byte_identical(self, tmp_path):
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        args = ["verify", "--grid", "16", "--rho", "1.5", "--seed", "42"]
        assert main(args + ["--output", str(out1)]) == 0
        assert main(args + ["--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestInclusion:
    def test_constant_fixture(self, tmp_path, problem_file, capsys):
        out = tmp_path / "traj.csv"
        code = main(
            ["inclusion", "--input", problem_file, "--grid", "256", "--output", str(out)]
        )
        assert code == 0
        last = out.read_text().strip().split("\n")[-1].split(",")
        assert abs(float(last[1]) - 1.0 / gamma_fn(2.5)) < 1e-6
        assert "iterations_used" in capsys.readouterr().err

    def test_alpha_out_of_range(self, tmp_path, problem_file):
        out = tmp_path / "never.csv"
        code = main(
            ["inclusion", "--input", problem_file, "--alpha", "2.5", "--output", str(out)]
        )
        assert code == 3
        assert not out.exists()

    def test_symmetric_rhs_midpoint_single_iteration(self, tmp_path, capsys):
        path = tmp_path / "sym.json"
        path.write_text(
            json.dumps(
                {
                    "alpha": 1.5, "t0": 0.0, "T": 1.0, "u0": 0.0, "u1": 1.0,
                    "rhs": {"kind": "symmetric", "params": {"k": 2.0}},
                }
            )
        )
        out = tmp_path / "traj.csv"
        assert main(
            ["inclusion", "--input", str(path), "--policy", "midpoint",
             "--grid", "32", "--output", str(out)]
        ) == 0
        assert "iterations_used=1" in capsys.readouterr().err
        rows = out.read_text().strip().split("\n")[1:]
        for row in rows:
            t, u = map(float, row.split(","))
            assert abs(u - t) < 1e-12

    def test_nonconvergence_exit_code(self, tmp_path):
        path = tmp_path / "diverge.json"
        path.write_text(
            json.dumps(
                {
                    "alpha": 1.5, "t0": 0.0, "T": 1.0, "u0": 1.0, "u1": 0.0,
                    "rhs": {"kind": "affine", "params": {"p": 10.0}},
                    "lipschitz_u": 10.0,
                }
            )
        )
        with pytest.warns(UserWarning):
            code = main(
                ["inclusion", "--input", str(path), "--grid", "32", "--max-iter", "5"]
            )
        assert code == 4

    def test_funnel_output(self, tmp_path, problem_file):
        out = tmp_path / "funnel.csv"
        assert main(
            ["inclusion", "--input", problem_file, "--funnel", "--grid", "64",
             "--output", str(out)]
        ) == 0
        assert out.read_text().startswith("t,lo,hi\n")


class TestBoundsAndSelections:
    def test_bounds_values(self, tmp_path):
        out = tmp_path / "bounds.json"
        assert main(
            ["bounds", "--rho", "1.5", "--M", "1", "--a", "0", "--b", "1",
             "--output", str(out)]
        ) == 0
        obj = json.loads(out.read_text())
        assert abs(obj["bound_L0"] - 1.0 / gamma_fn(1.5)) < 1e-12
        assert abs(obj["bound_sup"] - 1.0 / (gamma_fn(1.5) * 1.5)) < 1e-12

    def test_bounds_invalid_parameters(self):
        assert main(["bounds", "--rho", "-1", "--M", "1"]) == 3

    def test_selection_certificates(self, tmp_path):
        out = tmp_path / "certs.json"
        assert main(
            ["selections", "--builtin", "sym_linear", "--rho", "1.5", "--grid", "16",
             "--output", str(out)]
        ) == 0
        certs = json.loads(out.read_text())
        kinds = {c["kind"] for c in certs}
        assert kinds == {"lower-extremal", "upper-extremal", "midpoint"}
        assert all(c["membership_checked"] for c in certs)
