"""CLI surface: every subcommand, exit codes, determinism."""

import io
import json
import sys

import pytest

from metabelian.cli import main


@pytest.fixture()
def bs_file(tmp_path):
    from _helpers import BS2
    path = tmp_path / "bs2.json"
    path.write_text(BS2.render())
    return str(path)


def run(argv):
    captured = io.StringIO()
    old = sys.stdout
    sys.stdout = captured
    try:
        code = main(argv)
    finally:
        sys.stdout = old
    return code, captured.getvalue()


class TestCommands:
    def test_solve(self, bs_file):
        code, out = run(["solve", "-p", bs_file, "-w", "t*a*t^-1*a^-2"])
        assert code == 0
        doc = json.loads(out)
        assert doc["identity"] is True

    def test_norm_growth_rows(self):
        code, out = run(["norm-growth", "-f", "1+t", "-n", "5"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,norm"
        assert [l.split(",")[1] for l in lines[1:]] == ["2", "4", "8", "16", "32"]

    def test_constants(self, bs_file):
        code, out = run(["constants", "-p", bs_file])
        assert code == 0
        doc = json.loads(out)
        assert doc["C"] == "1" and doc["D"] == "1" and doc["r0"] == "0.5"
        assert doc["R"] == "undefined" and "diagnostic" in doc

    def test_groebner(self, bs_file):
        code, out = run(["groebner", "-p", bs_file])
        assert code == 0
        doc = json.loads(out)
        assert doc["generators"]

    def test_nf_and_member(self, bs_file):
        code, out = run(["nf", "-p", bs_file, "-e", "(t^-1 - 2)*a"])
        assert code == 0 and json.loads(out)["is_zero"] is True
        code, out = run(["member", "-p", bs_file, "-e", "(t^-2 - 4)*a"])
        assert code == 0
        doc = json.loads(out)
        assert doc["member"] is True and doc["certificate"]["size"] == "3"

    def test_area_and_rel_area(self, bs_file):
        code, out = run(["area", "-p", bs_file, "-w", "t*a*t^-1*a^-2"])
        assert code == 0 and json.loads(out)["identity"] is True
        code, out = run(["rel-area", "-p", bs_file, "-w", "t*a*t^-1*a^-2"])
        assert code == 0
        assert int(json.loads(out)["witnessed_relative"]) <= 4

    def test_oracle(self, bs_file):
        code, out = run(["oracle", "-p", bs_file, "-e", "(t^-2 - 4)*a",
                         "--budget", "3,4,6"])
        assert code == 0
        doc = json.loads(out)
        assert doc["minimal_size"] == 3 and doc["conclusive"] is True

    def test_module_dehn(self, bs_file):
        code, out = run(["module-dehn", "-p", bs_file, "-n", "5"])
        assert code == 0
        assert out.splitlines()[1] == "norm,max_cert_size"

    def test_profile_with_preset(self):
        code, out = run(["profile", "--preset", "bs", "--n", "2", "-n", "4",
                         "--samples", "2", "--seed", "5"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1] == "n,max_witnessed,max_cert_size,bound"
        assert len(lines) == 5

    def test_preset_emission_parses(self):
        code, out = run(["preset", "wf", "--r", "1", "--k", "1", "--f", "1,1"])
        assert code == 0
        from metabelian.presentation import parse_presentation
        parse_presentation(out)


class TestDeterminism:
    def test_profile_byte_identical(self):
        a = run(["profile", "--preset", "bs", "--n", "2", "-n", "5",
                 "--samples", "3", "--seed", "7"])
        b = run(["profile", "--preset", "bs", "--n", "2", "-n", "5",
                 "--samples", "3", "--seed", "7"])
        assert a == b

    def test_solve_byte_identical(self, bs_file):
        a = run(["solve", "-p", bs_file, "-w", "t^3*a*t^-3*a^-8"])
        b = run(["solve", "-p", bs_file, "-w", "t^3*a*t^-3*a^-8"])
        assert a == b


class TestExitCodes:
    def test_missing_file(self):
        code, _ = run(["solve", "-p", "/nonexistent.json", "-w", "a"])
        assert code == 2

    def test_bad_word(self, bs_file):
        code, _ = run(["solve", "-p", bs_file, "-w", "q*q"])
        assert code == 2

    def test_bad_element(self, bs_file):
        code, _ = run(["nf", "-p", bs_file, "-e", "(("])
        assert code == 2

    def test_area_of_non_identity(self, bs_file):
        code, _ = run(["area", "-p", bs_file, "-w", "a"])
        assert code == 2

    def test_bad_budget(self, bs_file):
        code, _ = run(["oracle", "-p", bs_file, "-e", "a", "--budget", "1,2"])
        assert code == 2
