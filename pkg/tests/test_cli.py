"""CLI surface: commands, machine reports, exit codes."""

import pytest

from socle.cli import main

FLAT_INSTANCE = """\
[ring]
field = GF(101)
vars = x y
rel = x^2
rel = x*y
rel = y^2
[module M]
row = x, y
"""


@pytest.fixture()
def flat_file(tmp_path):
    path = tmp_path / "flat.ring"
    path.write_text(FLAT_INSTANCE)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_invariants_machine(capsys, flat_file):
    code, out = run(capsys, "invariants", flat_file, "--machine")
    assert code == 0
    lines = dict(l.split("=", 1) for l in out.strip().splitlines())
    assert lines["ring.e"] == "2"
    assert lines["ring.lambda"] == "3"
    assert lines["ring.gorenstein"] == "0"
    assert lines["module.M.length"] == "1"


def test_betti_of_k(capsys, flat_file):
    code, out = run(capsys, "betti", flat_file, "--module", "k",
                    "--to", "5", "--machine")
    assert code == 0
    vals = [int(l.split("=")[1]) for l in out.strip().splitlines()]
    assert vals == [1, 2, 4, 8, 16, 32]


def test_tor_pair(capsys, flat_file):
    code, out = run(capsys, "tor", flat_file, "--left", "M", "--right", "M",
                    "--to", "3", "--machine")
    assert code == 0
    vals = [int(l.split("=")[1]) for l in out.strip().splitlines()]
    assert len(vals) == 4 and all(v >= 0 for v in vals)


def test_ext_matches_tor_of_dual(capsys, flat_file):
    code, out = run(capsys, "ext", flat_file, "--left", "k", "--right", "k",
                    "--to", "3", "--machine")
    assert code == 0
    vals = [int(l.split("=")[1]) for l in out.strip().splitlines()]
    # Ext^i(k,k) has dimension b_i(k) * dim Soc... for m^2=0, e=2:
    # Ext^i(k,k) = Hom(F_i, k) = k^{b_i} since differentials vanish mod m
    assert vals == [1, 2, 4, 8]


def test_check_statement(capsys, flat_file):
    code, out = run(capsys, "check", flat_file, "--statement", "S3",
                    "--machine")
    assert code == 0
    assert "check.S3.status=PASS" in out


def test_check_unknown_statement_is_usage_error(capsys, flat_file):
    code, _ = run(capsys, "check", flat_file, "--statement", "S99")
    assert code == 2


def test_example_agp_machine(capsys):
    code, out = run(capsys, "example", "agp", "--to", "6", "--machine")
    assert code == 0
    lines = dict(l.split("=", 1) for l in out.strip().splitlines())
    assert lines["ring.lambda"] == "8"
    assert lines["ring.e"] == "4"
    assert all(lines[f"betti.M.{i}"] == "2" for i in range(7))
    assert all(lines[f"tor.M.omega.{i}"] == "0" for i in range(1, 7))


def test_example_unknown(capsys):
    code, _ = run(capsys, "example", "nope")
    assert code == 2


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("[ring]\nvars = x\nrel = x^\n")
    code, _ = run(capsys, "invariants", str(bad))
    assert code == 2


def test_missing_file_exit_code(capsys):
    code, _ = run(capsys, "invariants", "/nonexistent/path.ring")
    assert code == 2


def test_explore_cli_deterministic(capsys):
    code, out1 = run(capsys, "explore", "--seed", "4", "--budget", "6",
                     "--to", "5", "--machine")
    assert code == 0
    code, out2 = run(capsys, "explore", "--seed", "4", "--budget", "6",
                     "--to", "5", "--machine")
    assert out1 == out2


def test_explore_budget_zero(capsys):
    code, out = run(capsys, "explore", "--budget", "0", "--machine")
    assert code == 0
    assert "explore.candidates=0" in out


def test_suite_single_statement(capsys, flat_file):
    code, out = run(capsys, "suite", flat_file, "--statement", "S3,S7",
                    "--to", "5", "--machine")
    assert code == 0
    assert "suite.count.FAIL=0" in out


def test_bad_cutoff(capsys, flat_file, monkeypatch):
    monkeypatch.setenv("SOCLE_CUTOFF", "banana")
    code, _ = run(capsys, "invariants", flat_file)
    assert code == 2
