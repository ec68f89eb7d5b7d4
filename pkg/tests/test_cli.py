from __future__ import annotations

import json
import subprocess
import sys

import pytest

from domcolor.cli import main
from domcolor.formats import parse_graph6


@pytest.fixture
def files(tmp_path):
    (tmp_path / "c4.g6").write_text("Cl\n")
    (tmp_path / "k2.g6").write_text("A_\n")
    (tmp_path / "p2.txt").write_text("2 0\n0 1\n")
    (tmp_path / "bad.g6").write_text("C\n")
    (tmp_path / "k1.g6").write_text("@\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_chi_d(files, capsys):
    code, out, _ = run(capsys, "invariant", "chi-d", "--input", files / "c4.g6")
    assert code == 0 and out == "chi_d = 2\n"
    code, out, _ = run(capsys, "invariant", "chi-d", "--input", files / "c4.g6", "--witness")
    assert out.splitlines()[1:] == ["0: 0", "1: 1", "2: 0", "3: 1"]


def test_invariant_json(files, capsys):
    code, out, _ = run(capsys, "invariant", "chi-dom", "--input", files / "c4.g6", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["invariant"] == "chi_dom" and doc["value"] == 2


def test_invariant_indicator_with_root(files, capsys):
    code, out, _ = run(capsys, "invariant", "indicator", "--input", f"{files / 'k2.g6'}@0")
    assert code == 0 and out.strip() == "I = 0"


def test_product_edge_corona(files, capsys):
    code, out, _ = run(capsys, "product", "edge-corona", "--g", files / "c4.g6", "--h", files / "k2.g6", "--out", "g6")
    g = parse_graph6(out)
    assert code == 0 and (g.n, g.m) == (12, 24)


def test_product_hierarchical(files, capsys):
    code, out, _ = run(capsys, "product", "hierarchical", "--factor", files / "p2.txt", "--factor", files / "p2.txt",
                       "--out", "edges")
    assert code == 0 and out.splitlines()[0] == "4 0"


def test_color_dominator(files, capsys):
    code, out, _ = run(capsys, "color", "dominator", "--input", files / "c4.g6", "--witness")
    assert code == 0 and out.splitlines()[0] == "k = 2"


def test_parse_info(files, capsys):
    code, out, _ = run(capsys, "parse", files / "p2.txt", "--out", "g6", "--info")
    assert code == 0 and out.splitlines()[0] == "A_" and "is_bipartite = True" in out


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "random_tree", "--n", 6, "--seed", 1)
    again = run(capsys, "generate", "random_tree", "--n", 6, "--seed", 1)[1]
    assert code == 0 and out == again and parse_graph6(out).m == 5


def test_verify_corona_dominator(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "corona-dominator", "--max-n", 4, "--seed", 7, "--workers", 1,
                       "--out", report)
    doc = json.loads(report.read_text())
    assert code == 0 and doc["violations"] == 0 and "violations: 0" in out


def test_verify_violation_exit_code(tmp_path, capsys):
    report = tmp_path / "r.csv"
    code, out, _ = run(capsys, "verify", "cycle-dominated", "--workers", 1, "--out", report)
    assert code == 2 and "VIOLATED cycle-dominated k=3" in out
    assert report.read_text().splitlines()[0] == "theorem,instance,lhs,rhs,verdict"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["verify", "no-such-theorem"], 3),
        (["invariant", "nope", "--input", "x"], 3),
        (["product", "corona"], 3),
        ([], 3),
        (["verify", "konig", "--max-n", "0"], 3),
    ],
)
def test_usage_errors(argv, code, capsys):
    assert main(argv) == code
    assert capsys.readouterr().err


def test_parse_error_exit(files, capsys):
    code, _, err = run(capsys, "parse", files / "bad.g6")
    assert code == 4 and "parse error" in err


def test_undefined_invariant_exit(files, capsys):
    code, _, err = run(capsys, "invariant", "chi-dom", "--input", files / "k1.g6")
    assert code == 3 and "isolated" in err


def test_budget_exit_and_precedence(files, capsys, monkeypatch):
    big = files / "big.g6"
    from domcolor.formats import to_graph6
    from domcolor.generators import random_gnp

    big.write_text(to_graph6(random_gnp(14, 0.5, 1)) + "\n")
    monkeypatch.setenv("DOMCOLOR_BUDGET", "2")
    assert run(capsys, "invariant", "chi", "--input", big)[0] == 5
    assert run(capsys, "invariant", "chi", "--input", big, "--budget", 10**6)[0] == 0
    monkeypatch.setenv("DOMCOLOR_BUDGET", "oops")
    assert run(capsys, "invariant", "chi", "--input", big)[0] == 3


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "domcolor", "invariant", "chi", "--input", str(files / "c4.g6")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "chi = 2\n"
