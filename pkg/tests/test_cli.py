from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from treeoperads.cli import lincomb_from_json, lincomb_to_json, main, parse_lincomb, render_lincomb
from treeoperads.operads import blambda_compose
from treeoperads.syntax import parse_tree, tree_from_json

EX_S = "a:1[b:3[c:2, d:1]]"
EX_T = "e:1[h:2]"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_prelie(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "prelie", "compose(a[b], a, c[d])")
    assert code == 0
    assert out.strip() == "1 * c[b,d] + 1 * c[d[b]]"


def test_eval_blambda_example(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "blambda", "--lambda", "symbolic", f"compose({EX_S}, b, {EX_T})")
    assert code == 0
    terms = out.strip().split(" + ")
    assert len(terms) == 6
    assert sorted(t.split(" * ")[0] for t in terms) == ["1", "1", "1", "L", "L^2", "L^3"]


def test_eval_mismatch_is_zero(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "olambda", f"compose({EX_S}, b, e:1[h:1])")
    assert (code, out.strip()) == (0, "0")


def test_eval_rational_lambda(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "olambda", "--lambda", "1/2", f"compose({EX_S}, b, {EX_T})")
    assert code == 0
    assert sorted(t.split(" * ")[0] for t in out.strip().split(" + ")) == ["1", "1/2", "1/4", "1/8"]


def test_eval_star_and_phi(capsys):
    assert run(capsys, "eval", "star(r[t], s)")[1].strip() == "1 * r[s,t] + 1 * r[t,s]"
    assert run(capsys, "eval", "phi(a[b,c])")[1].strip() == "1 * a[b,c] + 1 * a[c,b]"


def test_eval_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "eval", "--kind", "nap", "-", stdin="compose(a[b], a, c[d])\n", monkeypatch=monkeypatch)
    assert (code, out.strip()) == (0, "1 * c[b,d]")


def test_eval_json_and_dot(capsys):
    code, out, _ = run(capsys, "eval", "--output", "json", "--kind", "blambda", f"compose({EX_S}, b, {EX_T})")
    data = json.loads(out)
    assert data["mode"] == "planar" and len(data["terms"]) == 6
    assert lincomb_from_json(data) == blambda_compose(parse_tree(EX_S, "planar"), "b", parse_tree(EX_T, "planar"))
    code, out, _ = run(capsys, "eval", "--output", "dot", "compose(a[b], a, c[d])")
    assert out.count("digraph") == 2 and 'label="1"' in out


@pytest.mark.parametrize(
    "expr",
    ["compose(a[b], z, c)", "compose(a[b, a, c)", "frob(a)", "phi(a) junk", "compose(a[b], a, b)"],
)
def test_eval_errors_exit_2(capsys, expr):
    code, _, err = run(capsys, "eval", expr)
    assert code == 2 and "error" in err


def test_eval_bad_lambda(capsys):
    assert run(capsys, "eval", "--lambda", "0.5", "phi(a)")[0] == 2


def test_axioms_pass(capsys):
    code, out, _ = run(capsys, "axioms", "nested", "--kind", "blambda", "--max-vertices", "4", "--no-timing")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["failures"] == [] and report["elapsed_ms"] == 0


def test_axioms_star(capsys):
    code, out, _ = run(capsys, "axioms", "star", "--max-vertices", "4")
    assert code == 0 and json.loads(out)["cases_run"] > 0


def test_axioms_all_small(capsys):
    code, out, _ = run(capsys, "axioms", "all", "--kind", "blambda", "--max-vertices", "4", "--max-weight", "4")
    reports = json.loads(out)
    assert code == 0 and len(reports) >= 8 and all(r["passed"] for r in reports)


def test_axioms_graded(capsys):
    code, out, _ = run(capsys, "axioms", "graded", "--kind", "nap", "--max-vertices", "3", "--semigroup", "Z3")
    assert code == 0 and json.loads(out)["passed"]


def test_axioms_usage_errors(capsys):
    assert run(capsys, "axioms", "nested", "--kind", "prelie", "--max-vertices", "0")[0] == 2
    assert run(capsys, "axioms", "nonsense")[0] == 2
    assert run(capsys, "axioms", "nested", "--kind", "nonsense")[0] == 2
    assert run(capsys)[0] == 2


def test_axioms_byte_identical(capsys):
    argv = ("axioms", "all", "--kind", "nap", "--max-vertices", "3", "--no-timing")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--mode", "nonplanar", "--labels", "a,b,c")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "count: 9" and len(lines) == 10
    assert run(capsys, "enumerate", "--mode", "planar", "--labels", "a,b,c")[1].strip().endswith("count: 12")
    assert run(capsys, "enumerate", "--mode", "weighted-shapes", "--max-weight", "3")[1].strip().endswith("count: 8")
    assert run(capsys, "enumerate", "--mode", "nonplanar", "-n", "4")[1].strip().endswith("count: 64")
    out = run(capsys, "enumerate", "--mode", "nonplanar", "--labels", "a,b", "--max-weight", "3")[1]
    assert out.strip().endswith("count: 6")


def test_enumerate_errors(capsys):
    assert run(capsys, "enumerate", "--mode", "planar")[0] == 2
    assert run(capsys, "enumerate", "--mode", "planar", "-n", "0")[0] == 2
    assert run(capsys, "enumerate", "--mode", "weighted-shapes", "--max-weight", "0")[0] == 2
    assert run(capsys, "enumerate", "--mode", "planar", "--labels", "a,a")[0] == 2


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--format", "dot", "a")
    assert code == 0 and out.count('[label="a:1"]') == 1 and "->" not in out
    out = run(capsys, "export", "--format", "dot", "--mode", "planar", "a[b,c]")[1]
    assert '"a" -> "b" [order=0];' in out and '"a" -> "c" [order=1];' in out


def test_export_json_round_trip(capsys, monkeypatch):
    out = run(capsys, "export", "--format", "json", "--mode", "planar", "a:2[c, b:3[d]]")[1]
    assert parse_tree("a:2[c, b:3[d]]", "planar") == tree_from_json(out, "planar")
    again = run(capsys, "export", "--format", "json", "--mode", "planar", "-", stdin=out, monkeypatch=monkeypatch)[1]
    assert json.loads(again) == json.loads(out)


def test_export_lincomb(capsys):
    code, out, _ = run(capsys, "export", "--format", "json", "(1 + 2*L^2) * a[b] + -1/3 * b[a]")
    data = json.loads(out)
    assert code == 0 and len(data["terms"]) == 2
    assert {tuple(sorted(t["coeff"].items())) for t in data["terms"]} == {(("0", "1"), ("2", "2")), (("0", "-1/3"),)}


def test_export_parse_error(capsys):
    assert run(capsys, "export", "a[")[0] == 2


def test_lincomb_text_round_trip():
    x = blambda_compose(parse_tree(EX_S, "planar"), "b", parse_tree(EX_T, "planar"))
    assert parse_lincomb(render_lincomb(x), "planar") == x
    assert lincomb_from_json(lincomb_to_json(x)) == x
    assert parse_lincomb("0").is_zero()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "treeoperads", "eval", "compose(a[b], a, c[d])"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 * c[b,d] + 1 * c[d[b]]"
