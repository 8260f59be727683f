import io
import json

import pytest

from lbseries.cli import run
from lbseries.serialize import series_from_json, tensor_from_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_documented_examples():
    assert call("coproduct", "--kind", "dn", "--forest", "(())")[1].strip() == "(())⊗1 + ()⊗() + 1⊗(())"
    assert call("bell", "--n", "3")[1].strip() == "d1^3 + 2 d1 d2 + d2 d1 + d3"
    assert call("bea", "--method", "euler", "--order", "2")[1].strip() == "() - 1/2 (())"


def test_exit_codes():
    assert call("nonsense")[0] == 1
    assert call("coproduct")[0] == 1
    assert call("bell", "--n", "-1")[0] == 1
    assert call("flow", "--method", "euler", "-n", "-3")[0] == 1
    code, _, err = call("cuts", "--kind", "admissible", "--forest", "()()")
    assert code == 2 and "not a single tree" in err
    assert call("coproduct", "--forest", "(()")[0] == 2
    assert call("subst", "--a", "()()", "--target", "(())", "--strict")[0] == 2
    assert call("subst", "--a", "missing.json", "--target", "(())")[0] == 2  # parsed as a forest literal


def test_permissive_substitution_warns():
    code, out, err = call("subst", "--a", "()()", "--target", "(())", "-n", "4")
    assert code == 0 and "warning" in err


@pytest.mark.parametrize("argv", [
    ("product", "--kind", "gl", "--left", "()", "--right", "()()"),
    ("coproduct", "--kind", "dn-cuts", "--forest", "(()(()))"),
    ("cuts", "--forest", "(()(()))"),
    ("cuts", "--kind", "elementary", "--forest", "(()(()))"),
    ("antipode", "--hopf", "n", "--forest", "()(())"),
    ("idempotent", "--kind", "dynkin", "--forest", "()(())"),
    ("bell", "--n", "4", "--k", "3"),
    ("subst", "--a", "random", "--target", "euler", "--seed", "3"),
    ("subst-dual", "--a", "random", "--forest", "(()())", "--seed", "3"),
    ("flow", "--method", "midpoint", "--repr", "3"),
    ("bea", "--method", "midpoint"),
    ("convert", "--series", "()", "--from", "2", "--to", "1"),
    ("enumerate", "-n", "3"),
])
def test_commands_are_deterministic(argv):
    first = call(*argv)
    assert first[0] == 0, first[2]
    assert call(*argv) == first
    js = call(*argv, "--format", "json")
    assert js[0] == 0
    json.loads(js[1])


def test_json_output_round_trips():
    code, out, _ = call("flow", "--method", "exact", "--format", "json", "-n", "3")
    data = json.loads(out)
    assert series_from_json(data).order == 3
    code, out, _ = call("coproduct", "--forest", "()(())", "--format", "json")
    t = tensor_from_json(json.loads(out))
    assert t[("()()", "()")] == 2


def test_subst_reads_json_files(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"order": 3, "terms": [{"forest": "()", "coeff": "2"}]}))
    code, out, _ = call("subst", "--a", str(path), "--target", "(())", "-n", "3")
    assert code == 0 and out.strip() == "4 (())"
    code, out, _ = call("subst-dual", "--a", str(path), "--forest", "()()", "-n", "3")
    assert out.strip() == "4 ()()"


def test_enumerate_counts():
    code, out, _ = call("enumerate", "--count", "-n", "6", "--format", "json")
    assert json.loads(out) == {"counts": [1, 1, 2, 5, 14, 42, 132]}


@pytest.mark.parametrize("order", [0, 4, 5])
def test_selftest(order):
    code, out, _ = call("selftest", "-n", str(order))
    assert code == 0
    assert "FAIL" not in out
    assert f"checks passed at order {order}" in out
