import json
import pathlib

import pytest

import zxw

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_evaluate_hadamard():
    m = zxw.evaluate("(H)")
    assert m["in"] == 1 and m["out"] == 1
    assert zxw.evaluate_text("(H)").count("|") == 2


def test_equalities():
    assert zxw.equal("(seq (H) (H))", "(id)")
    assert not zxw.equal("(H)", "(id)")
    ok, scalar = zxw.equal_up_to_scalar("(Z 1 1 0)", "(par (Z 1 1 0) (Z 0 0 0))")
    assert ok and scalar == "1/2"


def test_parse_errors():
    with pytest.raises(ValueError):
        zxw.normalize("(seq (H)")
    with pytest.raises(TypeError):
        zxw.wx("(H)")
    assert zxw.normalize("(Z 1 1 9)") == "(Z 1 1 1)"


def test_translation_round_trip():
    t = "(seq (Z 1 2 1) (par (H) (X 1 1 3)))"
    back = zxw.recover(zxw.wx(zxw.xw(t)))
    assert back["calculus"] == "zx"
    assert zxw.equal(back, t)


def test_graph_input():
    g = zxw.graph("(seq (tri) (Z 1 1 2))")
    assert len(g["nodes"]) == 2
    assert zxw.equal(g, "(seq (tri) (Z 1 1 2))")


def test_synthesis():
    m = zxw.evaluate("(tri)")
    for target in ("zw", "zx"):
        d = zxw.synthesize(m, target)
        assert d["calculus"] == target
        assert zxw.evaluate(d) == m


def test_catalogs_are_sound():
    assert "S1" in zxw.rule_ids("zx")
    assert "ZW:half" in zxw.rule_ids("zw")
    assert all(r["sound"] for r in zxw.check_rules("zw"))
    assert all(r["sound"] for r in zxw.check_rules("zx", bound=1))
    assert all(r["sound"] for r in zxw.check_lemmas(1))


def test_proofs():
    script = json.loads((DATA / "proofs" / "s1_chain.json").read_text())
    ok, trace = zxw.check_proof(script)
    assert ok, trace
    script["end"] = "(Z 1 1 5)"
    ok, _ = zxw.check_proof(script)
    assert not ok


def test_gadgets():
    ok, _ = zxw.equal_up_to_scalar(zxw.gadget("toffoli"), "(par (id) (id) (id))")
    assert not ok
    assert zxw.gadget("crz", [2]).startswith("(seq")
    with pytest.raises(ValueError):
        zxw.gadget("crz")
