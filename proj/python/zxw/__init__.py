"""Exact ZX / ZW diagrams over D[w], w = exp(i pi/4).

Diagrams are term strings such as "(seq (H) (H))" or graph dicts as
returned by graph(). Matrices are dicts with keys out, in, entries.
"""

import json

from . import _core
from ._core import (BindingError, DiagramTypeError, ParseError, gadget,
                    normalize, rule_ids)

__all__ = [
    "BindingError", "DiagramTypeError", "ParseError", "check_lemmas",
    "check_proof", "check_rules", "equal", "equal_up_to_scalar", "evaluate",
    "evaluate_text", "gadget", "graph", "normalize", "recover", "rule_ids",
    "synthesize", "wx", "xw",
]


def _text(d):
    return d if isinstance(d, str) else json.dumps(d)


def equal(a, b):
    return _core.equal(_text(a), _text(b))


def equal_up_to_scalar(a, b):
    """(True, scalar text) when a = scalar * b, else (False, "")."""
    return _core.equal_up_to_scalar(_text(a), _text(b))


def evaluate_text(d):
    return _core.evaluate_text(_text(d))


def evaluate(d):
    return json.loads(_core.evaluate_json(_text(d)))


def graph(d):
    return json.loads(_core.graph_json(_text(d)))


def xw(d):
    return json.loads(_core.xw_json(_text(d)))


def wx(d):
    return json.loads(_core.wx_json(_text(d)))


def recover(d):
    return json.loads(_core.recover_json(_text(d)))


def synthesize(matrix, target="zx"):
    return json.loads(_core.synthesize_json(_text(matrix), target))


def check_rules(calculus="zx", bound=3):
    return json.loads(_core.check_rules_json(calculus, bound))


def check_lemmas(bound=3):
    return json.loads(_core.check_lemmas_json(bound))


def check_proof(script):
    ok, trace = _core.check_proof_json(_text(script))
    return ok, list(trace)
