"""Placement of the circle split off by a same-circle smoothing.

The package places it right after the circle being traced. Appending it after
all circles instead is also a valid state model, but it selects different
ascending states and hence a different (equivalent) A_{1,2}.
"""

from __future__ import annotations

import pytest
from conftest import nine_term_a12

from homflygauss import formulas, statesum
from homflygauss.diagram import core
from homflygauss.formulas import evaluate_combo, generate_Akl


def _smooth_append(succ, order, idx, tok):
    other = tok ^ 1
    j = core._locate(succ, order, idx, other)
    nxt = succ[tok]
    succ[tok], succ[other] = succ[other], nxt
    if j == idx:
        order.append(nxt)
    else:
        del order[j]


def _clear_caches():
    for module in (statesum, formulas):
        for obj in vars(module).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


@pytest.fixture
def append_rule(monkeypatch):
    _clear_caches()
    monkeypatch.setattr(core, "_smooth_at", _smooth_append)
    monkeypatch.setattr(statesum, "_smooth_at", _smooth_append)
    yield
    monkeypatch.undo()
    _clear_caches()


def test_default_rule_a12_differs_from_nine_term_form():
    assert generate_Akl(1, 2, 1) != nine_term_a12()


def test_default_rule_forms_agree_on_knots(knot_corpus):
    a12, nine = generate_Akl(1, 2, 1), nine_term_a12()
    for _, g in knot_corpus:
        assert evaluate_combo(a12, g) == evaluate_combo(nine, g)


def test_append_rule_is_a_state_model(append_rule, small_corpus):
    for name, g in small_corpus:
        assert statesum.homfly_descending(g) == statesum.skein_homfly(g), name


def test_append_rule_gives_nine_term_a12(append_rule):
    assert generate_Akl(1, 2, 1) == nine_term_a12()
