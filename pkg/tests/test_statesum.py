from __future__ import annotations

import random
import time

import pytest

from homflygauss.corpus import named_diagrams
from homflygauss.diagram import Passage, crossing_flip, parse_gauss_code
from homflygauss.exactpoly import IntLaurent2, unlink_factor
from homflygauss.statesum import (
    ASCENDING,
    DESCENDING,
    homfly,
    homfly_ascending,
    homfly_descending,
    is_descending,
    skein_homfly,
    smooth_arrow,
    state_contribution,
    states,
)

TREFOIL_P = IntLaurent2({(2, 0): 2, (4, 0): -1, (2, 2): 1})
A = IntLaurent2.monomial(1, 1, 0)
A_INV = IntLaurent2.monomial(1, -1, 0)
Z = IntLaurent2.monomial(1, 0, 1)


def test_trefoil_three_ways(trefoil, spec_trefoil):
    for g in (trefoil, spec_trefoil):
        assert homfly_descending(g) == TREFOIL_P
        assert homfly_ascending(g) == TREFOIL_P
        assert skein_homfly(g) == TREFOIL_P


def test_trefoil_state_table(trefoil):
    expected = [
        IntLaurent2({(2, 0): 1}),
        IntLaurent2({(2, 0): 1, (4, 0): -1}),
        IntLaurent2(),
        IntLaurent2(),
        IntLaurent2({(2, 2): 1}),
        IntLaurent2(),
        IntLaurent2(),
        IntLaurent2(),
    ]
    # states by size: {}, {x1}, {x2}, {x3}, {x1,x2}, {x1,x3}, {x2,x3}, {x1,x2,x3}
    assert [state_contribution(trefoil, mask) for mask in states(3)] == expected


def test_unlinks():
    for m in range(1, 5):
        g = parse_gauss_code("\n" * m)
        assert homfly_descending(g) == unlink_factor() ** (m - 1)
        assert skein_homfly(g) == unlink_factor() ** (m - 1)
    assert homfly_descending(parse_gauss_code("\n\n")).to_text() == "-1*a^-1*z^-1 +1*a^1*z^-1"


def test_hopf_links():
    neg = named_diagrams()["hopf"]
    assert homfly_descending(neg) == IntLaurent2({(3, -1): 1, (1, -1): -1, (1, 1): -1})
    pos = crossing_flip(crossing_flip(neg, 0), 1)
    assert homfly_descending(pos) == IntLaurent2({(-1, -1): 1, (-3, -1): -1, (-1, 1): 1})


def test_known_knots():
    d = named_diagrams()
    assert homfly_descending(d["4_1"]) == IntLaurent2({(-2, 0): 1, (0, 0): -1, (2, 0): 1, (0, 2): -1})
    # Conway polynomials at a = 1
    conway = {"3_1": {0: 1, 2: 1}, "4_1": {0: 1, 2: -1}, "5_1": {0: 1, 2: 3, 4: 1}, "5_2": {0: 1, 2: 2}, "6_1": {0: 1, 2: -2}}
    for name, want in conway.items():
        assert homfly_descending(d[name]).evaluate_a(1) == want, name


def test_descending_diagram_is_unlink():
    g = parse_gauss_code("O1+ O2- U1+ U2-\nO3+\nU3+\n")
    assert is_descending(g)
    assert homfly_descending(g) == unlink_factor() ** 2


def test_state_order():
    assert list(states(3)) == [0, 1, 2, 4, 3, 5, 6, 7]


def test_weight_tables_are_mirror_images():
    for ins in (False, True):
        for s in (1, -1):
            assert DESCENDING(ins, Passage.HEAD_FIRST, s) == ASCENDING(ins, Passage.TAIL_FIRST, s)
            assert DESCENDING(ins, Passage.TAIL_FIRST, s) == ASCENDING(ins, Passage.HEAD_FIRST, s)


def test_oracle_equivalence(full_corpus):
    for name, g in full_corpus:
        assert homfly_descending(g) == skein_homfly(g), name
        assert homfly_ascending(g) == homfly_descending(g), name


def test_skein_relation(full_corpus):
    for name, g in full_corpus:
        p = homfly(g)
        for x in g.arrows():
            flip = homfly(crossing_flip(g, x))
            smooth = homfly(smooth_arrow(g, x))
            if g.signs[x] > 0:
                assert A * p - A_INV * flip == Z * smooth, (name, x)
            else:
                assert A * flip - A_INV * p == Z * smooth, (name, x)


def test_parity_and_z_bounds(full_corpus):
    for name, g in full_corpus:
        p = homfly(g)
        parity = (g.m - 1) % 2
        for (i, j), _ in p.items():
            assert i % 2 == parity and j % 2 == parity, name
        assert p.min_z_degree() >= 1 - g.m
        if g.m == 1:
            assert p.min_z_degree() >= 0


def test_pruning_is_exact(full_corpus):
    rng = random.Random(4)
    pool = [g for _, g in full_corpus if g.n <= 8]
    for g in rng.sample(pool, 50):
        assert homfly_descending(g, prune=True) == homfly_descending(g, prune=False)
        assert homfly_ascending(g, prune=True) == homfly_ascending(g, prune=False)


def test_smooth_arrow_matches_induced_ordering(trefoil):
    # smoothing x1 of the trefoil leaves a two-circle diagram with one negative arrow
    g = smooth_arrow(trefoil, 0)
    assert (g.m, g.n) == (2, 2) and g.signs == (-1, -1)


def test_trefoil_is_fast(spec_trefoil):
    homfly.cache_clear()
    start = time.perf_counter()
    homfly_descending(spec_trefoil)
    skein_homfly(spec_trefoil)
    homfly_ascending(spec_trefoil)
    assert time.perf_counter() - start < 0.1
