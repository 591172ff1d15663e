from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_canonical_bits
from strategies import tournaments
from tournakit.core import (
    canonical_form,
    canonical_perm,
    canonical_tournament,
    delete_vertex,
    dual,
    in_section,
    induced,
    is_isomorphic,
    is_strong,
    make_tournament,
    marked_canonical_code,
    out_section,
    parse_tournament,
    random_tournament,
    serialize_tournament,
    transitive,
)


def test_text_format_pair_order():
    t = parse_tournament("t 3 101")
    assert t.arc(0, 1) and t.arc(2, 0) and t.arc(1, 2)
    assert serialize_tournament(t) == "t 3 101"


def test_order_one_round_trips():
    t = parse_tournament("t 1 ")
    assert t.order == 1 and serialize_tournament(t) == "t 1 "


@pytest.mark.parametrize("text", ["t 3 10", "t 3 1012", "x 3 101", "t three 101", "t 0 "])
def test_bad_text_rejected(text):
    with pytest.raises(ValueError):
        parse_tournament(text)


@given(tournaments(max_order=9))
def test_round_trip(t):
    assert parse_tournament(serialize_tournament(t)) == t


@given(tournaments())
def test_dual_is_involution(t):
    assert dual(dual(t)) == t
    assert all(dual(t).outdegree(v) == t.indegree(v) for v in t.vertices)


@given(tournaments(max_order=6))
def test_canonical_form_is_lex_least_relabeling(t):
    assert canonical_form(t) == brute_canonical_bits(t)


@given(tournaments(max_order=8), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(t, rng):
    perm = list(t.vertices)
    rng.shuffle(perm)
    assert canonical_form(t.relabel(perm)) == canonical_form(t)
    assert t.relabel(canonical_perm(t)).bits == canonical_form(t)


@given(tournaments(min_order=2, max_order=6), st.randoms(use_true_random=False))
def test_marked_code_tracks_marked_vertex(t, rng):
    perm = list(t.vertices)
    rng.shuffle(perm)
    u = t.relabel(perm)
    for x in t.vertices:
        assert marked_canonical_code(u, [perm.index(x)]) == marked_canonical_code(t, [x])


def test_marked_code_separates_orbits():
    # the source and the sink of TT3 are not exchanged by any automorphism
    t = transitive(3)
    assert len({marked_canonical_code(t, [v]) for v in t.vertices}) == 3
    c3 = parse_tournament("t 3 101")
    assert len({marked_canonical_code(c3, [v]) for v in c3.vertices}) == 1


@given(tournaments(max_order=7))
def test_sections(t):
    for v in t.vertices:
        reach = out_section(t, 1 << v)
        assert reach >> v & 1
        # closed under out-neighbours
        for u in range(t.order):
            if reach >> u & 1:
                assert t.out[u] & ~reach == 0
        assert in_section(t, 1 << v) == out_section(dual(t), 1 << v)
    assert is_strong(t) == all(out_section(t, 1 << v) == t.full_mask for v in t.vertices)


def test_transitive_and_induced():
    t = transitive(5)
    assert not is_strong(t)
    assert induced(t, [1, 3, 4]) == transitive(3)
    assert delete_vertex(t, 0) == transitive(4)
    assert canonical_tournament(parse_tournament("t 3 011")).to_text() == "t 3 000"


def test_isomorphism():
    a = make_tournament(4, "110101")
    b = a.relabel([3, 1, 0, 2])
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, transitive(4))


def test_random_tournament_is_seeded():
    assert random_tournament(12, random.Random(5)) == random_tournament(12, random.Random(5))
