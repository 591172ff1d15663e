from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_count, brute_has_cycle, brute_origins
from strategies import cycle_types, path_types, tournaments
from tournakit.catalog import exception_tournament
from tournakit.core import is_strong, random_tournament, transitive
from tournakit.enumerate import tournaments_of_order
from tournakit.patterns import PathType, dual_type, enumerate_path_types, parse_cycle_type, parse_path_type
from tournakit.search import (
    SearchConstraints,
    contains_cycle,
    count_path_embeddings,
    find_cycle_embedding,
    find_path_embedding,
    origins,
    proof_guided_cycle_embedding,
    validate_embedding,
)


def mask(labels):
    return sum(1 << (v - 1) for v in labels)


def test_validate_examples():
    tt = transitive(3)
    assert validate_embedding(tt, parse_path_type("+(1,1)"), [0, 2, 1])
    c3 = exception_tournament("3A")
    assert not any(
        validate_embedding(c3, parse_path_type("+(1,1)"), s) for s in ([0, 1, 2], [1, 2, 0], [0, 2, 1])
    )
    assert validate_embedding(exception_tournament("4A"), parse_path_type("+(1,1,1)"), [3, 1, 0, 2])


def test_origins_examples():
    a4 = exception_tournament("4A")
    assert origins(a4, parse_path_type("+(1,2)")) == mask({1, 2})
    assert origins(a4, parse_path_type("+(2,1)")) == mask({3, 4})
    assert origins(exception_tournament("3A"), parse_path_type("+(1,1)")) == 0


def test_find_path_examples():
    a4 = exception_tournament("4A")
    p = parse_path_type("+(1,2)")
    emb = find_path_embedding(a4, p, SearchConstraints.of(required_origin=[0]))
    assert emb.vertices[0] == 0 and validate_embedding(a4, p, emb.vertices)
    assert find_path_embedding(exception_tournament("3A"), parse_path_type("+(1,1)")) is None
    emb = find_path_embedding(transitive(6), PathType(1, (5,)))
    assert emb.vertices == (0, 1, 2, 3, 4, 5)


def test_count_examples():
    c3 = exception_tournament("3A")
    assert count_path_embeddings(c3, parse_path_type("+(1,1)")) == 0
    assert count_path_embeddings(c3, parse_path_type("-(1,1)")) == 0
    assert count_path_embeddings(c3, parse_path_type("+(2)")) == 3


def test_cycle_examples():
    assert find_cycle_embedding(exception_tournament("3A"), parse_cycle_type("(2,1)")) is None
    assert find_cycle_embedding(transitive(3), parse_cycle_type("(2,1)")) is not None
    assert not contains_cycle(exception_tournament("5A"), parse_cycle_type("(2,1,1,1)"))
    assert proof_guided_cycle_embedding(exception_tournament("3A"), parse_cycle_type("(2,1)")) is None


@given(tournaments(min_order=2, max_order=6), st.data())
def test_origins_match_brute_force(t, data):
    p = data.draw(path_types(t.order))
    assert origins(t, p) == sum(1 << v for v in brute_origins(t, p))
    emb = find_path_embedding(t, p)
    assert (emb is None) == (origins(t, p) == 0)
    if emb:
        assert validate_embedding(t, p, emb.vertices)


@given(tournaments(min_order=2, max_order=6), st.data())
def test_count_matches_brute_force(t, data):
    p = data.draw(path_types(t.order))
    assert count_path_embeddings(t, p) == brute_count(t, p)


@given(tournaments(min_order=3, max_order=6), st.data())
def test_cycles_match_brute_force(t, data):
    m = data.draw(st.integers(3, t.order))
    c = data.draw(cycle_types(m, directed=True))
    assert contains_cycle(t, c) == brute_has_cycle(t, c)
    emb = find_cycle_embedding(t, c)
    assert (emb is not None) == contains_cycle(t, c)
    if emb:
        assert validate_embedding(t, c, emb.vertices)


@given(tournaments(min_order=4, max_order=9), st.data())
def test_origin_constraints_respected(t, data):
    p = data.draw(path_types(t.order))
    start = data.draw(st.integers(1, t.full_mask))
    banned = data.draw(st.integers(0, t.full_mask))
    emb = find_path_embedding(t, p, SearchConstraints.of(required_origin=start, forbidden_end=banned))
    if emb:
        assert start >> emb.vertices[0] & 1 and not banned >> emb.vertices[-1] & 1
        assert validate_embedding(t, p, emb.vertices)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_strong_iff_hamiltonian_cycle(n):
    directed = parse_cycle_type("(" + str(n) + ")")
    for t in tournaments_of_order(n):
        assert is_strong(t) == contains_cycle(t, directed)


def test_every_tournament_has_a_hamiltonian_directed_path():
    for n in range(2, 7):
        for t in tournaments_of_order(n):
            assert origins(t, PathType(1, (n - 1,)))


def test_count_duality_order_5():
    for t in tournaments_of_order(5):
        for p in enumerate_path_types(5):
            assert count_path_embeddings(t, p) == count_path_embeddings(t, dual_type(p))


@pytest.mark.parametrize("n", [9, 16, 32, 64])
def test_proof_guided_large_orders(n):
    rng = random.Random(n)
    t = random_tournament(n, rng)
    dirs = [rng.getrandbits(1) for _ in range(n)]
    dirs[0], dirs[1] = 1, 0
    c = type(parse_cycle_type("(2,1)")).from_dirs(dirs)
    emb = proof_guided_cycle_embedding(t, c, seed=0)
    assert emb is not None and validate_embedding(t, c, emb.vertices)
    assert proof_guided_cycle_embedding(t, c, seed=0) == emb
