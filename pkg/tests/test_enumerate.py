from __future__ import annotations

import pytest

from oracles import all_labeled, brute_canonical_bits
from tournakit.core import canonical_form, dual, is_isomorphic
from tournakit.enumerate import (
    KNOWN_COUNTS,
    canonical_codes,
    count_tournaments,
    from_code,
    naive_canonical_codes,
    tournaments_of_order,
)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 4), (5, 12), (6, 56), (7, 456)])
def test_counts(n, count):
    assert count_tournaments(n) == count == KNOWN_COUNTS[n]


@pytest.mark.slow
def test_count_order_8():
    assert count_tournaments(8) == 6880


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_stream_equals_naive_classification(n):
    assert list(canonical_codes(n)) == naive_canonical_codes(n)
    naive = sorted({brute_canonical_bits(t) for t in all_labeled(n)})
    assert [t.bits for t in tournaments_of_order(n)] == naive


def test_stream_sorted_and_canonical():
    ts = list(tournaments_of_order(6))
    assert [t.bits for t in ts] == sorted(t.bits for t in ts)
    assert all(canonical_form(t) == t.bits for t in ts)
    for a, b in zip(ts, ts[1:]):
        assert not is_isomorphic(a, b)


def test_duals_stay_inside_the_stream():
    codes = set(canonical_codes(5))
    for t in tournaments_of_order(5):
        assert dual(dual(t)) == t
        assert int(canonical_form(dual(t)) or "0", 2) in codes


def test_from_code_round_trip():
    for code in canonical_codes(4):
        assert int(from_code(4, code).bits, 2) == code


def test_order_limits():
    with pytest.raises(ValueError):
        count_tournaments(9)
    with pytest.raises(ValueError):
        list(tournaments_of_order(0))
