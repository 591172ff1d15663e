from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tournakit.patterns import (
    CycleType,
    PathType,
    cycle_canonical,
    dual_type,
    enumerate_cycle_types,
    enumerate_path_types,
    parse_cycle_type,
    parse_path_type,
    reverse_cycle_type,
    reverse_type,
)


def necklace_orbits(m: int) -> int:
    """Orientation strings of an m-cycle with both directions present, up to
    rotation and reading the cycle the other way round."""
    seen = set()
    for d in product((0, 1), repeat=m):
        if 0 < sum(d) < m:
            orbit = []
            for r in range(m):
                rot = d[r:] + d[:r]
                orbit.append(rot)
                orbit.append(tuple(1 - x for x in reversed(rot)))
            seen.add(min(orbit))
    return len(seen)


def test_parse_inpath():
    p = parse_path_type("-(1,2)")
    assert p.sign == -1 and p.blocks == (1, 2) and p.order == 4
    assert str(p) == "-(1,2)"


def test_parse_cycles():
    assert parse_cycle_type("(2,1)").order == 3
    with pytest.raises(ValueError):
        parse_cycle_type("(1,1,1)")
    with pytest.raises(ValueError):
        parse_path_type("(1,2)")


def test_duals_and_reversal():
    assert dual_type(parse_path_type("+(1,1,1,1)")) == parse_path_type("-(1,1,1,1)")
    # read backwards, a->b->c<-d becomes d->c<-b<-a
    assert reverse_type(parse_path_type("+(2,1)")) == parse_path_type("+(1,2)")


@pytest.mark.parametrize("m", range(2, 9))
def test_dual_type_involution(m):
    for p in enumerate_path_types(m):
        assert dual_type(dual_type(p)) == p
        assert reverse_type(reverse_type(p)) == p


def test_cycle_rotation_is_one_type():
    assert cycle_canonical((1, 2, 1, 2)) == cycle_canonical((2, 1, 2, 1))
    assert parse_cycle_type("(2,1)") == cycle_canonical((2, 1))
    d = (1, 1, 0, 1, 1, 0)
    assert CycleType.from_dirs(d) == CycleType.from_dirs(tuple(reversed(d)))


@given(st.lists(st.integers(0, 1), min_size=3, max_size=12), st.integers(0, 11))
def test_cycle_type_ignores_start_and_direction(dirs, r):
    if not any(dirs):
        return
    d = tuple(dirs)
    r %= len(d)
    c = CycleType.from_dirs(d)
    assert CycleType.from_dirs(d[r:] + d[:r]) == c
    assert CycleType.from_dirs(tuple(1 - x for x in reversed(d))) == c


def test_small_enumerations():
    assert enumerate_cycle_types(3) == [parse_cycle_type("(2,1)")]
    assert len(enumerate_path_types(4)) == 8
    assert {str(p) for p in enumerate_path_types(4)} == {
        "+(3)", "-(3)", "+(2,1)", "-(2,1)", "+(1,2)", "-(1,2)", "+(1,1,1)", "-(1,1,1)"
    }


@pytest.mark.parametrize("m", range(3, 11))
def test_cycle_count_matches_necklaces(m):
    assert len(enumerate_cycle_types(m)) == necklace_orbits(m)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=12))
def test_path_round_trip(dirs):
    p = PathType.from_dirs(dirs)
    assert p.dirs == tuple(dirs)
    assert parse_path_type(str(p)) == p


def test_reverse_cycle_type_is_dual_cycle():
    c = parse_cycle_type("(4,1)")
    assert reverse_cycle_type(reverse_cycle_type(c)) == c
    assert reverse_cycle_type(c).order == 5
