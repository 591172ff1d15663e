from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import tournaments
from tournakit import _pykernels as py
from tournakit import kernels

try:
    from tournakit import _ckernels as cy
except ImportError:  # pragma: no cover
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@given(tournaments(min_order=2, max_order=8), st.data())
def test_path_kernels_agree(t, data):
    n = t.order
    out = list(t.out)
    dirs = data.draw(st.lists(st.integers(0, 1), min_size=n - 1, max_size=n - 1))
    s = data.draw(st.integers(1, t.full_mask))
    e = data.draw(st.integers(1, t.full_mask))
    assert py.ham_path_starts(out, dirs, s, e) == cy.ham_path_starts(out, dirs, s, e)
    assert py.ham_path_count(out, dirs) == cy.ham_path_count(out, dirs)
    a, b = py.ham_path_first(out, dirs, s, e), cy.ham_path_first(out, dirs, s, e)
    assert (a is None) == (b is None)
    k = data.draw(st.integers(1, n - 1))
    assert py.sub_path_starts(out, dirs[:k], s, e) == cy.sub_path_starts(out, dirs[:k], s, e)


@needs_ext
@given(tournaments(min_order=3, max_order=8), st.data())
def test_cycle_kernels_agree(t, data):
    m = data.draw(st.integers(3, t.order))
    cdirs = data.draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
    assert py.cycle_exists(list(t.out), cdirs) == cy.cycle_exists(list(t.out), cdirs)


@needs_ext
@given(tournaments(max_order=8), st.data())
def test_canonical_agrees(t, data):
    assert py.canonical(list(t.out)) == cy.canonical(list(t.out))
    x = data.draw(st.integers(0, t.order - 1))
    rest = [v for v in t.vertices if v != x]
    cells = [[x]] + ([rest] if rest else [])
    assert py.canonical(list(t.out), cells)[0] == cy.canonical(list(t.out), cells)[0]


@pytest.mark.parametrize("mod", [py, pytest.param(cy, marks=needs_ext)])
def test_partition_must_cover(mod):
    with pytest.raises(ValueError):
        mod.canonical([0b10, 0], [[0]])
