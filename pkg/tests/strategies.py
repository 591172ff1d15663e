from __future__ import annotations

from hypothesis import strategies as st

from tournakit.core import make_tournament
from tournakit.patterns import CycleType, PathType


@st.composite
def tournaments(draw, min_order=1, max_order=7):
    n = draw(st.integers(min_order, max_order))
    bits = draw(st.lists(st.integers(0, 1), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return make_tournament(n, bits)


@st.composite
def path_types(draw, order):
    dirs = draw(st.lists(st.integers(0, 1), min_size=order - 1, max_size=order - 1))
    return PathType.from_dirs(dirs)


@st.composite
def cycle_types(draw, order, directed=False):
    dirs = draw(st.lists(st.integers(0, 1), min_size=order, max_size=order))
    dirs[0] = 1
    if not directed:
        dirs[-1] = 0
    return CycleType.from_dirs(dirs)
