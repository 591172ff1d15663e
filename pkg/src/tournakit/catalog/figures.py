"""Named tournaments of the exception catalogs.

Each drawing is entered in a compact arc language using 1-based labels:
``"12>34"`` means every vertex of {1,2} beats every vertex of {3,4}; a leading
``!`` overrides an arc set by an earlier group statement.  A statement may not
silently contradict an earlier one, and every pair must end up oriented
unless it is declared free.  Drawings with free pairs are schemes: they stand
for every completion, and :func:`figure_variants` lists those completions up
to isomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..core import Tournament, canonical_code, from_arcs

# name -> (order, arc statements, free pairs)
FIGURES: dict[str, tuple[int, str, tuple[tuple[int, int], ...]]] = {
    "3A": (3, "1>2 2>3 3>1", ()),
    "4A": (4, "1>2 3>4 4>12 12>3", ()),
    "4B": (4, "1>2 2>3 3>1 4>123", ()),
    "5A": (5, "1>2 1>3 2>3 2>4 3>4 3>5 4>5 4>1 5>1 5>2", ()),
    "5B": (5, "1>2 2>3 1>3 4>5 5>123 123>4", ()),
    "5C": (5, "1>2 2>3 3>1 4>5 5>123 123>4", ()),
    "5D": (5, "1>2 3>4 4>12 12>3 1>5 3>5 5>2 5>4", ()),
    "5E": (5, "1>2 12>3 3>45 4>5 45>12", ()),
    "6A": (6, "1>2 2>34 34>1 4>3 1234>5 5>6 6>1234", ()),
    "6B": (6, "1>2 6>12 6>3 12>5 12>4 3>4 3>12 5>4 4>6 5>6 5>3", ()),
    "6C": (6, "1>2 2>3 3>1 4>5 6>45 45>123 123>6", ()),
    "6D": (6, "1>2 3>4 5>6 12>34 34>56 56>12", ()),
    "6E": (6, "1>2 6>12 6>3 12>3 12>4 3>4 3>5 4>5 4>6 5>6 5>12", ()),
    "6F": (6, "1>2 1>5 2>3 2>6 3>1 3>4 4>1 4>2 4>6 5>2 5>3 5>4 6>1 6>3 6>5", ()),
    "6G": (6, "1>4 1>5 2>1 2>5 3>1 3>2 3>6 4>2 4>3 5>3 5>4 5>6 6>1 6>2 6>4", ()),
    "6H": (6, "1>2 2>3 3>1 5>4 45>6 123>45 6>123", ()),
    "6I": (6, "5>4 2>1 3>12 12>45 45>3 5>6 6>4 3>6 1>6 6>2", ()),
    "6J": (6, "2>1 2>6 1>6 5>4 45>3 126>45 3>126", ()),
    "6K": (6, "1>2 6>12 6>3 3>12 12>4 4>3 5>3 5>4 6>4 5>6 12>5", ()),
    "6L": (6, "1>2 1>3 2>3 4>5 6>45 45>123 123>6", ()),
    "7A": (7, "1>235 2>346 3>457 4>561 5>672 6>713 7>124", ()),
    "7B": (7, "1>2 3>1 3>2 4>5 5>6 6>4 123>7 7>456 456>123", ()),
    "7C": (7, "1>2 2>3 3>1 4>5 5>6 6>4 123>7 7>456 456>123", ()),
    "7D": (7, "1>2 3>4 4>5 5>3 6>7 12>345 345>67 67>12", ()),
    "7E": (7, "1>2345 3>4 4>5 5>3 6>7 345>2 2345>67 67>1", ()),
    "7F": (7, "1>3 3>2 2>1 4>5 6>7 45>123 123>67 67>45 !5>6", ()),
    "7G": (7, "2>3 3>17 17>2 7>1 1237>6 6>45 45>1237 4>5", ()),
    "7H": (7, "1>2 6>12 6>3 3>12 12>47 47>3 5>3 5>47 6>47 5>6 12>5 7>4", ()),
    "7I": (7, "4>7 5>4 7>5 3>2 2>1 3>1 457>6 6>123 123>457", ()),
    "7J": (7, "2>1 1>3 3>2 4>5 5>6 6>4 456>7 4567>12 3>456 7>3", ()),
    "7K": (7, "1>234 2>345 3>456 4>567 5>671 6>712 7>123", ()),
    "8A": (8, "1>2 12>346 3>4 3>5 3>7 4>5 4>6 4>8 5>6 5>7 5>12 6>7 6>8 6>3 7>8 7>12 7>4 8>12 8>3 8>5", ()),
    "8B": (8, "28>1 1>3 3>28 4>5 5>6 6>4 456>7 4567>28 4567>1 3>456 7>3 8>2", ()),
    # cycle-catalog drawings; several leave pairs unoriented
    "4C": (4, "1>2 2>3 3>1", ((1, 4), (2, 4), (3, 4))),
    "6M": (6, "1>2 1>3 2>3 2>4 3>4 3>5 4>5 4>1 5>1 5>2", tuple((i, 6) for i in range(1, 6))),
    "8C": (8, "1>235 2>346 3>457 4>561 5>672 6>713 7>124", tuple((i, 8) for i in range(1, 8))),
    "6N": (6, "1>2 2>3 3>1 4>5 5>6 6>4 456>123", ()),
    "5F": (5, "1>2 2>3 3>1 4>123 5>4 3>5 2>5", ((1, 5),)),
    "8D": (8, "1>2 2>3 3>1 123>8 8>4567 4567>123",
           ((4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7))),
    "6O": (6, "123>4 123>5 4>5 4>6 5>6 6>123", ((1, 2), (1, 3), (2, 3))),
    "6P": (6, "2>1 3>4 5>6 34>1 34>2 6>34 56>2 1>56", ((3, 5), (4, 5))),
}


def _parse(order: int, spec: str) -> dict[tuple[int, int], int]:
    """Map unordered pair (i<j), 0-based, to 1 if i beats j else 0."""
    arcs: dict[tuple[int, int], int] = {}
    for stmt in spec.split():
        override = stmt.startswith("!")
        left, right = stmt.lstrip("!").split(">")
        for a in left:
            for b in right:
                u, v = int(a) - 1, int(b) - 1
                if u == v or not (0 <= u < order and 0 <= v < order):
                    raise ValueError(f"bad arc {a}>{b} in {stmt!r}")
                key = (min(u, v), max(u, v))
                bit = 1 if u < v else 0
                if key in arcs and arcs[key] != bit and not override:
                    raise ValueError(f"{stmt!r} contradicts an earlier arc on {a},{b}")
                arcs[key] = bit
    return arcs


def _build(name: str, arcs: dict[tuple[int, int], int], order: int) -> Tournament:
    edges = [(i, j) if b else (j, i) for (i, j), b in arcs.items()]
    return from_arcs(order, edges, name)


def is_scheme(name: str) -> bool:
    return bool(_entry(name)[2])


def _entry(name: str):
    try:
        return FIGURES[name]
    except KeyError:
        raise KeyError(f"unknown catalog tournament {name!r}") from None


@lru_cache(maxsize=None)
def _completions(name: str) -> tuple[Tournament, ...]:
    order, spec, free = _entry(name)
    base = _parse(order, spec)
    free0 = [(a - 1, b - 1) for a, b in free]
    for a, b in free0:
        if (min(a, b), max(a, b)) in base:
            raise ValueError(f"{name}: pair {a + 1},{b + 1} is both drawn and free")
    out = []
    for bits in product((1, 0), repeat=len(free0)):
        arcs = dict(base)
        for (a, b), bit in zip(free0, bits):
            arcs[(min(a, b), max(a, b))] = bit if a < b else 1 - bit
        out.append(_build(name, arcs, order))
    return tuple(out)


def exception_tournament(name: str) -> Tournament:
    """The named tournament, 0-based.  For a scheme this is the completion in
    which every free pair points from the smaller to the larger label."""
    return _completions(name)[0]


@lru_cache(maxsize=None)
def figure_variants(name: str) -> tuple[Tournament, ...]:
    """All completions of a drawing, one per isomorphism class, in order of
    first appearance."""
    seen = set()
    res = []
    for t in _completions(name):
        c = canonical_code(t)
        if c not in seen:
            seen.add(c)
            res.append(t)
    return tuple(res)


def figure_names() -> list[str]:
    return list(FIGURES)
