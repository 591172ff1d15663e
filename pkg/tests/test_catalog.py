from __future__ import annotations

import random

import pytest

from tournakit.catalog import (
    CORRECTIONS,
    FAMILIES,
    biexception_instances,
    biexception_records,
    cycle_exceptions,
    derived_path,
    exception_tournament,
    family_instances,
    figure_names,
    finite_path_exceptions,
    instantiate_family,
    is_exception,
    is_grunbaum_exception,
    match_biexception,
    match_exception,
)
from tournakit.catalog.export import catalog_json, shipped_catalog_json
from tournakit.core import (
    dual,
    from_arcs,
    induced,
    is_isomorphic,
    marked_canonical_code,
    out_section,
    transitive,
)
from tournakit.patterns import parse_cycle_type, parse_path_type
from tournakit.search import contains_cycle, origins, validate_embedding


def mask(labels):
    return sum(1 << (v - 1) for v in labels)


def test_sizes():
    assert [r.id for r in finite_path_exceptions()] == list(range(52))
    assert [r.id for r in cycle_exceptions()] == list(range(1, 19))
    assert len(FAMILIES) == 17
    assert len(biexception_records()) > 0


def test_named_tournaments():
    a3 = exception_tournament("3A")
    assert all(out_section(a3, 1 << v) == 0b111 for v in a3.vertices)
    a5 = exception_tournament("5A")
    assert all(a5.outdegree(v) == 2 for v in a5.vertices)
    paley = from_arcs(7, [(i, (i + d) % 7) for i in range(7) for d in (1, 2, 4)])
    assert is_isomorphic(exception_tournament("7A"), paley)
    for name in figure_names():
        assert exception_tournament(name).order == int(name[0])


def test_6n_upper_triangle():
    t = exception_tournament("6N")
    assert is_isomorphic(induced(t, [3, 4, 5]), exception_tournament("3A"))
    assert all(t.arc(u, v) for u in (3, 4, 5) for v in (0, 1, 2))


def test_record_examples():
    r0, r2, r33 = (finite_path_exceptions()[i] for i in (0, 2, 33))
    assert (r0.tournament_name, str(r0.path), r0.s_labels, r0.witnesses) == ("3A", "+(1,1)", (1, 2, 3), ())
    assert (r2.tournament_name, str(r2.path), r2.s_labels) == ("4A", "+(1,2)", (3, 4))
    assert set(r2.witnesses) == {"1324", "2314"}
    assert (r33.tournament_name, str(r33.path), r33.s_labels) == ("7A", "+(1,1,1,1,1,1)", tuple(range(1, 8)))


@pytest.mark.parametrize("rec", finite_path_exceptions(), ids=lambda r: f"exc{r.id}")
def test_finite_records_validate(rec):
    t, p = rec.tournament, rec.path
    orig = origins(t, p)
    assert t.full_mask & ~orig == rec.s_mask
    assert is_exception(t, p, orig)
    for seq in rec.witness_sequences():
        assert validate_embedding(t, p, seq)
        assert not rec.s_mask >> seq[0] & 1


@pytest.mark.parametrize("rec", cycle_exceptions(), ids=lambda r: r.name)
def test_cycle_records_validate(rec):
    for t in rec.tournaments():
        assert not contains_cycle(t, rec.cycle)


def test_cycle_record_examples():
    a = {r.name: r for r in cycle_exceptions()}
    assert (a["A1"].tournament_name, str(a["A1"].cycle)) == ("3A", "(2,1)")
    assert (a["A8"].tournament_name, str(a["A8"].cycle)) == ("4B", "(2,2)")
    assert (a["A18"].tournament_name, str(a["A18"].cycle)) == ("7A", "(2,1,2,1)")


def test_biexception_example():
    rec = next(b for b in biexception_records() if b.key == "(2,0)")
    assert (str(rec.path), rec.side, rec.neighbourhood, rec.s_labels) == ("+(2,2)", "+", (3, 4), (3,))
    t, x = rec.build()
    assert t.out[x] == mask({3, 4})
    others = t.full_mask & ~(1 << x)
    from tournakit.search import origins_with_end

    assert others & ~origins_with_end(t, rec.path, others, others) == mask({3})


def test_derived_path():
    q = parse_path_type("+(1,2)")
    assert derived_path(q, 0) == parse_path_type("+(2,2)")
    assert derived_path(q, 1) == parse_path_type("-(1,1,2)")


def test_family_examples():
    e14 = instantiate_family("E1", transitive(1))
    assert e14.order == 4 and str(e14.path) == "+(1,2)" and e14.s_mask == 0b0111
    arc = transitive(2)
    e85 = instantiate_family("E8", arc)
    assert str(e85.path) == "+(1,1,1,1)"
    e16 = instantiate_family("E1", exception_tournament("3A"))
    assert e16.order == 6 and is_isomorphic(induced(e16.tournament, e16.x_mask), exception_tournament("3A"))


@pytest.mark.parametrize("fid", list(FAMILIES))
def test_family_instances_validate(fid):
    for n in range(3, 8):
        for inst in family_instances(fid, n):
            orig = origins(inst.tournament, inst.path)
            assert inst.tournament.full_mask & ~orig == inst.s_mask
            assert is_exception(inst.tournament, inst.path, orig)


def test_matching_is_isomorphism_invariant():
    rng = random.Random(3)
    a3 = exception_tournament("3A")
    for _ in range(5):
        perm = [0, 1, 2]
        rng.shuffle(perm)
        m = match_exception(a3.relabel(perm), parse_cycle_type("(2,1)"))
        assert m is not None and m.name == "A1"
    assert match_exception(transitive(3), parse_cycle_type("(2,1)")) is None
    e15 = instantiate_family("E1", transitive(2))
    m = match_exception(e15.tournament.relabel([4, 2, 0, 3, 1]), parse_path_type("+(1,3)"))
    assert m is not None and m.kind == "family" and m.name.startswith("E1")


def test_matching_cycle_duals():
    a9 = next(r for r in cycle_exceptions() if r.name == "A9")
    t = a9.tournaments()[0]
    from tournakit.patterns import reverse_cycle_type

    m = match_exception(dual(t), reverse_cycle_type(a9.cycle))
    assert m is not None and m.name == "A9"


def test_grunbaum_exceptions():
    for name, p in (("3A", "+(1,1)"), ("5A", "+(1,1,1,1)"), ("7A", "+(1,1,1,1,1,1)")):
        assert is_grunbaum_exception(exception_tournament(name), parse_path_type(p))
    assert not is_grunbaum_exception(exception_tournament("3A"), parse_path_type("-(1,1)"))
    assert not is_grunbaum_exception(transitive(3), parse_path_type("+(1,1)"))


def test_listed_biexceptions_match_themselves():
    for b in biexception_instances(8)[:60]:
        perm = list(reversed(range(b.order)))
        moved = b.tournament.relabel(perm)
        found = match_biexception(moved, b.path, perm.index(b.x))
        assert b in found
        assert marked_canonical_code(moved, [perm.index(b.x)]) == marked_canonical_code(b.tournament, [b.x])


def test_corrections_recorded():
    entries = {c[0] for c in CORRECTIONS}
    assert {"Exc 3", "Exc 7", "Exc 44"} <= entries


def test_shipped_catalog_is_current():
    assert shipped_catalog_json() == catalog_json()
