import random

import pytest
from hypothesis import given, settings, strategies as st

from extremalkit import drawings
from extremalkit.drawings import (
    IdentityMismatch,
    d_explicit,
    d_value,
    d_via_turan,
    diam4_plan,
    draw_diam4,
    formula_value,
    maxcr_diam4,
    maxcr_spider,
    spider_identity_sides,
)
from extremalkit.geometry import crossing_count, is_legal, missed_nontrivial_crossings
from extremalkit.graphs import Diam4Descriptor, SpiderDescriptor, classify_tree, path_graph, thrackle_bound


def test_d_value_examples():
    assert d_value(Diam4Descriptor((3, 2, 2, 1))) == 3
    assert d_value(Diam4Descriptor((1, 1, 1))) == 1
    assert d_value(Diam4Descriptor((5, 2))) == 0


def test_maxcr_diam4_examples():
    assert maxcr_diam4(Diam4Descriptor((3, 2, 2, 1))) == 44
    assert maxcr_diam4(Diam4Descriptor((1, 1, 1))) == 8
    assert maxcr_spider(SpiderDescriptor((2, 2, 2))) == 8


def test_maxcr_spider_examples():
    assert maxcr_spider((2, 2, 2)) == 8
    assert maxcr_spider((2, 2, 2, 2)) == 16
    assert maxcr_spider((1, 1, 1, 1, 1)) == 0
    assert maxcr_spider((3, 2)) == thrackle_bound(path_graph(6))


def test_spider_identity_examples():
    assert spider_identity_sides(SpiderDescriptor((3, 2, 2))) == (1, 1)
    assert spider_identity_sides(SpiderDescriptor((2, 2, 2, 2))) == (2, 2)
    assert spider_identity_sides(SpiderDescriptor((1, 1, 1))) == (0, 0)


@given(st.lists(st.integers(1, 6), min_size=3, max_size=8))
def test_spider_identity_and_thrackle_comparison(legs):
    desc = SpiderDescriptor(tuple(legs))
    lhs, rhs = spider_identity_sides(desc)
    assert lhs == rhs
    tb = thrackle_bound(desc.tree())
    value = maxcr_spider(desc)
    assert value <= tb
    assert (value == tb) == (rhs == 0)


@given(st.lists(st.integers(0, 10), min_size=1, max_size=10))
def test_d_identity(children):
    assert d_explicit(children) == d_via_turan(children)


def test_d_identity_mismatch_is_raised(monkeypatch):
    monkeypatch.setattr(drawings, "d_via_turan", lambda c: -1)
    with pytest.raises(IdentityMismatch):
        d_value(Diam4Descriptor((1, 1, 1)))


def test_spider_diam4_overlap():
    for k in range(3, 9):
        assert maxcr_spider((2,) * k) == maxcr_diam4(Diam4Descriptor((1,) * k))


def test_draw_examples():
    d = draw_diam4(Diam4Descriptor((1, 1, 1)))
    assert is_legal(d) and crossing_count(d) == 8
    d = draw_diam4(Diam4Descriptor((1, 1)))
    assert is_legal(d) and missed_nontrivial_crossings(d) == []


def test_figure_type_drawing():
    desc = Diam4Descriptor((3, 2, 2, 1))
    d = draw_diam4(desc)
    assert is_legal(d)
    assert crossing_count(d) == 44
    missed = missed_nontrivial_crossings(d)
    assert len(missed) == 3
    for e, f in missed:
        assert (e[0] == 0) != (f[0] == 0)


def _missed_structure_ok(desc, d):
    child_of = {g: i for i in range(1, desc.k + 1) for g in desc.grandchild_ids(i)}
    for pair in missed_nontrivial_crossings(d):
        root_edge = [e for e in pair if e[0] == 0]
        other = [e for e in pair if e[0] != 0]
        if len(root_edge) != 1:
            return False
        i = root_edge[0][1]
        a, b = other[0]
        if b not in child_of or child_of[b] != a:
            return False
        if not (a % 2 == i % 2 and i < a):
            return False
    return True


def test_random_types_are_legal_optimal_and_structured():
    rng = random.Random(13)
    for _ in range(60):
        k = rng.randint(2, 6)
        c = [rng.randint(0, 4) for _ in range(k)]
        if sum(1 for x in c if x) < 2:
            continue
        desc = Diam4Descriptor(tuple(c))
        d = draw_diam4(desc)
        assert is_legal(d)
        assert crossing_count(d) == maxcr_diam4(desc)
        assert _missed_structure_ok(desc, d)


def test_plan_orders():
    plan = diam4_plan(Diam4Descriptor((2, 2, 2, 2, 2, 2)))
    x, a = plan.child_x, plan.anchors
    # x_1 < x_3 < x_5 < x_6 < x_4 < x_2 and x'_2 < x'_4 < x'_6 < 0 < x'_5 < x'_3 < x'_1
    assert x[0] < x[2] < x[4] < x[5] < x[3] < x[1]
    assert a[1] < a[3] < a[5] < 0 < a[4] < a[2] < a[0]


def test_formula_dispatch():
    assert formula_value(path_graph(5), classify_tree(path_graph(5))) == thrackle_bound(path_graph(5))
    t = Diam4Descriptor((3, 2, 2, 1)).tree()
    assert formula_value(t, classify_tree(t)) == 44
