import pytest

from extremalkit.anneal import AnnealParams, PlacementError, anneal_max_crossings
from extremalkit.drawings import draw_diam4, maxcr_diam4, maxcr_spider
from extremalkit.geometry import crossing_count, is_legal
from extremalkit.graphs import Diam4Descriptor, SpiderDescriptor, path_graph


def test_spider_reaches_formula():
    d, count = anneal_max_crossings(SpiderDescriptor((2, 2, 2)).tree())
    assert count == 8 == maxcr_spider((2, 2, 2))
    assert is_legal(d) and crossing_count(d) == 8


def test_path_reaches_thrackle_bound():
    assert anneal_max_crossings(path_graph(4), AnnealParams(iterations=3000))[1] == 1


def test_diam4_matches_construction():
    desc = Diam4Descriptor((1, 1, 1))
    _, count = anneal_max_crossings(desc.tree(), AnnealParams(target=maxcr_diam4(desc)))
    assert count == 8 == crossing_count(draw_diam4(desc))


def test_deterministic_for_fixed_seed():
    t = SpiderDescriptor((3, 2, 1)).tree()
    p = AnnealParams(iterations=2000, restarts=2, seed=7)
    assert anneal_max_crossings(t, p) == anneal_max_crossings(t, p)


def test_parallel_matches_sequential(monkeypatch):
    t = SpiderDescriptor((2, 2, 1)).tree()
    p = AnnealParams(iterations=1500, restarts=3, seed=3)
    seq = anneal_max_crossings(t, p)
    monkeypatch.setenv("EXTREMALKIT_THREADS", "2")
    assert anneal_max_crossings(t, p) == seq


def test_never_exceeds_formula_on_larger_trees():
    for legs in ((3, 3, 2, 2), (4, 2, 2, 1)):
        _, count = anneal_max_crossings(SpiderDescriptor(legs).tree(), AnnealParams(iterations=4000, restarts=2))
        assert count <= maxcr_spider(legs)
    desc = Diam4Descriptor((3, 2, 2, 1))
    _, count = anneal_max_crossings(desc.tree(), AnnealParams(iterations=4000, restarts=2))
    assert count <= maxcr_diam4(desc)


def test_grid_too_small():
    with pytest.raises(PlacementError):
        anneal_max_crossings(SpiderDescriptor((3, 3, 3)).tree(), AnnealParams(grid=1))


def test_param_validation():
    with pytest.raises(ValueError):
        AnnealParams(iterations=0)
    with pytest.raises(ValueError):
        AnnealParams(t_start=0.1, t_end=1.0)
