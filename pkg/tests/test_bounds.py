import pytest
from hypothesis import given, settings

from conftest import atlas_corpus, connected_graphs, cycle, path, star
from eqdim.bounds import exceptional_graphs, full_bounds, is_isomorphic, literature_bounds
from eqdim.graph import all_pairs_distances, graph_stats
from eqdim.polytopes import gen_r2
from eqdim.solver import brute_force_eqdim


def _report(g, **kw):
    d = all_pairs_distances(g)
    return full_bounds(g, d, graph_stats(g, d, **kw))


def test_star_exact_one():
    r = _report(star(5))
    assert r.exact == 1 and r.lower == r.upper == 1


def test_p2():
    assert _report(path(2)).exact == 1


@pytest.mark.parametrize("g", list(exceptional_graphs()), ids=lambda g: g.name)
def test_exceptional_graphs(g):
    assert _report(g).exact == g.n - 2


def test_exceptional_is_up_to_isomorphism():
    relabeled = cycle(5)
    from eqdim.graph import build_graph

    h = build_graph("h", ["x", "y", "z", "w", "q"], [("x", "z"), ("z", "q"), ("q", "y"), ("y", "w"), ("w", "x")])
    assert is_isomorphic(relabeled, h)
    assert _report(h).exact == 3


def test_sources_are_named():
    r = _report(cycle(6))
    sources = {b.source for b in r.entries}
    assert {"trivial", "n - max degree", "diameter formula", "forced-pair matching"} <= sources
    assert all(b.kind in ("lower", "upper", "exact") for b in r.entries)


def test_large_order_bound():
    r = _report(cycle(9))
    assert any(b.source == "order at least 7" and b.value == 6 for b in r.uppers())


def test_r2_forced_pair_bound():
    r = _report(gen_r2(6))
    assert any(b.source == "forced-pair matching" and b.value == 18 for b in r.lowers())
    assert r.lower == 18


def test_clique_bound_skipped_above_cap():
    g = gen_r2(6)
    d = all_pairs_distances(g)
    r = literature_bounds(g, graph_stats(g, d, cap=10))
    assert not any(b.source == "n - clique number" for b in r.entries)


def test_independence_bound_only_for_diameter_two():
    r = _report(cycle(5))
    assert any(b.source == "n - independence number" and b.value == 3 for b in r.uppers())
    assert not any(b.source == "n - independence number" for b in _report(cycle(7)).entries)


def test_bounds_sound_on_atlas():
    for g in atlas_corpus(6):
        if g.n < 2:
            continue
        k, _ = brute_force_eqdim(g)
        r = _report(g, with_alpha=True)
        assert r.lower <= k <= r.upper, g.name
        if r.exact is not None:
            assert r.exact == k


@given(connected_graphs(min_n=7, max_n=9))
@settings(max_examples=25, deadline=None)
def test_bounds_sound_random(g):
    k, _ = brute_force_eqdim(g)
    r = _report(g, with_alpha=True)
    assert r.lower <= k <= r.upper
