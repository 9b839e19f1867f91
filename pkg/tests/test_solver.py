import pytest
from hypothesis import given, settings

from conftest import connected_graphs, cycle, path, star
from eqdim.errors import BudgetExceeded, SizeCapExceeded
from eqdim.graph import all_pairs_distances
from eqdim.hitting import is_distance_equalizer
from eqdim.polytopes import gen_r2, gen_s2, gen_t, generate
from eqdim.solver import brute_force_eqdim, default_budget, eqdim_exact, greedy_cover


@pytest.mark.parametrize(
    "g, value",
    [(cycle(4), 2), (cycle(5), 3), (cycle(6), 3), (cycle(7), 4), (path(6), 4), (star(5), 1)],
    ids=lambda x: getattr(x, "name", str(x)),
)
def test_small_values(g, value):
    r = eqdim_exact(g)
    assert r.exact and r.value == value
    assert brute_force_eqdim(g)[0] == value


def test_c6_brute_force_set():
    assert brute_force_eqdim(cycle(6)) == (3, (0, 2, 4))


def test_t5():
    r = eqdim_exact(gen_t(5))
    assert r.value == 10 and r.certificate.validate(all_pairs_distances(gen_t(5)))


def test_r2_6_root_closes():
    r = eqdim_exact(gen_r2(6))
    assert r.value == 18 and r.root_lower == 18


def test_odd_s2_closes():
    r = eqdim_exact(gen_s2(5))
    assert r.exact and r.lower >= 10


def test_budget_partial_result():
    g = generate("R2", 9)
    with pytest.raises(BudgetExceeded) as info:
        eqdim_exact(g, node_limit=10)
    part = info.value.partial
    assert not part.exact
    assert 27 <= part.lower < part.upper
    assert is_distance_equalizer(all_pairs_distances(g), part.S)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("EQDIM_TIME_LIMIT", "2.5")
    monkeypatch.setenv("EQDIM_NODE_LIMIT", "40")
    assert default_budget() == (2.5, 40)
    monkeypatch.delenv("EQDIM_TIME_LIMIT")
    monkeypatch.delenv("EQDIM_NODE_LIMIT")
    assert default_budget() == (None, None)


def test_root_closure_is_canonical_even_in_parallel():
    r = eqdim_exact(generate("R2", 5), parallel=True, workers=2)
    assert r.nodes == 0 and r.canonical and r.value == 15


def test_deterministic_set():
    g = generate("S", 7)
    assert eqdim_exact(g).S == eqdim_exact(g).S


def test_parallel_agrees():
    g = generate("S2", 7)
    seq = eqdim_exact(g)
    assert seq.root_lower < seq.value
    par = eqdim_exact(g, parallel=True, workers=2)
    assert par.value == seq.value
    assert par.parallel and not par.canonical
    assert seq.canonical


def test_brute_force_cap():
    with pytest.raises(SizeCapExceeded):
        brute_force_eqdim(gen_t(5))
    # a tight upper bound keeps the enumeration small enough
    assert brute_force_eqdim(star(17), upper_bound=1)[0] == 1


def test_greedy_cover_hits_everything():
    sets = [0b011, 0b110, 0b100]
    cover = greedy_cover(sets, 3)
    assert all(s & sum(1 << v for v in cover) for s in sets)


@given(connected_graphs(max_n=10))
@settings(max_examples=80, deadline=None)
def test_matches_brute_force(g):
    r = eqdim_exact(g)
    k, _ = brute_force_eqdim(g)
    assert r.value == k
    assert len(r.S) == k and r.certificate.validate(all_pairs_distances(g))
