import random
from fractions import Fraction

import pytest

from betagraph.generators import clique_minus_pm
from betagraph.graph import ProbeCounter, from_edge_list
from betagraph.mis import caro_wei_mis, degree_order, greedy_mis, mis_work_bound
from betagraph.verify import caro_wei_sum, is_maximal_independent_set, neighborhood_independence

from conftest import complete, cycle, path, random_graph, star


def textbook_greedy(g, order):
    """Independent oracle: admit v iff no admitted neighbor (no marks)."""
    chosen = []
    inside = set()
    for v in order:
        if not any(u in inside for u in g.neighbor_list(v)):
            chosen.append(v)
            inside.add(v)
    return chosen


def test_p3():
    mis, st = greedy_mis(path(3), [0, 1, 2])
    assert mis.members == [0, 2]
    assert st.marks_set == 2


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_clique_gives_first_vertex(n):
    order = list(range(n))
    random.Random(n).shuffle(order)
    mis, st = greedy_mis(complete(n), order)
    assert mis.members == [order[0]]
    assert st.marks_set == n - 1


def test_edgeless():
    mis, st = greedy_mis(from_edge_list([], 6))
    assert mis.members == list(range(6))
    assert st.marks_set == 0
    assert st.work == 6


def test_c5_identity_trace():
    mis, _ = greedy_mis(cycle(5))
    assert mis.members == [0, 2]
    assert mis.members == textbook_greedy(cycle(5), range(5))


def test_invalid_order():
    with pytest.raises(ValueError):
        greedy_mis(path(3), [0, 0, 1])
    with pytest.raises(ValueError):
        greedy_mis(path(3), [0, 1])


def test_agrees_with_textbook_greedy_and_is_maximal():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 25)
        g = random_graph(rng, n)
        order = list(range(n))
        rng.shuffle(order)
        pc = ProbeCounter()
        mis, st = greedy_mis(g, order, pc)
        assert mis.members == textbook_greedy(g, order)
        assert is_maximal_independent_set(g, mis)
        degsum = sum(g.degree(v) for v in mis)
        assert st.marks_set == degsum == pc.neighbor_probes
        assert st.work == st.vertices_scanned + st.marks_set == n + degsum
        assert pc.degree_probes == len(mis)


def test_work_bound_by_beta_on_small_graphs():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        beta = neighborhood_independence(g)
        _, st = greedy_mis(g)
        assert st.marks_set <= n * beta
        assert st.work <= mis_work_bound(g, beta)


def test_caro_wei_star_leaves_first():
    mis, _ = caro_wei_mis(star(4))
    assert sorted(mis.members) == [1, 2, 3, 4]


def test_caro_wei_c5():
    mis, _ = caro_wei_mis(cycle(5))
    assert caro_wei_sum(cycle(5)) == Fraction(5, 3)
    assert len(mis) >= 2


def test_caro_wei_edgeless_is_tight():
    g = from_edge_list([], 4)
    mis, _ = caro_wei_mis(g)
    assert len(mis) == 4 == caro_wei_sum(g)


def test_degree_order_is_stable_counting_sort():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 30))
        expected = sorted(range(g.n), key=lambda v: (g.degree(v), v))
        assert degree_order(g) == expected


def test_caro_wei_bound_on_random_graphs():
    rng = random.Random(99)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 20))
        mis, _ = caro_wei_mis(g)
        assert len(mis) >= caro_wei_sum(g)
        assert is_maximal_independent_set(g, mis)


def test_caro_wei_probe_accounting():
    g = cycle(7)
    pc = ProbeCounter()
    mis, st = caro_wei_mis(g, pc)
    assert pc.degree_probes == g.n + len(mis)
    assert pc.neighbor_probes == st.marks_set


@pytest.mark.parametrize(
    "n, beta, expected",
    [(100, 2, 300), (10, 0, 10), (5, 1, 10)],
)
def test_mis_work_bound(n, beta, expected):
    assert mis_work_bound(n, beta) == expected


def test_implicit_clique_minus_pm_work():
    g = clique_minus_pm(1000)
    mis, st = greedy_mis(g)
    assert mis.members == [0, 1]
    assert st.work == 1000 + 2 * 998
    assert st.work <= mis_work_bound(g, 2)
