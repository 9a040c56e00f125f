import itertools
import random
from collections import deque

import numpy as np
import pytest

from betagraph import generators as gen
from betagraph.generators import GenSpec, family_beta_bound, generate
from betagraph.graph import from_edge_list
from betagraph.verify import neighborhood_independence

from conftest import complete, path, random_graph, star


def components(g):
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, q = [], deque([s])
        seen[s] = True
        while q:
            v = q.popleft()
            comp.append(v)
            for u in g.neighbor_list(v):
                if not seen[u]:
                    seen[u] = True
                    q.append(u)
        out.append(sorted(comp))
    return out


def is_c4(g, verts):
    return len(verts) == 4 and all(
        len([u for u in g.neighbor_list(v) if u in verts]) == 2 for v in verts
    )


def test_triangle_decode_is_exact():
    for n in (2, 3, 7, 50, 1001):
        pairs = list(itertools.combinations(range(n), 2))
        u, v = gen._triangle_decode(np.arange(len(pairs)), n)
        assert list(zip(u.tolist(), v.tolist())) == pairs


def test_line_graph_examples():
    lp3 = gen.line_graph(path(3))
    assert lp3.n == 2 and lp3.m == 1
    assert gen.line_graph(complete(3)) == complete(3)
    assert gen.line_graph(star(4)) == complete(4)
    with pytest.raises(ValueError):
        gen.line_graph(from_edge_list([], 3))


def test_line_graph_adjacency_definition():
    rng = random.Random(9)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 10))
        if g.m == 0:
            continue
        lg = gen.line_graph(g)
        edges = list(g.edges())
        for i, j in itertools.combinations(range(len(edges)), 2):
            assert lg.has_edge(i, j) == bool(set(edges[i]) & set(edges[j]))


def test_hyper_line_graph_examples():
    assert gen.hyper_line_graph([{0, 1, 2}, {3, 4, 5}, {6, 7, 8}], 3).m == 0
    assert gen.hyper_line_graph([{1, 2, 3}, {3, 4, 5}, {5, 6, 1}], 3) == complete(3)
    sunflower = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}]
    assert gen.hyper_line_graph(sunflower, 3) == complete(4)
    with pytest.raises(ValueError):
        gen.hyper_line_graph([{1, 2, 3, 4}], 3)


def test_clique_minus_pm_examples():
    c4 = gen.clique_minus_pm(4)
    assert is_c4(c4, [0, 1, 2, 3])
    assert c4.removed_pairs() == [(0, 1), (2, 3)]
    assert gen.clique_minus_pm(2).m == 0
    g10 = gen.clique_minus_pm(10)
    assert g10.degrees() == [8] * 10
    assert neighborhood_independence(g10) == 2
    with pytest.raises(ValueError):
        gen.clique_minus_pm(5)


def test_unit_interval_limits():
    g = gen.unit_interval(12, 1.0, 2.0, seed=1)
    assert g == complete(12)
    assert gen.unit_interval(12, 1.0, 1e-12, seed=1).m == 0
    with pytest.raises(ValueError):
        gen.unit_interval(5, 1.0, 0.0)


def test_unit_interval_adjacency():
    x = np.random.default_rng(4).uniform(0, 1.0, size=30)
    g = gen.unit_interval(30, 1.0, 0.1, seed=4)
    for u, v in itertools.combinations(range(30), 2):
        assert g.has_edge(u, v) == (abs(x[u] - x[v]) <= 0.1)


def test_unit_disk_limits_and_adjacency():
    assert gen.unit_disk(10, 1.0, 2.0, seed=0) == complete(10)
    assert gen.unit_disk(10, 1.0, 1e-12, seed=0).m == 0
    pts = np.random.default_rng(5).uniform(0, 1.0, size=(40, 2))
    g = gen.unit_disk(40, 1.0, 0.2, seed=5)
    for u, v in itertools.combinations(range(40), 2):
        assert g.has_edge(u, v) == (np.linalg.norm(pts[u] - pts[v]) <= 0.2)


def test_regular_bipartite():
    g = gen.regular_bipartite(6, 1, seed=0)
    assert g.m == 6 and g.degrees() == [1] * 12
    kb = gen.regular_bipartite(5, 5, seed=0)
    assert set(kb.edges()) == {(i, 5 + j) for i in range(5) for j in range(5)}
    for d in range(1, 6):
        g = gen.regular_bipartite(6, d, seed=d)
        g.validate()
        assert g.degrees() == [d] * 12
        assert all(u < 6 <= v for u, v in g.edges())
        assert neighborhood_independence(g) == d
    with pytest.raises(ValueError):
        gen.regular_bipartite(4, 5)


def test_hard_union():
    single = gen.hard_union(1, 6, seed=3)
    assert single.degrees() == [4] * 6
    g = gen.hard_union(3, 4, seed=0)
    assert g.n == 12
    comps = components(g)
    assert len(comps) == 3
    assert all(is_c4(g, c) for c in comps)
    assert neighborhood_independence(g) == 2
    with pytest.raises(ValueError):
        gen.hard_union(2, 5)


def test_er_random_density():
    g = gen.er_random(400, 0.05, seed=1)
    g.validate()
    expected = 0.05 * 400 * 399 / 2
    assert abs(g.m - expected) < 5 * (expected ** 0.5)
    assert gen.er_random(10, 0.0, seed=0).m == 0
    assert gen.er_random(10, 1.0, seed=0) == complete(10)


def test_random_line_graph_size():
    g = gen.random_line_graph(500, 8.0, seed=2)
    assert g.n == 500
    g.validate()


SMALL_FAMILIES = {
    "line_graph": lambda s: gen.random_line_graph(s.randint(1, 14), s.uniform(1.5, 5), seed=s.randrange(2**31)),
    "hyper_line_graph": lambda s: gen.random_hyper_line_graph(s.randint(1, 14), 3, s.randint(3, 12), seed=s.randrange(2**31)),
    "clique": lambda s: gen.clique(s.randint(1, 14)),
    "clique_minus_pm": lambda s: gen.clique_minus_pm(2 * s.randint(1, 7), seed=s.randrange(2**31)),
    "unit_interval": lambda s: gen.unit_interval(s.randint(1, 12), 1.0, s.uniform(0.05, 0.6), seed=s.randrange(2**31)),
    "unit_disk": lambda s: gen.unit_disk(s.randint(1, 14), 1.0, s.uniform(0.1, 0.7), seed=s.randrange(2**31)),
    "regular_bipartite": lambda s: gen.regular_bipartite(7, s.randint(0, 7), seed=s.randrange(2**31)),
    "hard_union": lambda s: gen.hard_union(s.randint(1, 3), 2 * s.randint(1, 2), seed=s.randrange(2**31)),
}

BOUNDS = {
    "line_graph": 2, "hyper_line_graph": 3, "clique": 1, "clique_minus_pm": 2,
    "unit_interval": 2, "unit_disk": 5, "hard_union": 2,
}


@pytest.mark.parametrize("family", sorted(SMALL_FAMILIES))
def test_family_beta_bounds_on_small_instances(family):
    s = random.Random(hash(family) % 1000)
    for _ in range(1000):
        g = SMALL_FAMILIES[family](s)
        assert g.n <= 14
        g.validate()
        beta = neighborhood_independence(g)
        if family == "regular_bipartite":
            assert beta == g.degrees()[0]
        else:
            assert beta <= BOUNDS[family]


@pytest.mark.parametrize("family", gen.FAMILIES)
def test_generate_is_deterministic_and_valid(family):
    spec = GenSpec(family, 60, seed=11)
    a, b = generate(spec), generate(spec)
    assert a == b
    a.validate()
    bound = family_beta_bound(spec, a)
    if bound is not None and a.n <= 60:
        assert neighborhood_independence(a, max_degree=60) <= bound


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec("nope", 10)
    with pytest.raises(ValueError):
        GenSpec("clique", 10, {"d": 3})
    with pytest.raises(ValueError):
        GenSpec("clique", -1)
