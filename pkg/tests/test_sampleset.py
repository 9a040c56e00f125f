import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import chisquare

from betagraph.sampleset import ABSENT, SampleSet


def test_new_full():
    assert len(SampleSet.new_full(0)) == 0
    s = SampleSet.new_full(3)
    assert all(s.contains(i) for i in range(3))
    assert s.a1 == [0, 1, 2] and s.a2 == [0, 1, 2]


def test_remove_traces_swap_with_last():
    # hand trace: hole at a2[0]=0 takes the last member a1[2]=2
    s = SampleSet.new_full(3)
    s.remove(0)
    assert s.size == 2
    assert s.a1[:2] == [2, 1]
    assert s.a2[0] == ABSENT and s.a2[2] == 0 and s.a2[1] == 1
    s.check_invariants()


def test_remove_last_member():
    s = SampleSet.new_full(1)
    s.remove(0)
    assert len(s) == 0 and not s


def test_remove_errors():
    s = SampleSet.new_full(3)
    with pytest.raises(KeyError):
        s.remove(5)
    s.remove(1)
    with pytest.raises(KeyError):
        s.remove(1)


def test_sample_singleton_and_empty():
    s = SampleSet.new_full(8)
    for i in range(7):
        s.remove(i)
    rng = random.Random(0)
    assert {s.sample(rng) for _ in range(50)} == {7}
    s.remove(7)
    with pytest.raises(IndexError):
        s.sample(rng)


def test_sample_two_elements_balanced():
    s = SampleSet.new_full(2)
    rng = random.Random(12345)
    draws = 10**5
    freq = Counter(s.sample(rng) for _ in range(draws))
    for i in (0, 1):
        assert abs(freq[i] / draws - 0.5) <= 0.01


def test_contains():
    s = SampleSet.new_full(3)
    assert s.contains(2)
    s.remove(2)
    assert not s.contains(2)
    with pytest.raises(IndexError):
        s.contains(3)


def test_chi_square_uniformity():
    s = SampleSet.new_full(100)
    rng = random.Random(2024)
    draws = 10**6
    counts = Counter(s.sample(rng) for _ in range(draws))
    stat = chisquare([counts[i] for i in range(100)])
    assert stat.pvalue > 0.001


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 60), st.integers(0, 2**32 - 1))
def test_matches_naive_set(n, seed):
    rng = random.Random(seed)
    s = SampleSet.new_full(n)
    naive = set(range(n))
    for _ in range(10**4 // 25):
        op = rng.randrange(3)
        x = rng.randrange(n)
        if op == 0 and x in naive:
            s.remove(x)
            naive.discard(x)
        elif op == 1:
            assert s.contains(x) == (x in naive)
        elif naive:
            assert s.sample(rng) in naive
        assert len(s) == len(naive)
        assert set(s) == naive
    s.check_invariants()


def test_long_interleaving_against_naive_set():
    rng = random.Random(7)
    n = 200
    s = SampleSet.new_full(n)
    naive = set(range(n))
    for _ in range(10**4):
        op = rng.randrange(3)
        x = rng.randrange(n)
        if op == 0 and x in naive:
            s.remove(x)
            naive.discard(x)
            s.check_invariants()
        elif op == 1:
            assert s.contains(x) == (x in naive)
        elif naive:
            assert s.sample(rng) in naive
        assert len(s) == len(naive)
