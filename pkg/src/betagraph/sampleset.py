"""Shrinking set over {0..n-1} with O(1) sample, remove and membership."""

from __future__ import annotations

import random

ABSENT = -1


class SampleSet:
    """Two-array set.

    ``a1[:size]`` holds the current members; ``a2[i]`` is the position of ``i``
    in ``a1`` or ``ABSENT``.  Removal swaps the last member into the hole.
    """

    __slots__ = ("a1", "a2", "size")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.a1 = list(range(n))
        self.a2 = list(range(n))
        self.size = n

    @classmethod
    def new_full(cls, n: int) -> "SampleSet":
        return cls(n)

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.size > 0

    def __iter__(self):
        return iter(self.a1[: self.size])

    def __contains__(self, i: int) -> bool:
        return self.contains(i)

    def contains(self, i: int) -> bool:
        if not 0 <= i < len(self.a2):
            raise IndexError(f"element {i} out of range [0, {len(self.a2)})")
        return self.a2[i] != ABSENT

    def remove(self, i: int) -> None:
        a2 = self.a2
        if not 0 <= i < len(a2) or a2[i] == ABSENT:
            raise KeyError(i)
        a1 = self.a1
        pos = a2[i]
        self.size -= 1
        last = a1[self.size]
        a1[pos] = last
        a2[last] = pos
        a2[i] = ABSENT

    def sample(self, rng: random.Random) -> int:
        if self.size == 0:
            raise IndexError("sample from an empty set")
        return self.a1[rng.randrange(self.size)]

    def check_invariants(self) -> None:
        a1, a2, size = self.a1, self.a2, self.size
        for p in range(size):
            assert a2[a1[p]] == p, f"a2[a1[{p}]] != {p}"
        present = 0
        for i, p in enumerate(a2):
            if p != ABSENT:
                present += 1
                assert 0 <= p < size and a1[p] == i, f"bad back-index for {i}"
        assert present == size, "size does not match the number of members"
