"""Seeded xorshift-style generator so random trials replay bit-exactly anywhere."""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph

_MASK = (1 << 64) - 1


class XorShift64Star:
    """Marsaglia xorshift64* with a splitmix-style seed scrambler."""

    def __init__(self, seed):
        s = (int(seed) + 0x9E3779B97F4A7C15) & _MASK
        s ^= s >> 30
        s = (s * 0xBF58476D1CE4E5B9) & _MASK
        s ^= s >> 27
        s = (s * 0x94D049BB133111EB) & _MASK
        self.state = (s ^ (s >> 31)) or 0x2545F4914F6CDD1D

    def u64(self):
        x = self.state
        x ^= (x >> 12)
        x ^= (x << 25) & _MASK
        x ^= (x >> 27)
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def randrange(self, n):
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        threshold = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.u64()
            if x < threshold:
                return x % n

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi]."""
        return lo + self.randrange(hi - lo + 1)

    def chance(self, num, den):
        return self.randrange(den) < num

    def random_graph(self, n, edge_prob_percent=50):
        pairs = list(combinations(range(n), 2))
        edges = tuple(p for p in pairs if self.chance(edge_prob_percent, 100))
        return Graph(n, edges)

    def random_symmetric_int_matrix(self, n, lo=-5, hi=5):
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = self.randint(lo, hi)
        return m

    def shuffle(self, items):
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
        return items
