"""Self-contained 64-bit PRNG: splitmix64 seeding feeding xoshiro256**.

Python's own ``random`` module is avoided on purpose: corpus regeneration
and the seeded suites must be bit-identical across platforms and Python
versions, so the algorithm is pinned here.  Bounded draws use the
multiply-shift reduction (floor(next * n / 2^64)), which is deterministic
and unbiased enough for instance generation.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1


def _splitmix64(state: int):
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


class Xoshiro256StarStar:
    """xoshiro256** with state derived from a 64-bit seed via splitmix64."""

    __slots__ = ("s",)

    def __init__(self, seed: int):
        state = seed & _MASK
        s = []
        for _ in range(4):
            state, word = _splitmix64(state)
            s.append(word)
        self.s = s

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self.s
        result = (_rotl((s1 * 5) & _MASK, 7) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self.s = [s0, s1, s2, s3]
        return result

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n)."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return (self.next_u64() * n) >> 64

    def randint(self, a: int, b: int) -> int:
        """Uniform-ish draw in [a, b] inclusive."""
        return a + self.below(b - a + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, seq: list):
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num
