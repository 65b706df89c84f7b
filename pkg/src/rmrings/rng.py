"""Deterministic splitmix64 generator used by all seeded campaigns.

The generator is pinned here, rather than taken from the standard library,
so that reports are reproducible bit for bit across runs, platforms and
reimplementations in other languages.  State update: add the 64-bit
golden-ratio constant, then finalize with the two-round mix below.

Trial independence: a campaign derives one sub-stream per trial by seeding
a fresh generator with the i-th output of a master stream seeded with the
campaign seed.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi]; modulo bias is negligible at desk scale."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)


def trial_streams(seed: int, count: int) -> list[SplitMix64]:
    """Independent per-trial generators derived from (seed, trial index)."""
    master = SplitMix64(seed)
    return [SplitMix64(master.next_u64()) for _ in range(count)]
