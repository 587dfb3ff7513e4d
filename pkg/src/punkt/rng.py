"""Counter-based 64-bit PRNG (splitmix64) used wherever a contract requires
cross-platform, cross-run determinism.

All data-pipeline randomness (speaker profiles, boundary jitter, source
mixing, speaker sampling, shuffling) flows through this generator rather
than a platform RNG, so corpora and synthesized audio are bit-stable
across machines.

The update rule is the standard splitmix64 sequence: the state advances by
the 64-bit golden-ratio constant and the output is produced by a
xor-shift/multiply avalanche of the new state.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """splitmix64 finalizer: a full-avalanche permutation of a 64-bit value."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _MIX1) & MASK64
    x = ((x ^ (x >> 27)) * _MIX2) & MASK64
    return x ^ (x >> 31)


def hash_bytes(data: bytes, seed: int = 0) -> int:
    """Deterministic 64-bit hash of a byte string (length-salted)."""
    h = mix64((seed & MASK64) ^ (len(data) * GOLDEN))
    for i in range(0, len(data), 8):
        chunk = int.from_bytes(data[i : i + 8], "little")
        h = mix64(h ^ chunk)
    return h


def derive_seed(*parts: int | str | bytes) -> int:
    """Fold arbitrary parts (ints, strings, bytes) into one 64-bit seed."""
    h = GOLDEN
    for p in parts:
        if isinstance(p, str):
            p = hash_bytes(p.encode("utf-8"))
        elif isinstance(p, bytes):
            p = hash_bytes(p)
        h = mix64(h ^ (p & MASK64))
    return h


class SplitMix:
    """Sequential splitmix64 stream."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        # 53 high bits -> double in [0, 1)
        u = (self.next_u64() >> 11) * (2.0**-53)
        return lo + (hi - lo) * u

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n). Modulo bias is < 2**-40 for any n
        this package uses and is accepted for determinism's sake."""
        if n <= 0:
            raise ValueError("randint needs n >= 1")
        return self.next_u64() % n

    def bernoulli(self, p: float) -> bool:
        return self.uniform() < p

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: list, k: int) -> list:
        """k distinct items, sampled without replacement."""
        if k > len(items):
            raise ValueError(f"cannot sample {k} from {len(items)} items")
        pool = list(items)
        picked = []
        for _ in range(k):
            idx = self.randint(len(pool))
            picked.append(pool.pop(idx))
        return picked
