"""SplitMix64, the one pseudo-random source used for sampling and restarts.

Output ``k`` (``k = 1, 2, ...``) of the stream seeded with ``s`` is
``mix(s + k * 0x9E3779B97F4A7C15 mod 2^64)`` where::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with all arithmetic modulo 2^64. A uniform double in ``[0, 1)`` is
``(z >> 11) * 2^-53``.
"""

from __future__ import annotations

import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
MASK64 = (1 << 64) - 1


def splitmix64(seed, count, offset=0):
    """Outputs ``offset+1 .. offset+count`` of the stream as a uint64 array."""
    state = np.uint64(int(seed) & MASK64)
    k = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = state + k * GOLDEN
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    return z ^ (z >> np.uint64(31))


def uniform(seed, count, offset=0):
    """Uniform doubles in ``[0, 1)`` from the stream."""
    z = splitmix64(seed, count, offset)
    return (z >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
