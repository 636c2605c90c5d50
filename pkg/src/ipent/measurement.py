"""Joint particle-number measurements on two-particle states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, ZeroProbabilityEvent
from .rng import uniform
from .states import fock_amplitudes

DROP_BELOW = 1e-15


@dataclass(frozen=True)
class NumberDistribution:
    """Occupation vector -> probability, kept in the fixed occupation order."""

    entries: dict

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))

    def __getitem__(self, occupation):
        return self.entries.get(tuple(occupation), 0.0)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return self.entries.items()

    @property
    def total(self):
        return float(sum(self.entries.values()))

    def marginal(self, mode):
        out = {}
        for occ, p in self.entries.items():
            out[occ[mode]] = out.get(occ[mode], 0.0) + p
        return dict(sorted(out.items(), reverse=True))


def joint_distribution(state):
    probs = {}
    for occ, amp in fock_amplitudes(state).items():
        p = abs(amp) ** 2
        if p >= DROP_BELOW:
            probs[occ] = float(p)
    return NumberDistribution(probs)


def conditional_distribution(dist: NumberDistribution, mode, observed):
    """Distribution given that ``mode`` was found holding ``observed`` particles."""
    kept = {occ: p for occ, p in dist.items() if occ[mode] == observed}
    weight = sum(kept.values())
    if weight <= 0.0:
        raise ZeroProbabilityEvent(f"P(n_{mode} = {observed}) = 0")
    return NumberDistribution({occ: p / weight for occ, p in kept.items()})


def sample(dist: NumberDistribution, n, seed):
    """Draw ``n`` outcomes by inverse CDF over the distribution's order.

    Draw ``k`` uses SplitMix64 output ``k`` of ``seed``; ``u`` falls in outcome
    ``i`` when ``cdf[i-1] <= u < cdf[i]``.
    """
    if n < 1:
        raise InvalidInput("need at least one sample")
    outcomes = list(dist)
    cdf = np.cumsum([dist.entries[o] for o in outcomes])
    u = uniform(seed, n)
    idx = np.minimum(np.searchsorted(cdf, u, side="right"), len(outcomes) - 1)
    counts = np.bincount(idx, minlength=len(outcomes))
    return {o: int(c) for o, c in zip(outcomes, counts)}
