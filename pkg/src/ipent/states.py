"""Second-quantized one- and two-particle states over N modes.

A two-particle state ``sum_ij omega_ij a_i^+ a_j^+ |0>`` is stored by its
coefficient matrix. With the convention used here its squared norm is
``2 Tr(omega omega^H)`` for both statistics, and the Fock amplitudes are

* boson, both particles in mode i: ``sqrt(2) omega_ii``
* boson or fermion, one particle in i and one in j (i < j): ``2 omega_ij``
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidInput,
    NotAntisymmetric,
    NotSymmetric,
    StatisticsMismatch,
    ZeroState,
)
from .matfact import STRUCTURE_TOL, as_matrix, is_antisymmetric, is_symmetric

ZERO_NORM = 1e-14
SQRT2 = np.sqrt(2.0)


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.flags.writeable = False
    return a


def _check_norm(sq, allow_zero):
    if not allow_zero and sq <= ZERO_NORM:
        raise ZeroState(f"squared norm {sq:.3e} is too small")


@dataclass(frozen=True)
class TwoBosonState:
    """Two identical bosons; ``omega`` is symmetrized on construction."""

    omega: np.ndarray
    allow_zero: bool = field(default=False, repr=False, compare=False)

    statistics = "boson"

    def __post_init__(self):
        m = as_matrix(self.omega, "omega")
        if m.shape[0] != m.shape[1]:
            raise InvalidInput(f"omega must be square, got shape {m.shape}")
        if not is_symmetric(m, STRUCTURE_TOL):
            raise NotSymmetric("boson coefficient matrix is not symmetric")
        m = _frozen((m + m.T) / 2)
        object.__setattr__(self, "omega", m)
        _check_norm(self.norm_sq, self.allow_zero)

    @property
    def modes(self):
        return self.omega.shape[0]

    @property
    def norm_sq(self):
        return float(2.0 * np.vdot(self.omega, self.omega).real)

    def with_omega(self, omega, allow_zero=False):
        return TwoBosonState(omega, allow_zero=allow_zero)


@dataclass(frozen=True)
class TwoFermionState:
    """Two identical fermions; ``omega`` is antisymmetrized on construction."""

    omega: np.ndarray
    allow_zero: bool = field(default=False, repr=False, compare=False)

    statistics = "fermion"

    def __post_init__(self):
        m = as_matrix(self.omega, "omega")
        if m.shape[0] != m.shape[1]:
            raise InvalidInput(f"omega must be square, got shape {m.shape}")
        if not is_antisymmetric(m, STRUCTURE_TOL):
            raise NotAntisymmetric("fermion coefficient matrix is not antisymmetric")
        m = _frozen((m - m.T) / 2)
        object.__setattr__(self, "omega", m)
        _check_norm(self.norm_sq, self.allow_zero)

    @property
    def modes(self):
        return self.omega.shape[0]

    @property
    def norm_sq(self):
        return float(2.0 * np.vdot(self.omega, self.omega).real)

    def with_omega(self, omega, allow_zero=False):
        return TwoFermionState(omega, allow_zero=allow_zero)


@dataclass(frozen=True)
class SingleParticleState:
    """``sum_i c_i a_i^+ |0>``."""

    vector: np.ndarray
    allow_zero: bool = field(default=False, repr=False, compare=False)

    statistics = "single"

    def __post_init__(self):
        v = np.array(self.vector, dtype=complex)
        if v.ndim != 1 or v.size < 1:
            raise InvalidInput(f"vector must be non-empty and 1-d, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise InvalidInput("vector has non-finite entries")
        object.__setattr__(self, "vector", _frozen(v))
        _check_norm(self.norm_sq, self.allow_zero)

    @property
    def modes(self):
        return self.vector.size

    @property
    def norm_sq(self):
        return float(np.vdot(self.vector, self.vector).real)

    def with_vector(self, vector, allow_zero=False):
        return SingleParticleState(vector, allow_zero=allow_zero)


def boson(omega):
    return TwoBosonState(omega)


def fermion(omega):
    return TwoFermionState(omega)


def single(vector):
    return SingleParticleState(vector)


def boson_product(c, d):
    """Coefficient-matrix state of ``c^+ d^+ |0>`` for mode vectors ``c``, ``d``."""
    c, d = np.asarray(c, dtype=complex), np.asarray(d, dtype=complex)
    return TwoBosonState((np.outer(c, d) + np.outer(d, c)) / 2)


def fermion_product(c, d):
    c, d = np.asarray(c, dtype=complex), np.asarray(d, dtype=complex)
    return TwoFermionState((np.outer(c, d) - np.outer(d, c)) / 2)


def normalize(state):
    """Rescale to unit norm (``2 Tr(omega omega^H) = 1`` for pairs)."""
    sq = state.norm_sq
    if sq <= ZERO_NORM:
        raise ZeroState(f"squared norm {sq:.3e} is too small to normalize")
    if isinstance(state, SingleParticleState):
        return state.with_vector(state.vector / np.sqrt(sq))
    return state.with_omega(state.omega / np.sqrt(sq))


def occupations(modes, statistics):
    """Two-particle occupation vectors in the fixed output order.

    The order is descending lexicographic: ``(2,0,0), (1,1,0), (1,0,1),
    (0,2,0), ...``; fermions skip double occupancy.
    """
    out = []
    for i in range(modes):
        start = i if statistics == "boson" else i + 1
        for j in range(start, modes):
            counts = [0] * modes
            counts[i] += 1
            counts[j] += 1
            out.append(((i, j), tuple(counts)))
    return out


def fock_amplitudes(state, drop_zeros=True):
    """Map occupation vector -> complex amplitude, in the fixed order."""
    if isinstance(state, SingleParticleState):
        out = {}
        for i, c in enumerate(state.vector):
            if c != 0 or not drop_zeros:
                counts = [0] * state.modes
                counts[i] = 1
                out[tuple(counts)] = complex(c)
        return out
    w = state.omega
    out = {}
    for (i, j), counts in occupations(state.modes, state.statistics):
        amp = SQRT2 * w[i, i] if i == j else 2.0 * w[i, j]
        if amp != 0 or not drop_zeros:
            out[counts] = complex(amp)
    return out


def omega_from_fock(amplitudes, modes, statistics):
    """Inverse of :func:`fock_amplitudes` for two-particle states."""
    w = np.zeros((modes, modes), dtype=complex)
    sign = 1.0 if statistics == "boson" else -1.0
    for counts, amp in amplitudes.items():
        occupied = [k for k, n in enumerate(counts) for _ in range(n)]
        if len(counts) != modes or len(occupied) != 2:
            raise InvalidInput(f"bad occupation vector {counts}")
        i, j = occupied
        if i == j:
            if statistics != "boson":
                raise InvalidInput("fermion occupation count above 1")
            w[i, i] = amp / SQRT2
        else:
            w[i, j] = amp / 2.0
            w[j, i] = sign * amp / 2.0
    return w


def _check_compatible(a, b):
    if a.statistics != b.statistics:
        raise StatisticsMismatch(f"{a.statistics} vs {b.statistics}")
    if a.modes != b.modes:
        raise DimensionMismatch(f"{a.modes} modes vs {b.modes} modes")


def overlap(a, b):
    """Inner product ``<a|b>`` computed from the Fock amplitudes."""
    _check_compatible(a, b)
    fa = fock_amplitudes(a)
    fb = fock_amplitudes(b)
    return complex(sum(np.conj(amp) * fb[k] for k, amp in fa.items() if k in fb))


def inner(a, b):
    """``<a|b>`` from coefficient arrays; no normalization assumed."""
    _check_compatible(a, b)
    if isinstance(a, SingleParticleState):
        return complex(np.vdot(a.vector, b.vector))
    return complex(2.0 * np.vdot(a.omega, b.omega))


def transform_modes(state, v):
    """Change of mode basis ``a_i^+ -> sum_k v_ki a_k^+`` (``omega -> V omega V^T``)."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (state.modes, state.modes):
        raise DimensionMismatch(f"basis change of shape {v.shape} for {state.modes} modes")
    if isinstance(state, SingleParticleState):
        return state.with_vector(v @ state.vector)
    return state.with_omega(v @ state.omega @ v.T)
