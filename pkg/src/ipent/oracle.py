"""Separability check by direct search over product states.

Independent of the factorization path: only matrix-vector products are used.
For a normalized pair state with coefficient matrix ``omega`` and
``M = conj(omega)``:

* overlap with the normalized ``c^+ c^+ |0>`` is ``sqrt(2) |c^T M c|``
* overlap with ``c^+ d^+ |0>`` for orthonormal ``c, d`` is ``2 |c^T M d|``

Both are maximized by monotone local ascent from seeded random starts; the
state is separable when either reaches 1. All restarts are iterated together
as rows of one array, each from its own derived seed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .rng import splitmix64, uniform
from .states import TwoBosonState, TwoFermionState

DEFAULT_EPS = 1e-7
DEFAULT_RESTARTS = 32
MAX_ITER = 2000
STALL_TOL = 1e-15
TINY = 1e-150


class Branch(str, enum.Enum):
    SAME_MODE = "SameMode"
    ORTHOGONAL_PAIR = "OrthogonalPair"


@dataclass(frozen=True)
class OracleVerdict:
    separable: bool
    best_overlap: float
    witness: tuple | None
    branch: Branch
    restarts_used: int


def _unit_rows(x):
    n = np.linalg.norm(x, axis=1, keepdims=True)
    return x / np.where(n > TINY, n, 1.0)


def _starts(seed, restarts, modes):
    """Two random complex unit vectors per restart, each restart from its own seed."""
    xs, ys = [], []
    for rseed in splitmix64(seed, restarts):
        u = 2.0 * uniform(int(rseed), 4 * modes) - 1.0
        xs.append(u[:modes] + 1j * u[modes:2 * modes])
        ys.append(u[2 * modes:3 * modes] + 1j * u[3 * modes:])
    x = _unit_rows(np.array(xs))
    y = np.array(ys)
    y = _unit_rows(y - x * np.sum(x.conj() * y, axis=1, keepdims=True))
    return x, y


def _bilinear(x, m, y):
    """Row-wise ``x^T M y``."""
    return np.sum(x * (y @ m.T), axis=1)


def _project_out(v, x):
    """Row-wise ``v - x (x^H v)``."""
    return v - x * np.sum(x.conj() * v, axis=1, keepdims=True)


def _same_mode_search(m, x):
    """Maximize ``|c^T M c|`` by a shifted fixed-point iteration.

    With ``theta = arg(c^T M c)`` the update ``c <- e^{i theta} conj(M c) + s c``
    is a power step on a real symmetric operator with spectrum ``+-sigma_k``
    shifted by ``s >= sigma_1``, which never decreases the objective.
    """
    shift = np.linalg.norm(m)
    val = np.abs(_bilinear(x, m, x))
    for _ in range(MAX_ITER):
        mx = x @ m.T
        g = np.sum(x * mx, axis=1)
        ph = np.where(np.abs(g) > TINY, g / np.where(np.abs(g) > TINY, np.abs(g), 1.0), 1.0)
        cand = _unit_rows(ph[:, None] * mx.conj() + shift * x)
        cval = np.abs(_bilinear(cand, m, cand))
        better = cval > val
        gain = np.where(better, cval - val, 0.0)
        x = np.where(better[:, None], cand, x)
        val = np.where(better, cval, val)
        if np.all(gain <= STALL_TOL):
            break
    return np.sqrt(2.0) * val, x


def _coordinate_step(m, fixed):
    """Best unit partner orthogonal to each row of ``fixed`` for ``|fixed^T M y|``."""
    v = _project_out((fixed @ m).conj(), fixed)
    norm = np.linalg.norm(v, axis=1)
    return v / np.where(norm > TINY, norm, 1.0)[:, None], norm > TINY


def _plane_step(m, x, y):
    """Best orthonormal pair inside ``span(x, y)`` for ``|p^T M q|`` (boson case).

    In plane coordinates ``p = (a, b)``, ``q = (-conj b, a)`` the objective is
    ``|w . n|`` with ``n`` the real unit Bloch vector of ``p`` and
    ``w = ((m22 - m11)/2, -i (m11 + m22)/2, m12)``.
    """
    m11 = _bilinear(x, m, x)
    m12 = _bilinear(x, m, y)
    m22 = _bilinear(y, m, y)
    w = np.stack([(m22 - m11) / 2, -0.5j * (m11 + m22), m12], axis=1)
    u, v = w.real, w.imag
    guu = np.sum(u * u, axis=1)
    guv = np.sum(u * v, axis=1)
    gvv = np.sum(v * v, axis=1)
    psi = 0.5 * np.arctan2(2.0 * guv, guu - gvv)
    n = np.cos(psi)[:, None] * u + np.sin(psi)[:, None] * v
    nn = np.linalg.norm(n, axis=1)
    ok = nn > TINY
    n = n / np.where(ok, nn, 1.0)[:, None]
    n = np.where(ok[:, None], n, np.array([0.0, 0.0, 1.0]))
    a = np.sqrt(np.clip((1.0 + n[:, 2]) / 2.0, 0.0, 1.0))
    safe = a > 1e-150
    b = np.where(safe, (n[:, 0] - 1j * n[:, 1]) / (2.0 * np.where(safe, a, 1.0)), 1.0)
    p = a[:, None] * x + b[:, None] * y
    q = -b.conj()[:, None] * x + a[:, None] * y
    return _unit_rows(p), _unit_rows(_project_out(q, _unit_rows(p)))


def _pair_search(m, x, y, plane):
    """Maximize ``2 |x^T M y|`` over orthonormal ``x, y`` by block ascent."""
    val = np.abs(_bilinear(x, m, y))

    def accept(nx, ny, x, y, val):
        nval = np.abs(_bilinear(nx, m, ny))
        better = nval > val
        return (np.where(better[:, None], nx, x), np.where(better[:, None], ny, y),
                np.where(better, nval, val))

    for _ in range(MAX_ITER):
        start = val.copy()
        ny, ok = _coordinate_step(m, x)
        x, y, val = accept(x, np.where(ok[:, None], ny, y), x, y, val)
        if plane:
            x, y, val = accept(*_plane_step(m, x, y), x, y, val)
        nx, ok = _coordinate_step(m, y)
        x, y, val = accept(np.where(ok[:, None], nx, x), y, x, y, val)
        if plane:
            x, y, val = accept(*_plane_step(m, x, y), x, y, val)
        if np.all(val - start <= STALL_TOL):
            break
    return 2.0 * val, x, y


def oracle_separability(state, restarts=DEFAULT_RESTARTS, eps_oracle=DEFAULT_EPS, seed=0):
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if not isinstance(state, (TwoBosonState, TwoFermionState)):
        raise TypeError("oracle needs a two-particle state")
    omega = np.asarray(state.omega) / np.sqrt(state.norm_sq)
    m = omega.conj()
    x0, y0 = _starts(seed, restarts, state.modes)

    candidates = []
    if isinstance(state, TwoBosonState):
        same, c = _same_mode_search(m, x0)
        k = int(np.argmax(same))
        candidates.append((same[k], Branch.SAME_MODE, (c[k], c[k])))
    pair, x, y = _pair_search(m, x0, y0, plane=isinstance(state, TwoBosonState))
    k = int(np.argmax(pair))
    candidates.append((pair[k], Branch.ORTHOGONAL_PAIR, (x[k], y[k])))

    best, branch, vecs = max(candidates, key=lambda t: t[0])
    best = float(min(best, 1.0))
    separable = best >= 1.0 - eps_oracle
    return OracleVerdict(separable, best, vecs if separable else None, branch, restarts)


def witness_state(verdict, statistics):
    """Normalized product state rebuilt from an oracle witness."""
    c, d = verdict.witness
    if statistics == "fermion":
        return TwoFermionState((np.outer(c, d) - np.outer(d, c)) / 2)
    if verdict.branch is Branch.SAME_MODE:
        return TwoBosonState(np.outer(c, c) / np.sqrt(2))
    return TwoBosonState((np.outer(c, d) + np.outer(d, c)) / 2)
