"""Random test inputs shared by the test modules."""

import numpy as np

from ipent.matfact import random_unitary
from ipent.states import TwoBosonState, TwoFermionState, normalize

R2 = np.sqrt(2.0)


def cgauss(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_symmetric(rng, n):
    a = cgauss(rng, n, n)
    return (a + a.T) / 2


def random_antisymmetric(rng, n):
    a = cgauss(rng, n, n)
    return (a - a.T) / 2


def unit(v):
    return v / np.linalg.norm(v)


def random_boson(rng, n):
    return normalize(TwoBosonState(random_symmetric(rng, n)))


def random_fermion(rng, n):
    return normalize(TwoFermionState(random_antisymmetric(rng, n)))


def random_separable_boson(rng, n):
    """``c^+ c^+ |0>`` (one time in four) or ``c^+ d^+ |0>`` for random orthonormal c, d."""
    u = random_unitary(n, rng)
    c = u[:, 0]
    d = c if n == 1 or rng.random() < 0.25 else u[:, 1]
    return normalize(TwoBosonState((np.outer(c, d) + np.outer(d, c)) / 2))


def random_separable_fermion(rng, n):
    """Slater determinant of two random (not necessarily orthogonal) modes."""
    c, d = cgauss(rng, n), cgauss(rng, n)
    return normalize(TwoFermionState((np.outer(c, d) - np.outer(d, c)) / 2))


def skew_rank(rng, n, pairs):
    """Antisymmetric ``n x n`` matrix of rank ``2 * pairs`` in a random unitary frame."""
    u = random_unitary(n, rng)
    z = rng.uniform(0.2, 1.0, pairs)
    b = np.zeros((n, n), dtype=complex)
    for i, zi in enumerate(z):
        b[2 * i, 2 * i + 1], b[2 * i + 1, 2 * i] = zi, -zi
    return u @ b @ u.T


def pair_form_state(rng, n, schmidt_sq):
    """Boson ``sum_i 2 z_i x_i^+ y_i^+ |0>`` with ``(2 z_i)^2 = schmidt_sq[i]``."""
    u = random_unitary(n, rng)
    w = np.zeros((n, n), dtype=complex)
    for i, p in enumerate(schmidt_sq):
        z = np.sqrt(p) / 2
        x, y = u[:, 2 * i], u[:, 2 * i + 1]
        w += z * (np.outer(x, y) + np.outer(y, x))
    return TwoBosonState(w)
