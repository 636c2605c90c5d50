"""Dense complex linear algebra and the two structured factorizations.

``takagi`` writes a complex symmetric matrix as ``U diag(d) U^T`` by the
route: diagonalize ``S S*``, rotate ``S`` into that eigenbasis where it
becomes symmetric and normal, split into commuting real/imaginary parts and
diagonalize those jointly with a real orthogonal matrix.

``skew_canonical`` writes a complex antisymmetric matrix as ``U B U^T`` with
``B`` a direct sum of ``[[0, z], [-z, 0]]`` blocks.

Matrices are plain ``numpy`` arrays (complex128 unless noted).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidInput,
    NoConvergence,
    NotAntisymmetric,
    NotCommuting,
    NotHermitian,
    NotSymmetric,
)

DEFAULT_RANK_TOL = 1e-10
STRUCTURE_TOL = 1e-12
COMMUTATOR_TOL = 1e-9
MAX_DIM = 64
MAX_SWEEPS = 100
RANK_FLOOR = 1e-300
REFINE_CUT = 1e-6
NULL_PAIR = 1e-14


@dataclass(frozen=True)
class TakagiDecomposition:
    unitary: np.ndarray
    values: np.ndarray
    rank: int


@dataclass(frozen=True)
class SkewCanonicalDecomposition:
    unitary: np.ndarray
    pair_values: np.ndarray
    rank: int


def as_matrix(a, name="matrix"):
    """Return ``a`` as a finite complex 2-d array, or raise InvalidInput."""
    m = np.array(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise InvalidInput(f"{name} must be a non-empty 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidInput(f"{name} has non-finite entries")
    return m


def _square(a, name, max_dim):
    m = as_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise InvalidInput(f"{name} must be square, got shape {m.shape}")
    if m.shape[0] > max_dim:
        raise InvalidInput(f"{name} dimension {m.shape[0]} exceeds limit {max_dim}")
    return m


def _rel_dev(a, b):
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return 0.0
    return np.linalg.norm(a - b) / scale


def is_symmetric(a, tol=STRUCTURE_TOL):
    return _rel_dev(a, a.T) <= tol


def is_antisymmetric(a, tol=STRUCTURE_TOL):
    return _rel_dev(a, -a.T) <= tol


def is_hermitian(a, tol=STRUCTURE_TOL):
    return _rel_dev(a, a.conj().T) <= tol


def random_unitary(n, rng):
    """Haar-distributed unitary (QR of a Ginibre matrix with phase fix)."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def numerical_rank(values, rank_tol=DEFAULT_RANK_TOL):
    """Count of ``values`` above ``rank_tol`` times the largest one.

    ``values`` must be nonnegative and sorted descending.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0 or v[0] <= RANK_FLOOR:
        return 0
    return int(np.count_nonzero(v > rank_tol * v[0]))


def hermitian_eig(h, *, max_sweeps=MAX_SWEEPS, max_dim=MAX_DIM):
    """Eigen-decomposition of a hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with real ``w`` sorted descending and unitary ``v`` such
    that ``h = v @ diag(w) @ v^H``. Ties keep the order the rotations leave them
    in.
    """
    a = _square(h, "H", max_dim)
    if not is_hermitian(a):
        raise NotHermitian("matrix is not hermitian within tolerance")
    n = a.shape[0]
    a = (a + a.conj().T) / 2
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if scale == 0.0 or n == 1:
        return np.real(np.diag(a)).copy(), v

    target = 1e-15 * scale
    negligible = 1e-18 * scale
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= target:
            break
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g <= negligible:
                    continue
                rotated = True
                phase = apq / g
                tau = (a[q, q].real - a[p, p].real) / (2.0 * g)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # columns p, q  <-  [a_p a_q] @ diag(1, conj(phase)) @ [[c, s], [-s, c]]
                w = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ w
                a[idx, :] = w.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ w
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        if not rotated:
            break
    else:
        raise NoConvergence(f"Jacobi eigensolver exceeded {max_sweeps} sweeps")

    w = np.real(np.diag(a))
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def simdiag_commuting_real_symmetric(f, g, *, tol=COMMUTATOR_TOL, max_sweeps=MAX_SWEEPS):
    """Real orthogonal ``O`` that diagonalizes two commuting real symmetric matrices.

    Uses joint Jacobi rotations: each plane rotation is chosen to minimize the
    summed squared off-diagonal mass of both matrices.
    """
    f = np.array(f, dtype=float)
    g = np.array(g, dtype=float)
    if f.ndim != 2 or f.shape[0] != f.shape[1] or f.shape != g.shape:
        raise InvalidInput("F and G must be square and of equal shape")
    if not (np.allclose(f, f.T, rtol=0, atol=STRUCTURE_TOL * (np.abs(f).max() + 1))
            and np.allclose(g, g.T, rtol=0, atol=STRUCTURE_TOL * (np.abs(g).max() + 1))):
        raise NotSymmetric("F and G must be real symmetric")
    nf, ng = np.linalg.norm(f), np.linalg.norm(g)
    if np.linalg.norm(f @ g - g @ f) > tol * (nf * ng + 1.0):
        raise NotCommuting("F and G do not commute within tolerance")

    n = f.shape[0]
    o = np.eye(n)
    a = np.stack([(f + f.T) / 2, (g + g.T) / 2])
    scale = nf + ng
    negligible = (1e-16 * scale) ** 2
    off_prev = np.inf
    for _ in range(max_sweeps):
        off = np.sqrt(sum(np.linalg.norm(m - np.diag(np.diag(m))) ** 2 for m in a))
        # Below 1e-8 a sweep that no longer halves the off-diagonal mass is
        # chasing rounding noise.
        if off <= 1e-15 * scale or (off <= 1e-8 * scale and off > 0.5 * off_prev):
            return o
        off_prev = off
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                hd = a[:, p, p] - a[:, q, q]
                ho = 2.0 * a[:, p, q]
                guu = hd @ hd
                guv = hd @ ho
                gvv = ho @ ho
                if gvv <= negligible:
                    continue
                # (cos 2t, sin 2t) is the leading eigenvector of the 2x2 Gram matrix.
                psi = 0.5 * np.arctan2(2.0 * guv, guu - gvv)
                theta = 0.5 * psi
                c, s = np.cos(theta), np.sin(theta)
                if abs(s) <= 1e-15:
                    continue
                rotated = True
                r = np.array([[c, -s], [s, c]])
                idx = [p, q]
                a[:, :, idx] = a[:, :, idx] @ r
                a[:, idx, :] = r.T @ a[:, idx, :]
                o[:, idx] = o[:, idx] @ r
        if not rotated:
            return o
    raise NoConvergence(f"joint Jacobi diagonalization exceeded {max_sweeps} sweeps")


def _takagi_unit(s1):
    """Takagi vectors and magnitudes (descending) of a unit-norm symmetric matrix."""
    n = s1.shape[0]
    ssc = s1 @ s1.conj()
    _, u_prime = hermitian_eig((ssc + ssc.conj().T) / 2)
    c = u_prime.conj().T @ s1 @ u_prime.conj()
    c = (c + c.T) / 2
    o = simdiag_commuting_real_symmetric(c.real, c.imag)
    d = np.diag(o.T @ c @ o)

    mag = np.abs(d)
    phase = np.ones(n, dtype=complex)
    nonzero = mag > 0
    phase[nonzero] = np.exp(0.5j * np.angle(d[nonzero]))
    u = (u_prime @ o) * phase
    order = np.argsort(-mag, kind="stable")
    u, mag = u[:, order], mag[order]

    # S S* squares the values, so a tail below ~1e-7 of the top one is not
    # resolved; redo that tail block at its own scale.
    tail = np.flatnonzero(mag <= REFINE_CUT * mag[0])
    if 0 < tail.size < n:
        j = tail[0]
        r = u[:, j:].conj().T @ s1 @ u[:, j:].conj()
        rn = np.linalg.norm(r)
        if rn > 0.0:
            sub_u, sub_mag = _takagi_unit((r + r.T) / (2 * rn))
            u[:, j:] = u[:, j:] @ sub_u
            mag[j:] = sub_mag * rn
    return u, mag


def takagi(s, rank_tol=DEFAULT_RANK_TOL):
    """Takagi factorization ``S = U diag(values) U^T`` of a complex symmetric matrix.

    Phases of the diagonal entries are absorbed into the columns of ``U`` so
    ``values`` are real, nonnegative and descending; entries past the numerical
    rank are set to zero.
    """
    s = _square(s, "S", MAX_DIM)
    if not is_symmetric(s):
        raise NotSymmetric("matrix is not symmetric within tolerance")
    n = s.shape[0]
    scale = np.linalg.norm(s)
    if scale == 0.0:
        return TakagiDecomposition(np.eye(n, dtype=complex), np.zeros(n), 0)
    u, mag = _takagi_unit((s + s.T) / (2 * scale))
    values = mag * scale
    rank = numerical_rank(values, rank_tol)
    values[rank:] = 0.0
    return TakagiDecomposition(u, values, rank)


def _orth_against(vecs, basis):
    """Remove components of each row of ``vecs`` along the columns of ``basis``."""
    if basis.shape[1] == 0:
        return vecs
    for _ in range(2):
        vecs = vecs - (vecs @ basis.conj()) @ basis.T
    return vecs


def _skew_unit(a1):
    """Pair vectors and pair values (descending) of a unit-norm antisymmetric matrix."""
    n = a1.shape[0]
    h = a1 @ a1.conj().T
    _, v = hermitian_eig((h + h.conj().T) / 2)

    # Pair values come from |A conj(x)| rather than sqrt(eig(A A^H)), which
    # cannot resolve values below ~1e-8 relative.
    cols = np.zeros((n, 0), dtype=complex)
    candidates = v.T.copy()
    for _ in range(n // 2):
        resid = _orth_against(candidates, cols)
        rnorm = np.linalg.norm(resid, axis=1)
        mass = np.where(rnorm > 0.5, np.linalg.norm(resid.conj() @ a1.T, axis=1), -1.0)
        k = int(np.argmax(mass))
        if mass[k] <= NULL_PAIR:
            break
        x = resid[k] / rnorm[k]
        y = -(a1 @ x.conj())
        if np.linalg.norm(y) <= NULL_PAIR:
            break
        y = _orth_against(y[None, :], np.column_stack([cols, x]))[0]
        y = y / np.linalg.norm(y)
        cols = np.column_stack([cols, x, y])
    npairs = cols.shape[1] // 2

    if npairs == 0:
        return np.eye(n, dtype=complex), np.zeros(0)
    if cols.shape[1] < n:
        q, _ = np.linalg.qr(cols, mode="complete")
        u = np.column_stack([cols, q[:, cols.shape[1]:]])
    else:
        u = cols

    b = u.conj().T @ a1 @ u.conj()
    z = np.array([b[2 * i, 2 * i + 1].real for i in range(npairs)])
    order = np.argsort(-z, kind="stable")
    perm = np.concatenate([np.ravel(np.column_stack([2 * order, 2 * order + 1])),
                           np.arange(2 * npairs, n)]).astype(int)
    u, z = u[:, perm], z[order]

    small = np.flatnonzero(z <= REFINE_CUT * z[0])
    j = 2 * small[0] if small.size else 2 * npairs
    if j < n:
        r = u[:, j:].conj().T @ a1 @ u[:, j:].conj()
        rn = np.linalg.norm(r)
        if rn > 0.0:
            sub_u, sub_z = _skew_unit((r - r.T) / (2 * rn))
            u[:, j:] = u[:, j:] @ sub_u
            z = np.concatenate([z[: j // 2], sub_z * rn])
        else:
            z = z[: j // 2]
    return u, z


def skew_canonical(a, rank_tol=DEFAULT_RANK_TOL):
    """Canonical form ``A = U B U^T`` of a complex antisymmetric matrix.

    ``B`` holds ``[[0, z_i], [-z_i, 0]]`` blocks on the diagonal followed by
    zeros. Each column pair ``(x, y)`` of ``U`` is a leading eigenvector ``x``
    of ``A A^H`` and its partner ``y = -A conj(x) / z``.
    """
    a = _square(a, "A", MAX_DIM)
    if not is_antisymmetric(a):
        raise NotAntisymmetric("matrix is not antisymmetric within tolerance")
    n = a.shape[0]
    scale = np.linalg.norm(a)
    pair_values = np.zeros(n // 2)
    if scale == 0.0:
        return SkewCanonicalDecomposition(np.eye(n, dtype=complex), pair_values, 0)
    u, z = _skew_unit((a - a.T) / (2 * scale))
    pair_values[: z.size] = z * scale
    npairs = numerical_rank(pair_values, rank_tol)
    pair_values[npairs:] = 0.0
    return SkewCanonicalDecomposition(u, pair_values, 2 * npairs)


def skew_block_matrix(pair_values, n):
    """The ``n x n`` canonical block matrix for ``pair_values``."""
    b = np.zeros((n, n), dtype=complex)
    for i, z in enumerate(pair_values):
        b[2 * i, 2 * i + 1] = z
        b[2 * i + 1, 2 * i] = -z
    return b
