"""Two-boson standard form, separability classes and entanglement measure.

A normalized two-boson state can always be rotated into
``sum_j lambda_j c_j^+ c_j^+ |0>`` with ``lambda`` real, nonnegative and
descending (the Takagi factorization of its coefficient matrix). The
classification reads the separability class off that spectrum:

* rank 1: both bosons in one mode (separable)
* rank 2 with equal values: ``f_1^+ f_2^+ |0>`` for orthogonal modes (separable)
* equal adjacent pairs, at least two of them: equivalent to an entangled
  distinguishable-particle state
* anything else: entangled
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import matfact
from .errors import InvalidInput, NotNormalized
from .states import TwoBosonState

DEFAULT_EPS_SEP = 1e-8
NORMALIZATION_TOL = 1e-10
UNIT_PAIR_TOL = 1e-12


class BosonKind(str, enum.Enum):
    SEPARABLE_SAME_MODE = "SeparableSameMode"
    SEPARABLE_ORTHOGONAL_PAIR = "SeparableOrthogonalPair"
    ENTANGLED_PAIR_FORM = "EntangledPairForm"
    ENTANGLED_GENERAL = "EntangledGeneral"

    @property
    def separable(self):
        return self in (BosonKind.SEPARABLE_SAME_MODE, BosonKind.SEPARABLE_ORTHOGONAL_PAIR)


@dataclass(frozen=True)
class BosonStandardForm:
    """``basis`` columns are the modes ``c_j``; ``lambdas`` has length ``rank``."""

    basis: np.ndarray
    lambdas: np.ndarray
    rank: int

    def coefficient_matrix(self):
        u = self.basis[:, : self.rank]
        return (u * self.lambdas) @ u.T


@dataclass(frozen=True)
class BosonVerdict:
    kind: BosonKind
    lambdas: np.ndarray
    rank: int
    measure: float

    @property
    def separable(self):
        return self.kind.separable


@dataclass(frozen=True)
class PairForm:
    pair_count: int
    z: np.ndarray
    schmidt: np.ndarray


def standard_form(state: TwoBosonState, rank_tol=matfact.DEFAULT_RANK_TOL):
    dec = matfact.takagi(state.omega, rank_tol)
    return BosonStandardForm(dec.unitary, dec.values[: dec.rank].copy(), dec.rank)


def _pairs_equal(lambdas, eps_sep):
    """True if ``lambdas`` splits into adjacent equal pairs with nothing left over."""
    if lambdas.size == 0 or lambdas.size % 2:
        return False
    top = lambdas[0]
    return bool(np.all(np.abs(lambdas[0::2] - lambdas[1::2]) <= eps_sep * top))


def entanglement_measure(form):
    """``-4 sum_i |l_{2i-1} l_{2i}| ln |4 l_{2i-1} l_{2i}|`` over adjacent pairs.

    An odd trailing value is left unpaired. Requires ``2 sum l^2 = 1``.
    """
    lam = np.asarray(form.lambdas if isinstance(form, BosonStandardForm) else form, dtype=float)
    if abs(2.0 * np.sum(lam ** 2) - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"2*sum(lambda^2) = {2.0 * np.sum(lam ** 2):.15g}, expected 1")
    total = 0.0
    for i in range(lam.size // 2):
        p = abs(lam[2 * i] * lam[2 * i + 1])
        if abs(4.0 * p - 1.0) <= UNIT_PAIR_TOL or p == 0.0:
            continue
        total -= 4.0 * p * np.log(4.0 * p)
    if -UNIT_PAIR_TOL < total < 0.0:
        total = 0.0
    return float(total)


def classify(state: TwoBosonState, eps_sep=DEFAULT_EPS_SEP, rank_tol=matfact.DEFAULT_RANK_TOL):
    form = standard_form(state, rank_tol)
    lam, rank = form.lambdas, form.rank
    if rank == 1:
        kind = BosonKind.SEPARABLE_SAME_MODE
    elif rank == 2 and abs(lam[0] - lam[1]) <= eps_sep * lam[0]:
        kind = BosonKind.SEPARABLE_ORTHOGONAL_PAIR
    elif rank >= 4 and _pairs_equal(lam, eps_sep):
        kind = BosonKind.ENTANGLED_PAIR_FORM
    else:
        kind = BosonKind.ENTANGLED_GENERAL
    measure = 0.0 if kind.separable else entanglement_measure(form)
    return BosonVerdict(kind, lam, rank, measure)


def unbalance_transform(r1, r2, phi=0.0):
    """Two-mode change of basis for ``r1 e^{i phi} c1^+ c1^+ + r2 e^{-i phi} c2^+ c2^+``.

    Returns ``(T, out_same, out_cross)``. The new modes are
    ``(f1^+, f2^+) = (c1^+, c2^+) T`` and the state becomes
    ``out_same f1^+ f1^+ + i out_cross f1^+ f2^+`` with ``out_same = r1 - r2``
    and ``out_cross = 2 sqrt(r1 r2)``. The ``i`` is a phase on ``f2``, left in
    place so that ``T`` is the identity for ``(1, 0, 0)``.
    """
    r1, r2, phi = float(r1), float(r2), float(phi)
    if r2 < 0 or r1 < r2 or r1 + r2 == 0:
        raise InvalidInput("need r1 >= r2 >= 0 and r1 + r2 > 0")
    a = np.sqrt(r1 / (r1 + r2))
    b = np.sqrt(r2 / (r1 + r2))
    rot = np.array([[a, -1j * b], [-1j * b, a]])
    t = np.exp(np.array([0.5j * phi, -0.5j * phi]))[:, None] * rot
    return t, r1 - r2, 2.0 * np.sqrt(r1 * r2)


def transformed_coefficients(r1, r2, phi, t):
    """Coefficient matrix in the ``f`` basis of the two-mode state under ``T``.

    From ``(c^+) = (f^+) T^H`` the ``c``-basis matrix ``D`` becomes ``T^H D conj(T)``.
    """
    diag = np.diag([r1 * np.exp(1j * phi), r2 * np.exp(-1j * phi)])
    return t.conj().T @ diag @ t.conj()


def pair_form_translate(form, eps_sep=DEFAULT_EPS_SEP):
    """Distinguishable-particle picture ``sum_i 2 z_i c_{1i}^+ c_{2i}^+ |0>``, or None."""
    lam = np.asarray(form.lambdas, dtype=float)
    if not _pairs_equal(lam, eps_sep):
        return None
    z = lam[1::2].copy()
    return PairForm(z.size, z, 2.0 * z)


def pair_form_basis(form):
    """Modes ``(c_{1i}, c_{2i})`` turning ``lambda (c c + c' c')`` into ``2 lambda c_1 c_2``.

    Columns ``2i`` and ``2i+1`` of the standard basis are combined as
    ``(c + i c')/sqrt2`` and ``(c - i c')/sqrt2``.
    """
    u = np.array(form.basis)
    for i in range(form.rank // 2):
        p, q = u[:, 2 * i].copy(), u[:, 2 * i + 1].copy()
        u[:, 2 * i] = (p + 1j * q) / np.sqrt(2)
        u[:, 2 * i + 1] = (p - 1j * q) / np.sqrt(2)
    return u
