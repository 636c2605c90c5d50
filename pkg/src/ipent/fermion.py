"""Two-fermion standard form and the rank criterion.

Any two-fermion state can be rotated into ``sum_i z_i f_{1i}^+ f_{2i}^+ |0>``;
it is a single Slater determinant, hence separable, exactly when one ``z_i``
survives, i.e. the coefficient matrix has rank 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import matfact
from .states import TwoFermionState


class FermionKind(str, enum.Enum):
    SEPARABLE = "Separable"
    ENTANGLED = "Entangled"

    @property
    def separable(self):
        return self is FermionKind.SEPARABLE


@dataclass(frozen=True)
class FermionStandardForm:
    """``basis`` columns ``(2i, 2i+1)`` are ``(f_{1i}, f_{2i})``; ``z`` has length ``rank/2``.

    The coefficient matrix holds ``z_i`` at ``(2i, 2i+1)`` and ``-z_i`` at
    ``(2i+1, 2i)``, so a normalized state has ``4 sum z^2 = 1``.
    """

    basis: np.ndarray
    z: np.ndarray
    rank: int

    def coefficient_matrix(self):
        n = self.basis.shape[0]
        return self.basis @ matfact.skew_block_matrix(self.z, n) @ self.basis.T


@dataclass(frozen=True)
class FermionVerdict:
    kind: FermionKind
    rank: int
    z: np.ndarray

    @property
    def separable(self):
        return self.kind.separable


def standard_form(state: TwoFermionState, rank_tol=matfact.DEFAULT_RANK_TOL):
    dec = matfact.skew_canonical(state.omega, rank_tol)
    return FermionStandardForm(dec.unitary, dec.pair_values[: dec.rank // 2].copy(), dec.rank)


def classify(state: TwoFermionState, rank_tol=matfact.DEFAULT_RANK_TOL):
    form = standard_form(state, rank_tol)
    kind = FermionKind.SEPARABLE if form.rank == 2 else FermionKind.ENTANGLED
    return FermionVerdict(kind, form.rank, form.z)
