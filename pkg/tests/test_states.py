import numpy as np
import pytest

from gen import R2, random_boson, random_fermion
from ipent import states
from ipent.errors import (
    DimensionMismatch,
    InvalidInput,
    NotAntisymmetric,
    NotSymmetric,
    StatisticsMismatch,
    ZeroState,
)
from ipent.matfact import random_unitary
from ipent.states import SingleParticleState, TwoBosonState, TwoFermionState


def test_boson_matrix_must_be_symmetric():
    with pytest.raises(NotSymmetric):
        TwoBosonState([[0, 1], [0, 0]])


def test_fermion_matrix_must_be_antisymmetric():
    with pytest.raises(NotAntisymmetric):
        TwoFermionState([[0, 1], [1, 0]])


def test_zero_state_rejected_unless_allowed():
    with pytest.raises(ZeroState):
        TwoBosonState(np.zeros((2, 2)))
    assert TwoBosonState(np.zeros((2, 2)), allow_zero=True).norm_sq == 0


def test_non_square_rejected():
    with pytest.raises(InvalidInput):
        TwoBosonState(np.ones((2, 3)))


def test_omega_is_read_only():
    s = TwoBosonState(np.eye(2))
    with pytest.raises(ValueError):
        s.omega[0, 0] = 5


def test_normalize_same_mode():
    s = states.normalize(TwoBosonState([[1, 0], [0, 0]]))
    assert s.omega[0, 0] == pytest.approx(1 / R2)


def test_normalize_pair():
    s = states.normalize(TwoBosonState([[0, 1], [1, 0]]))
    assert np.allclose(s.omega, [[0, 0.5], [0.5, 0]])


def test_normalize_three_mode():
    w = np.array([[1, 0, 0], [0, 0, 0.5], [0, 0.5, 0]])
    s = states.normalize(TwoBosonState(w))
    assert np.allclose(s.omega, w / np.sqrt(3))
    assert s.norm_sq == pytest.approx(1.0, abs=1e-15)


def test_occupation_order():
    occ = [c for _, c in states.occupations(3, "boson")]
    assert occ == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    occ = [c for _, c in states.occupations(3, "fermion")]
    assert occ == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_fock_amplitudes_examples():
    assert states.fock_amplitudes(TwoBosonState([[1 / R2, 0], [0, 0]])) == {(2, 0): pytest.approx(1)}
    assert states.fock_amplitudes(TwoBosonState([[0, 0.5], [0.5, 0]])) == {(1, 1): 1}
    w = np.array([[1, 0, 0], [0, 0, 0.5], [0, 0.5, 0]]) / np.sqrt(3)
    amps = states.fock_amplitudes(TwoBosonState(w))
    assert set(amps) == {(2, 0, 0), (0, 1, 1)}
    assert amps[(2, 0, 0)] == pytest.approx(np.sqrt(2 / 3))
    assert amps[(0, 1, 1)] == pytest.approx(np.sqrt(1 / 3))


@pytest.mark.parametrize("maker", [random_boson, random_fermion])
def test_fock_amplitudes_unit_sum_and_round_trip(maker):
    rng = np.random.default_rng(3)
    for n in (1, 2, 3, 5):
        if maker is random_fermion and n == 1:
            continue
        s = maker(rng, n)
        amps = states.fock_amplitudes(s, drop_zeros=False)
        assert sum(abs(a) ** 2 for a in amps.values()) == pytest.approx(1.0, abs=1e-12)
        back = states.omega_from_fock(amps, n, s.statistics)
        assert np.allclose(back, s.omega, atol=1e-15)


def test_overlap_examples():
    rng = np.random.default_rng(0)
    s = random_boson(rng, 3)
    assert states.overlap(s, s) == pytest.approx(1.0)
    a1 = states.normalize(TwoBosonState([[1, 0], [0, 0]]))
    a2 = states.normalize(TwoBosonState([[0, 0], [0, 1]]))
    assert states.overlap(a1, a2) == 0
    ccb = states.normalize(TwoBosonState([[1, 0.5], [0.5, 0]]))
    assert abs(states.overlap(ccb, a1)) == pytest.approx(np.sqrt(2 / 3))


def test_overlap_agrees_with_inner():
    rng = np.random.default_rng(1)
    for maker in (random_boson, random_fermion):
        a, b = maker(rng, 4), maker(rng, 4)
        assert states.overlap(a, b) == pytest.approx(states.inner(a, b), abs=1e-14)


def test_overlap_rejects_mismatch():
    b = states.normalize(TwoBosonState(np.eye(2)))
    f = states.normalize(TwoFermionState([[0, 1], [-1, 0]]))
    with pytest.raises(StatisticsMismatch):
        states.overlap(b, f)
    with pytest.raises(DimensionMismatch):
        states.overlap(b, states.normalize(TwoBosonState(np.eye(3))))


def test_products_are_normalized_for_orthonormal_modes():
    u = random_unitary(4, np.random.default_rng(2))
    assert states.boson_product(u[:, 0], u[:, 1]).norm_sq == pytest.approx(1.0)
    assert states.fermion_product(u[:, 0], u[:, 1]).norm_sq == pytest.approx(1.0)
    # both bosons in one mode needs an extra 1/sqrt2
    assert states.boson_product(u[:, 0], u[:, 0]).norm_sq == pytest.approx(2.0)


def test_transform_modes_preserves_norm_and_overlap():
    rng = np.random.default_rng(4)
    a, b = random_boson(rng, 3), random_boson(rng, 3)
    v = random_unitary(3, rng)
    ta, tb = states.transform_modes(a, v), states.transform_modes(b, v)
    assert ta.norm_sq == pytest.approx(1.0)
    assert states.inner(ta, tb) == pytest.approx(states.inner(a, b))


def test_single_particle_state():
    s = states.normalize(SingleParticleState([1, 1]))
    assert np.allclose(s.vector, [1 / R2, 1 / R2])
    assert states.fock_amplitudes(s) == {(1, 0): pytest.approx(1 / R2), (0, 1): pytest.approx(1 / R2)}
