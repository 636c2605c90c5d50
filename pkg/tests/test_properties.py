"""Invariants checked over hypothesis-drawn seeds and sizes."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_antisymmetric, random_boson, random_fermion, random_symmetric, skew_rank
from ipent import boson, correlation, fermion, matfact, measurement
from ipent.matfact import random_unitary
from ipent.states import fock_amplitudes, transform_modes

seeds = st.integers(0, 2 ** 32 - 1)
PROFILE = settings(max_examples=60, deadline=None)


@PROFILE
@given(seeds, st.integers(1, 8))
def test_takagi_invariants(seed, n):
    rng = np.random.default_rng(seed)
    s = random_symmetric(rng, n)
    d = matfact.takagi(s)
    assert np.linalg.norm(d.unitary @ np.diag(d.values) @ d.unitary.T - s) <= 1e-10 * np.linalg.norm(s)
    assert np.all(np.diff(d.values) <= 0) and np.all(d.values[d.rank:] == 0)
    assert np.allclose(d.values, np.linalg.svd(s, compute_uv=False), atol=1e-10)


@PROFILE
@given(seeds, st.integers(2, 8))
def test_skew_invariants(seed, n):
    rng = np.random.default_rng(seed)
    a = random_antisymmetric(rng, n)
    d = matfact.skew_canonical(a)
    b = matfact.skew_block_matrix(d.pair_values, n)
    assert np.linalg.norm(d.unitary @ b @ d.unitary.T - a) <= 1e-10 * np.linalg.norm(a)
    assert d.rank % 2 == 0 and np.all(np.diff(d.pair_values) <= 0)


@PROFILE
@given(seeds, st.integers(1, 5))
def test_boson_verdict_is_basis_independent(seed, n):
    rng = np.random.default_rng(seed)
    s = random_boson(rng, n)
    t = transform_modes(s, random_unitary(n, rng))
    a, b = boson.classify(s), boson.classify(t)
    assert a.kind is b.kind and abs(a.measure - b.measure) <= 1e-10
    assert abs(2 * np.sum(a.lambdas ** 2) - 1) <= 1e-12


@PROFILE
@given(seeds, st.integers(2, 6))
def test_fermion_verdict_is_basis_independent(seed, n):
    rng = np.random.default_rng(seed)
    s = random_fermion(rng, n)
    t = transform_modes(s, random_unitary(n, rng))
    assert fermion.classify(s).kind is fermion.classify(t).kind
    assert np.allclose(fermion.classify(s).z, fermion.classify(t).z, atol=1e-10)


@PROFILE
@given(seeds, st.integers(1, 5), st.booleans())
def test_one_body_action_keeps_structure_and_total_number(seed, n, is_boson):
    rng = np.random.default_rng(seed)
    if not is_boson and n < 2:
        n = 2
    s = random_boson(rng, n) if is_boson else random_fermion(rng, n)
    h = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    op = correlation.OneBodyOperator(h + h.conj().T)
    w = correlation.apply(op, s).omega
    sign = 1 if is_boson else -1
    assert np.linalg.norm(w - sign * w.T) <= 1e-12 * max(np.linalg.norm(w), 1.0)
    total = correlation.OneBodyOperator(np.eye(n))
    assert not correlation.relative_correlation(total, s).correlated
    assert abs(correlation.expectation(total, s) - 2) <= 1e-12


@PROFILE
@given(seeds, st.integers(1, 5))
def test_distribution_is_a_probability_vector(seed, n):
    rng = np.random.default_rng(seed)
    s = random_boson(rng, n)
    d = measurement.joint_distribution(s)
    assert abs(d.total - 1) <= 1e-12
    assert all(sum(o) == 2 for o in d)
    assert list(d) == [o for o in fock_amplitudes(s) if o in d.entries]


@PROFILE
@given(seeds, st.integers(1, 6), st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3))
def test_takagi_values_scale_with_modulus(seed, n, c):
    rng = np.random.default_rng(seed)
    s = random_symmetric(rng, n)
    assert np.allclose(matfact.takagi(c * s).values, abs(c) * matfact.takagi(s).values,
                       rtol=1e-10, atol=1e-12 * abs(c))


@PROFILE
@given(seeds, st.integers(2, 6), st.integers(0, 3))
def test_rank_invariant_under_congruence(seed, n, pairs):
    rng = np.random.default_rng(seed)
    pairs = min(pairs, n // 2)
    a = skew_rank(rng, n, pairs)
    u = random_unitary(n, rng)
    assert matfact.skew_canonical(u @ a @ u.T).rank == matfact.skew_canonical(a).rank == 2 * pairs


@PROFILE
@given(seeds, st.sampled_from([3, 5, 7]))
def test_odd_skew_has_a_zero_value(seed, n):
    d = matfact.skew_canonical(random_antisymmetric(np.random.default_rng(seed), n))
    assert d.rank < n


@PROFILE
@given(seeds)
def test_rank_two_product_of_values_is_determinant(seed):
    s = random_boson(np.random.default_rng(seed), 2)
    lam = boson.standard_form(s).lambdas
    assert abs(lam[0] * lam[1] - abs(np.linalg.det(s.omega))) <= 1e-11


@PROFILE
@given(seeds, st.integers(2, 4), st.booleans())
def test_conditioning_recovers_joint(seed, n, is_boson):
    rng = np.random.default_rng(seed)
    s = random_boson(rng, n) if is_boson else random_fermion(rng, n)
    d = measurement.joint_distribution(s)
    if not is_boson:
        assert all(max(o) <= 1 for o in d)
    for mode in range(n):
        rebuilt = {}
        for observed, p in d.marginal(mode).items():
            for o, q in measurement.conditional_distribution(d, mode, observed).items():
                rebuilt[o] = rebuilt.get(o, 0.0) + p * q
        assert all(abs(rebuilt[o] - p) <= 1e-12 for o, p in d.items())
