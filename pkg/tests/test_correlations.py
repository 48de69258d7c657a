import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dephasing_nonlocality import (
    EWLParams,
    NumericalError,
    TwoQubitState,
    XState,
    bell_decomposition,
    bell_max_general,
    bell_value_at_angles,
    concurrence_general,
    concurrence_x,
    correlation_matrix,
    embed_x,
    make_ewl,
)
from dephasing_nonlocality import correlations
from dephasing_nonlocality.oracle import (
    apply_local_unitaries,
    chsh_angle_search,
    random_density_matrix,
    random_product_state,
    random_unitary,
    random_valid_x_state,
)

from conftest import INV_SQRT2, TSIRELSON

seeds = st.integers(0, 2**32 - 1)
MIXED = TwoQubitState(np.eye(4) / 4)
# Standard optimal settings for the |00> + |11> Bell state: A along z and x,
# B along (z + x)/sqrt2 and (z - x)/sqrt2.
BELL_ANGLES = (0.0, 0.0, math.pi / 2, 0.0, math.pi / 4, 0.0, math.pi / 4, math.pi)


def test_bell_state_correlations(bell_phi):
    x = make_ewl(bell_phi)
    state = embed_x(x)
    assert concurrence_general(state) == pytest.approx(1.0, abs=1e-12)
    assert concurrence_x(x) == pytest.approx(1.0, abs=1e-15)
    assert bell_max_general(state) == pytest.approx(TSIRELSON, abs=1e-12)
    d = bell_decomposition(x)
    assert (d.u1, d.u2, d.u3) == pytest.approx((1.0, 1.0, 1.0), abs=1e-15)
    assert d.bmax == pytest.approx(TSIRELSON, abs=1e-15)


def test_maximally_mixed_correlations():
    assert concurrence_general(MIXED) == 0.0
    assert bell_max_general(MIXED) == 0.0
    d = bell_decomposition(XState(0.25, 0.25, 0.25, 0.25))
    assert (d.u1, d.u2, d.u3, d.bmax) == (0.0, 0.0, 0.0, 0.0)


def test_ewl_09_concurrence(werner_09):
    x = make_ewl(werner_09)
    assert concurrence_x(x) == pytest.approx(0.85, abs=1e-15)
    assert concurrence_general(embed_x(x)) == pytest.approx(0.85, abs=1e-12)
    # initial-state formula 2 max{0, (|ab| + 1/4) r - 1/4}
    assert concurrence_x(x) == pytest.approx(2 * ((0.5 + 0.25) * 0.9 - 0.25), abs=1e-15)


def test_concurrence_x_boundary():
    x = XState(0.16, 0.34, 0.34, 0.16, rho23=0.16)
    assert concurrence_x(x) == 0.0
    assert concurrence_general(embed_x(x)) == pytest.approx(0.0, abs=1e-7)


@pytest.mark.parametrize("r", np.linspace(0.0, 1.0, 11))
def test_werner_bell(r):
    x = make_ewl(EWLParams(r, INV_SQRT2))
    d = bell_decomposition(x)
    assert d.u1 == pytest.approx(r * r, abs=1e-14)
    assert d.u2 == pytest.approx(r * r, abs=1e-14)
    assert d.bmax == pytest.approx(TSIRELSON * r, abs=1e-14)
    assert bell_max_general(embed_x(x)) == pytest.approx(TSIRELSON * r, abs=1e-12)


def test_product_00():
    state = TwoQubitState(np.diag([0, 0, 0, 1.0]))
    np.testing.assert_allclose(correlation_matrix(state), np.diag([0, 0, 1.0]), atol=1e-15)
    assert bell_max_general(state) == pytest.approx(2.0, abs=1e-15)


def test_bell_state_optimal_angles(bell_phi):
    state = embed_x(make_ewl(bell_phi))
    assert bell_value_at_angles(state, BELL_ANGLES) == pytest.approx(TSIRELSON, abs=1e-12)
    # nothing on a settings search does better
    found = chsh_angle_search(state)
    assert found.best_value <= bell_value_at_angles(state, BELL_ANGLES) + 1e-9


@given(seed=seeds, angles=st.lists(st.floats(-7, 7), min_size=4, max_size=4))
@settings(max_examples=50)
def test_degenerate_settings(seed, angles):
    state = random_density_matrix(seed)
    a_t, a_p, b_t, b_p = angles
    full = (a_t, a_p, a_t, a_p, b_t, b_p, b_t, b_p)
    value = bell_value_at_angles(state, full)
    single = (a_t, a_p, 0, 0, b_t, b_p, 0, 0)
    oa = correlations.spin_observable(a_t, a_p)
    ob = correlations.spin_observable(b_t, b_p)
    corr = np.trace(state.rho @ np.kron(oa, ob)).real
    assert value == pytest.approx(2 * abs(corr), abs=1e-12)
    assert value <= 2.0 + 1e-12


@given(angles=st.lists(st.floats(-7, 7), min_size=8, max_size=8))
@settings(max_examples=30)
def test_mixed_state_any_angles(angles):
    assert bell_value_at_angles(MIXED, angles) == pytest.approx(0.0, abs=1e-15)


def test_bell_value_needs_eight_angles():
    with pytest.raises(ValueError):
        bell_value_at_angles(MIXED, [0.0] * 7)


@given(seed=seeds)
@settings(max_examples=150)
def test_bounds_random_states(seed):
    state = random_density_matrix(seed)
    c = concurrence_general(state)
    b = bell_max_general(state)
    assert 0.0 <= c <= 1.0
    assert 0.0 <= b <= TSIRELSON + 1e-9


@given(seed=seeds)
@settings(max_examples=150)
def test_x_formulas_match_general(seed):
    x = random_valid_x_state(seed)
    full = embed_x(x)
    assert abs(concurrence_x(x) - concurrence_general(full)) <= 1e-10
    assert abs(bell_decomposition(x).bmax - bell_max_general(full)) <= 1e-10
    d = bell_decomposition(x)
    assert d.u1 >= d.u3
    assert d.b1 == pytest.approx(2 * math.sqrt(d.u1 + d.u2))
    assert d.b2 == pytest.approx(2 * math.sqrt(d.u1 + d.u3))


@given(seed=seeds, angles=st.lists(st.floats(-7, 7), min_size=8, max_size=8))
@settings(max_examples=100)
def test_angles_never_beat_horodecki(seed, angles):
    state = random_density_matrix(seed)
    assert bell_value_at_angles(state, angles) <= bell_max_general(state) + 1e-9


@given(seed=seeds)
@settings(max_examples=150)
def test_product_states_are_local(seed):
    state = random_product_state(seed)
    assert bell_max_general(state) <= 2.0 + 1e-9
    assert concurrence_general(state) <= 1e-7


@given(seed=seeds)
@settings(max_examples=100)
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    state = random_density_matrix(rng.integers(2**32))
    rotated = apply_local_unitaries(state, random_unitary(rng), random_unitary(rng))
    assert abs(concurrence_general(state) - concurrence_general(rotated)) <= 1e-10
    assert abs(bell_max_general(state) - bell_max_general(rotated)) <= 1e-10


def test_correlation_entries_bounded():
    for seed in range(100):
        t = correlation_matrix(random_density_matrix(seed))
        assert np.all(np.abs(t) <= 1.0 + 1e-12)


def test_concurrence_rejects_complex_spectrum(monkeypatch):
    monkeypatch.setattr(correlations.np.linalg, "eigvals", lambda m: np.array([0.5 + 1e-3j, 0.5 - 1e-3j, 0, 0]))
    with pytest.raises(NumericalError):
        concurrence_general(MIXED)


def test_concurrence_rejects_negative_spectrum(monkeypatch):
    monkeypatch.setattr(correlations.np.linalg, "eigvals", lambda m: np.array([0.5, 0.1, 0.0, -1e-3]))
    with pytest.raises(NumericalError):
        concurrence_general(MIXED)


@given(seed=seeds, rank=st.integers(1, 3))
@settings(max_examples=150)
def test_rank_deficient_states(seed, rank):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    state = TwoQubitState(rho / np.trace(rho).real)
    c = concurrence_general(state)
    assert 0.0 <= c <= 1.0
    if rank == 1:
        # pure state: C = |<psi| Y x Y |psi*>|
        psi = g[:, 0] / np.linalg.norm(g[:, 0])
        assert c == pytest.approx(abs(psi @ correlations._YY @ psi), abs=1e-12)
