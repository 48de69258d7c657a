import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dephasing_nonlocality import (
    DomainError,
    EWLParams,
    Flavor,
    TwoQubitState,
    XState,
    embed_x,
    entanglement_bound_rbar,
    make_ewl,
    project_x,
    purity,
)
from dephasing_nonlocality.oracle import ewl_full_matrix, random_valid_x_state

from conftest import INV_SQRT2

unit = st.floats(0.0, 1.0)
flavors = st.sampled_from(list(Flavor))


def test_bell_state(bell_phi):
    x = make_ewl(bell_phi)
    assert x.rho11 == pytest.approx(0.5, abs=1e-15)
    assert x.rho44 == pytest.approx(0.5, abs=1e-15)
    assert x.rho14 == pytest.approx(0.5, abs=1e-15)
    assert x.rho22 == x.rho33 == 0.0
    assert x.rho23 == 0


@pytest.mark.parametrize("flavor", list(Flavor))
def test_maximally_mixed(flavor):
    x = make_ewl(EWLParams(0.0, 0.3, flavor))
    assert (x.rho11, x.rho22, x.rho33, x.rho44) == (0.25, 0.25, 0.25, 0.25)
    assert x.rho14 == 0 and x.rho23 == 0


def test_werner_09_entries(werner_09):
    x = make_ewl(werner_09)
    assert x.rho23 == pytest.approx(0.45, abs=1e-15)
    assert x.rho11 == pytest.approx(0.025, abs=1e-15)
    assert x.rho44 == pytest.approx(0.025, abs=1e-15)
    assert x.rho22 == pytest.approx(0.475, abs=1e-15)
    assert x.rho33 == pytest.approx(0.475, abs=1e-15)
    np.testing.assert_allclose(embed_x(x).rho, ewl_full_matrix(werner_09), atol=1e-15)


@given(r=unit, a=unit, flavor=flavors)
def test_make_ewl_matches_vector_construction(r, a, flavor):
    p = EWLParams(r, a, flavor)
    np.testing.assert_allclose(embed_x(make_ewl(p)).rho, ewl_full_matrix(p), atol=1e-14)


@given(r=unit, a=unit, flavor=flavors)
def test_embedded_ewl_is_valid_state(r, a, flavor):
    state = embed_x(make_ewl(EWLParams(r, a, flavor)))
    assert isinstance(state, TwoQubitState)


@given(a=unit)
def test_r_zero_flavor_independent(a):
    assert make_ewl(EWLParams(0.0, a, Flavor.ONE_EXCITATION)) == make_ewl(EWLParams(0.0, a, Flavor.TWO_EXCITATION))


@pytest.mark.parametrize("r, expected", [(1.0, 1.0), (0.0, 0.25), (0.9, 0.8575)])
def test_purity_values(r, expected):
    assert purity(EWLParams(r, INV_SQRT2)) == pytest.approx(expected, abs=1e-15)


@given(r=unit, a=unit, flavor=flavors)
def test_purity_matches_trace(r, a, flavor):
    p = EWLParams(r, a, flavor)
    assert abs(purity(p) - embed_x(make_ewl(p)).purity) <= 1e-12


def test_purity_strictly_increasing():
    values = [purity(EWLParams(r, 0.4)) for r in np.linspace(0.0, 1.0, 101)]
    assert np.all(np.diff(values) > 0)


def test_rbar_values():
    assert entanglement_bound_rbar(INV_SQRT2) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert entanglement_bound_rbar(0.01) == pytest.approx(1.0 / (1.0 + 0.04 * math.sqrt(0.9999)), abs=1e-15)
    assert entanglement_bound_rbar(0.01) == pytest.approx(0.962, abs=5e-4)


@given(a=st.floats(1e-6, 1 - 1e-6))
def test_rbar_symmetric(a):
    assert entanglement_bound_rbar(a) == pytest.approx(entanglement_bound_rbar(math.sqrt(1 - a * a)), rel=1e-9)


@pytest.mark.parametrize("a", [0.0, 1.0])
def test_rbar_rejects_product_pure_part(a):
    with pytest.raises(DomainError):
        entanglement_bound_rbar(a)


@pytest.mark.parametrize("r, a", [(-0.1, 0.5), (1.1, 0.5), (0.5, -0.01), (0.5, 1.5), (math.nan, 0.5)])
def test_ewl_rejects_out_of_range(r, a):
    with pytest.raises(DomainError):
        EWLParams(r, a)


def test_embed_bell_rank_one(bell_phi):
    eig = np.linalg.eigvalsh(embed_x(make_ewl(bell_phi)).rho)
    np.testing.assert_allclose(eig, [0, 0, 0, 1], atol=1e-15)


@pytest.mark.parametrize("seed", range(50))
def test_round_trip(seed):
    x = random_valid_x_state(seed)
    assert project_x(embed_x(x)) == x


def test_project_rejects_off_x_noise():
    rho = embed_x(random_valid_x_state(7)).rho.copy()
    rho[0, 1] += 1e-6
    rho[1, 0] += 1e-6
    with pytest.raises(DomainError, match="X form"):
        project_x(TwoQubitState(rho))


def test_state_validation():
    with pytest.raises(DomainError, match="Hermitian"):
        TwoQubitState(np.array([[0.5, 0.1, 0, 0], [0, 0.5, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))
    with pytest.raises(DomainError, match="trace"):
        TwoQubitState(np.eye(4) / 3)
    with pytest.raises(DomainError, match="positive"):
        TwoQubitState(np.diag([1.2, -0.2, 0.0, 0.0]))
    with pytest.raises(DomainError):
        TwoQubitState(np.eye(3) / 3)


def test_state_is_read_only():
    state = TwoQubitState(np.eye(4) / 4)
    with pytest.raises(ValueError):
        state.rho[0, 0] = 1.0


def test_x_state_validation():
    with pytest.raises(DomainError):
        XState(0.5, 0.5, 0.1, -0.1)
    with pytest.raises(DomainError):
        XState(0.3, 0.3, 0.3, 0.3)
    with pytest.raises(DomainError, match="rho14"):
        XState(0.25, 0.25, 0.25, 0.25, rho14=0.3)
    with pytest.raises(DomainError, match="rho23"):
        XState(0.25, 0.25, 0.25, 0.25, rho23=0.26j)
    XState(0.25, 0.25, 0.25, 0.25, rho14=0.25, rho23=-0.25j)


def test_from_weight():
    p = EWLParams.from_weight(0.9, 0.5, "rho2")
    assert p.a == pytest.approx(INV_SQRT2)
    assert p.flavor is Flavor.TWO_EXCITATION
    with pytest.raises(DomainError):
        EWLParams.from_weight(0.9, 1.5)
