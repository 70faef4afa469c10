import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rapidities, unit_vectors, close
from oracles import wigner_rotation_product
from relent.bell import spin_observable
from relent.errors import InvalidDirectionError, InvalidMomentumError
from relent.relativity import (
    X_HAT,
    Y_HAT,
    Z_HAT,
    boost,
    four_momentum,
    inverse_lorentz,
    invariant_mass,
    is_lorentz,
    lorentz_from_sl2c,
    observer_boost,
    rest_momentum,
    rotation_axis_angle,
    sl2c_from_lorentz,
    spinor_boost,
    standard_boost,
    su2_from_rotation,
    wigner_angle,
    wigner_rotation,
    wigner_su2,
    y_rotation_angle,
)

# arctan(sinh(1)^2 / (2 cosh(1))); sinh(1)^2 / (2 cosh(1)) = 0.4475131805756791
DELTA_1_1 = 0.42078396163807286


def _rotation_y(t):
    return np.array([[np.cos(t), 0, np.sin(t)], [0, 1, 0], [-np.sin(t), 0, np.cos(t)]])


def test_boost_identity_and_additivity():
    assert np.array_equal(boost(0.0, Z_HAT), np.eye(4))
    assert close(boost(0.3, Z_HAT) @ boost(0.9, Z_HAT), boost(1.2, Z_HAT), atol=1e-12)


def test_boost_rest_momentum():
    m, xi = 2.5, 0.7
    out = boost(xi, Z_HAT) @ rest_momentum(m)
    assert close(out, [m * np.cosh(xi), 0, 0, m * np.sinh(xi)], atol=1e-12)


def test_boost_rejects_non_unit_axis():
    with pytest.raises(InvalidDirectionError):
        boost(0.5, [1.0, 1.0, 0.0])


def test_observer_boost_matches_printed_x_matrix():
    xi = 0.8
    lam = observer_boost(xi)
    expected = np.eye(4)
    expected[:2, :2] = [[np.cosh(xi), -np.sinh(xi)], [-np.sinh(xi), np.cosh(xi)]]
    assert close(lam, expected, atol=1e-15)


@settings(max_examples=100, deadline=None)
@given(xi=st.floats(-4, 4), axis=unit_vectors())
def test_boosts_preserve_metric_and_are_symmetric(xi, axis):
    lam = boost(xi, axis)
    assert is_lorentz(lam, atol=1e-12 * max(1.0, np.cosh(xi) ** 2))
    assert close(lam, lam.T, atol=0)


def test_standard_boost_examples():
    assert np.array_equal(standard_boost(rest_momentum(1.3)), np.eye(4))
    eta = 0.9
    p = four_momentum(1.0, eta, Z_HAT)
    assert close(standard_boost(p), boost(eta, Z_HAT), atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(eta=rapidities, axis=unit_vectors(), m=st.floats(0.1, 10))
def test_standard_boost_round_trip(eta, axis, m):
    p = four_momentum(m, eta, axis)
    lp = standard_boost(p)
    assert close(lp @ rest_momentum(m), p, rtol=1e-10, atol=1e-10 * m)
    assert close(np.linalg.solve(lp, p), rest_momentum(m), rtol=1e-10, atol=1e-9 * p[0])
    assert close(lp, lp.T, atol=0)


@pytest.mark.parametrize("p", [[-1, 0, 0, 0], [1, 2, 0, 0], [0, 0, 0, 0]])
def test_standard_boost_rejects_bad_momenta(p):
    with pytest.raises(InvalidMomentumError):
        standard_boost(np.array(p, dtype=float))


def test_invariant_mass():
    assert abs(invariant_mass(four_momentum(1.7, 2.0, X_HAT)) - 1.7) < 1e-12


def test_wigner_rotation_collinear_boost_is_identity():
    p = four_momentum(1.0, 0.7, Z_HAT)
    q = four_momentum(1.0, 1.9, Z_HAT)
    assert close(wigner_rotation(standard_boost(q), p), np.eye(4), atol=1e-12)


@pytest.mark.parametrize("sign", [1, -1])
def test_wigner_rotation_perpendicular_geometry(sign):
    eta, xi = 1.2, 0.8
    w = wigner_rotation(observer_boost(xi), four_momentum(1.0, eta, sign * Z_HAT))
    delta = wigner_angle(eta, xi)
    # p+ along +z rotates about +y by -delta, p- by +delta
    assert close(w[1:, 1:], _rotation_y(-sign * delta), atol=1e-12)
    axis, angle = rotation_axis_angle(w)
    assert abs(angle - delta) < 1e-12
    assert close(axis, -sign * Y_HAT, atol=1e-12)
    # axis antiparallel to u x v for the particle moving along +z and the observer along +x
    if sign == 1:
        assert np.dot(axis, np.cross(Z_HAT, X_HAT)) < 0


def test_wigner_angle_values():
    assert wigner_angle(0.0, 3.0) == 0.0
    assert abs(wigner_angle(1.0, 1.0) - DELTA_1_1) < 1e-15
    assert abs(np.arctan(np.sinh(1) ** 2 / (2 * np.cosh(1))) - DELTA_1_1) < 1e-15
    w = wigner_rotation(observer_boost(1.0), four_momentum(1.0, 1.0, Z_HAT))
    assert abs(-y_rotation_angle(w) - DELTA_1_1) < 1e-9
    assert abs(wigner_angle(30.0, 30.0) - np.pi / 2) < 1e-9


def test_wigner_angle_mass_independent():
    for m in (0.01, 1.0, 938.0):
        w = wigner_rotation(observer_boost(1.0), four_momentum(m, 1.0, Z_HAT))
        assert abs(-y_rotation_angle(w) - DELTA_1_1) < 1e-9


def test_wigner_angle_monotone_on_grid():
    grid = np.linspace(0.05, 6, 60)
    table = np.array([[wigner_angle(e, x) for x in grid] for e in grid])
    assert np.all(np.diff(table, axis=0) > 0)
    assert np.all(np.diff(table, axis=1) > 0)
    assert np.all((table >= 0) & (table < np.pi / 2))


@settings(max_examples=100, deadline=None)
@given(eta=rapidities, xi=rapidities, axis=unit_vectors(), m=st.floats(0.1, 5))
def test_wigner_rotation_is_little_group_element(eta, xi, axis, m):
    p = four_momentum(m, eta, axis)
    lam = observer_boost(xi)
    w = wigner_rotation(lam, p)
    assert is_lorentz(w, atol=1e-9)
    assert close(w @ rest_momentum(m), rest_momentum(m), atol=1e-9 * m)
    r = w[1:, 1:]
    assert close(r.T @ r, np.eye(3), atol=1e-9)
    assert abs(np.linalg.det(r) - 1) < 1e-9
    assert close(w[0], [1, 0, 0, 0], atol=1e-9)
    assert close(w[:, 0], [1, 0, 0, 0], atol=1e-9)


def test_inverse_lorentz():
    lam = boost(0.4, X_HAT) @ boost(1.1, Y_HAT)
    assert close(inverse_lorentz(lam) @ lam, np.eye(4), atol=1e-12)


def test_wigner_su2_examples():
    assert close(wigner_su2(0.0, +1), np.eye(2))
    d = 0.73
    assert close(wigner_su2(d, +1).T, wigner_su2(d, -1))
    assert close(wigner_su2(d, +1), wigner_su2(-d, -1))
    r = np.sqrt(2) / 2
    assert close(wigner_su2(np.pi / 2, +1), [[r, r], [-r, r]], atol=1e-15)


@settings(max_examples=100, deadline=None)
@given(d1=st.floats(-7, 7), d2=st.floats(-7, 7), branch=st.sampled_from([1, -1]))
def test_wigner_su2_group_and_unitarity(d1, d2, branch):
    u = wigner_su2(d1, branch)
    assert close(u @ u.conj().T, np.eye(2), atol=1e-12)
    assert abs(np.linalg.det(u) - 1) < 1e-12
    assert close(u @ wigner_su2(d2, branch), wigner_su2(d1 + d2, branch), atol=1e-12)


@pytest.mark.parametrize("sign,branch", [(1, 1), (-1, -1)])
def test_sign_map_kinematics_to_printed_matrices(sign, branch):
    eta, xi = 0.9, 1.7
    w = wigner_rotation(observer_boost(xi), four_momentum(1.0, eta, sign * Z_HAT))
    u = su2_from_rotation(w)
    printed = wigner_su2(wigner_angle(eta, xi), branch)
    # equal up to the SU(2) double-cover sign
    assert min(np.abs(u - printed).max(), np.abs(u + printed).max()) < 1e-12


@settings(max_examples=100, deadline=None)
@given(axis=unit_vectors(), angle=st.floats(0, np.pi), v=unit_vectors())
def test_su2_from_rotation_conjugation(axis, angle, v):
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    rot = np.eye(3) + np.sin(angle) * k + (1 - np.cos(angle)) * k @ k
    u = su2_from_rotation(rot)
    assert close(u @ spin_observable(v) @ u.conj().T, spin_observable(rot @ v), atol=1e-9)


def test_rotation_axis_angle_near_pi():
    rot = _rotation_y(np.pi)
    axis, angle = rotation_axis_angle(rot)
    assert abs(angle - np.pi) < 1e-12
    assert close(np.abs(axis), Y_HAT)
    axis, angle = rotation_axis_angle(np.eye(3))
    assert angle == 0.0


@settings(max_examples=100, deadline=None)
@given(xi=rapidities, eta=rapidities, n1=unit_vectors(), n2=unit_vectors(), angle=st.floats(0, np.pi), axis=unit_vectors())
def test_sl2c_lift_round_trip(xi, eta, n1, n2, angle, axis):
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    rot = np.eye(4)
    rot[1:, 1:] = np.eye(3) + np.sin(angle) * k + (1 - np.cos(angle)) * k @ k
    lam = boost(xi, n1) @ rot @ boost(eta, n2)
    a = sl2c_from_lorentz(lam)
    assert abs(np.linalg.det(a) - 1) < 1e-9
    assert close(lorentz_from_sl2c(a), lam, atol=1e-9 * np.abs(lam).max())


def test_sl2c_lift_of_half_turn():
    rot = np.diag([1.0, -1.0, 1.0, -1.0])
    assert close(lorentz_from_sl2c(sl2c_from_lorentz(rot)), rot)


@settings(max_examples=100, deadline=None)
@given(eta=rapidities, axis=unit_vectors(), m=st.floats(0.1, 10))
def test_spinor_boost_matches_standard_boost(eta, axis, m):
    p = four_momentum(m, eta, axis)
    a = spinor_boost(p)
    assert close(a, a.conj().T)
    assert close(lorentz_from_sl2c(a), standard_boost(p), atol=1e-9 * p[0])


@settings(max_examples=100, deadline=None)
@given(eta=st.floats(0, 2), xi=st.floats(0, 2), axis=unit_vectors(), m=st.floats(0.1, 5))
def test_wigner_rotation_matches_matrix_product(eta, xi, axis, m):
    p = four_momentum(m, eta, axis)
    lam = observer_boost(xi)
    assert close(wigner_rotation(lam, p), wigner_rotation_product(lam, p), atol=1e-11)


def test_wigner_rotation_accurate_at_large_rapidity():
    # the literal 4x4 product loses ~1e-8 here; the spinor route does not
    for eta, xi in ((5.0, 5.0), (8.0, 3.0)):
        w = wigner_rotation(observer_boost(xi), four_momentum(1.0, eta, Z_HAT))
        assert close(w @ rest_momentum(), rest_momentum(), atol=1e-10)
        assert close(w[1:, 1:].T @ w[1:, 1:], np.eye(3), atol=1e-10)
        assert abs(-y_rotation_angle(w) - wigner_angle(eta, xi)) < 1e-10
