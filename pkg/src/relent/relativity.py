"""Four-vectors, pure boosts and the Wigner little-group rotation.

Natural units (hbar = c = 1) and metric diag(1, -1, -1, -1). Four-vectors are
real arrays (t, x, y, z). ``boost(xi, n)`` is the active boost that sends the
rest momentum (m, 0, 0, 0) to (m cosh xi, m sinh xi n).
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidDirectionError, InvalidMomentumError

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])

_UNIT_TOL = 1e-12


def minkowski_dot(p, q) -> float:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return float(p[0] * q[0] - p[1:] @ q[1:])


def invariant_mass(p) -> float:
    m2 = minkowski_dot(p, p)
    if m2 <= 0.0:
        raise InvalidMomentumError(f"four-momentum {p} is not timelike")
    return float(np.sqrt(m2))


def four_momentum(mass: float, rapidity: float, axis=Z_HAT) -> np.ndarray:
    """Momentum of a particle of given mass moving with ``rapidity`` along ``axis``."""
    axis = np.asarray(axis, dtype=float)
    return np.concatenate([[mass * np.cosh(rapidity)], mass * np.sinh(rapidity) * axis])


def rest_momentum(mass: float = 1.0) -> np.ndarray:
    return np.array([mass, 0.0, 0.0, 0.0])


def is_lorentz(lam, atol: float = 1e-12) -> bool:
    lam = np.asarray(lam, dtype=float)
    return bool(np.allclose(lam.T @ METRIC @ lam, METRIC, atol=atol, rtol=0))


def boost(xi: float, axis) -> np.ndarray:
    axis = np.asarray(axis, dtype=float)
    if axis.shape != (3,) or abs(np.linalg.norm(axis) - 1.0) > _UNIT_TOL:
        raise InvalidDirectionError(f"boost axis {axis} is not a unit 3-vector")
    ch, sh = np.cosh(xi), np.sinh(xi)
    lam = np.eye(4)
    lam[0, 0] = ch
    lam[0, 1:] = sh * axis
    lam[1:, 0] = sh * axis
    lam[1:, 1:] += (ch - 1.0) * np.outer(axis, axis)
    return lam


def observer_boost(xi: float) -> np.ndarray:
    """Coordinate change to an observer moving along +x with rapidity ``xi``.

    Equivalently the system is boosted along -x; the upper-left block is
    [[cosh xi, -sinh xi], [-sinh xi, cosh xi]].
    """
    return boost(xi, -X_HAT)


def standard_boost(p) -> np.ndarray:
    """The pure boost L(p) with L(p) (m, 0, 0, 0) = p."""
    p = np.asarray(p, dtype=float)
    if p.shape != (4,) or p[0] <= 0.0:
        raise InvalidMomentumError(f"four-momentum {p} must have positive energy")
    m = invariant_mass(p)
    pnorm = np.linalg.norm(p[1:])
    if pnorm == 0.0:
        return np.eye(4)
    # rescale first so subnormal components still give a unit axis
    axis = p[1:] / np.abs(p[1:]).max()
    return boost(np.arcsinh(pnorm / m), axis / np.linalg.norm(axis))


def inverse_lorentz(lam) -> np.ndarray:
    # Lambda^-1 = g Lambda^T g
    return METRIC @ np.asarray(lam, dtype=float).T @ METRIC


def wigner_angle(eta: float, xi: float) -> float:
    """Wigner angle for a particle with rapidity ``eta`` seen from a perpendicular boost ``xi``."""
    return float(np.arctan2(np.sinh(eta) * np.sinh(xi), np.cosh(eta) + np.cosh(xi)))


def y_rotation_angle(rot) -> float:
    """Angle t of a rotation about +y, R = [[cos t, 0, sin t], [0, 1, 0], [-sin t, 0, cos t]].

    Accepts either the 3x3 matrix or a 4x4 Lorentz matrix (spatial block used).
    """
    rot = np.asarray(rot, dtype=float)
    if rot.shape == (4, 4):
        rot = rot[1:, 1:]
    return float(np.arctan2(rot[0, 2] - rot[2, 0], rot[0, 0] + rot[2, 2]))


def rotation_axis_angle(rot) -> tuple[np.ndarray, float]:
    """Axis and angle in [0, pi] of a proper 3x3 rotation."""
    rot = np.asarray(rot, dtype=float)
    if rot.shape == (4, 4):
        rot = rot[1:, 1:]
    cos_t = np.clip((np.trace(rot) - 1.0) / 2.0, -1.0, 1.0)
    anti = np.array([rot[2, 1] - rot[1, 2], rot[0, 2] - rot[2, 0], rot[1, 0] - rot[0, 1]])
    sin_t = np.linalg.norm(anti) / 2.0
    angle = float(np.arctan2(sin_t, cos_t))
    if sin_t < 1e-15 and cos_t > 0:
        return Z_HAT.copy(), 0.0
    if cos_t > 0 or sin_t > 1e-6:
        return anti / (2.0 * sin_t), angle
    # near pi: R ~ 2 n n^T - 1, take the largest column of R + 1
    sym = (rot + np.eye(3)) / 2.0
    k = int(np.argmax(np.diag(sym)))
    axis = sym[:, k] / np.sqrt(sym[k, k])
    # fix the sign from the (small) antisymmetric part when it is resolvable
    if anti @ axis < 0:
        axis = -axis
    return axis, angle


PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


SIGMA4 = np.concatenate([np.eye(2, dtype=complex)[None], PAULI])


def lorentz_from_sl2c(a) -> np.ndarray:
    """Lorentz matrix of A in SL(2,C), acting as x.sigma -> A (x.sigma) A^dagger."""
    a = np.asarray(a, dtype=complex)
    return 0.5 * np.real(np.einsum("mij,jk,nkl,li->mn", SIGMA4, a, SIGMA4, a.conj().T))


def sl2c_from_lorentz(lam) -> np.ndarray:
    """One of the two SL(2,C) lifts of a proper orthochronous Lorentz matrix."""
    lam = np.asarray(lam, dtype=float)
    # sum lam[m, n] s_m P s_n is proportional to A for any seed P unless it vanishes;
    # take the best conditioned seed
    best = max(
        (np.einsum("mn,mij,jk,nkl->il", lam, SIGMA4, seed, SIGMA4) for seed in SIGMA4),
        key=lambda m: abs(np.linalg.det(m)),
    )
    return best / np.sqrt(np.linalg.det(best))


def spinor_boost(p, mass: float | None = None) -> np.ndarray:
    """Hermitian SL(2,C) image of L(p): (m + p.sigma) / sqrt(2 m (m + p0))."""
    p = np.asarray(p, dtype=float)
    m = invariant_mass(p) if mass is None else mass
    x = np.einsum("m,mij->ij", p, SIGMA4)
    return (m * np.eye(2) + x) / np.sqrt(2.0 * m * (m + p[0]))


def wigner_spinor(lam, p, mass: float | None = None) -> np.ndarray:
    """SU(2) element of W(lam, p), up to overall sign."""
    lam = np.asarray(lam, dtype=float)
    p = np.asarray(p, dtype=float)
    if p.shape != (4,) or p[0] <= 0.0:
        raise InvalidMomentumError(f"four-momentum {p} must have positive energy")
    m = invariant_mass(p) if mass is None else mass
    q = lam @ p
    # L(q)^-1 is the boost to the parity-flipped momentum
    to_rest = spinor_boost(q * np.array([1.0, -1.0, -1.0, -1.0]), m)
    return to_rest @ sl2c_from_lorentz(lam) @ spinor_boost(p, m)


def wigner_rotation(lam, p, mass: float | None = None) -> np.ndarray:
    """W(lam, p) = L^-1(lam p) lam L(p), a rotation fixing the rest momentum.

    Built from 2x2 spinor factors, whose entries grow like exp(rapidity / 2)
    rather than exp(rapidity), so the result stays accurate at large rapidity.
    """
    return lorentz_from_sl2c(wigner_spinor(lam, p, mass))


def su2_from_rotation(rot) -> np.ndarray:
    """Spin-1/2 image cos(t/2) - i sin(t/2) n.sigma of a rotation (up to overall sign).

    Satisfies U (a.sigma) U^dagger = (R a).sigma.
    """
    axis, angle = rotation_axis_angle(rot)
    n_sigma = np.tensordot(axis, PAULI, axes=1)
    return np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * n_sigma


def wigner_su2(delta: float, branch: int) -> np.ndarray:
    """U_+ (branch=+1) or U_- (branch=-1) = [[cos d/2, +-sin d/2], [-+sin d/2, cos d/2]].

    Sign map: U_+(delta) is the spin-1/2 image of wigner_rotation(observer_boost(xi), p_+)
    for p_+ along +z, which is a rotation about +y by -delta. U_- belongs to p_- along -z.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    c, s = np.cos(delta / 2), np.sin(delta / 2)
    return np.array([[c, branch * s], [-branch * s, c]], dtype=complex)
