"""Pauli-Lubanski spin observables, frame-covariant directions and CHSH.

A :class:`Frame` describes the observer: the source frame has the two particles
moving along +-z with rapidity ``eta``; the observer moves along +x with
rapidity ``xi`` (``xi = 0`` is the source frame). States passed to
:func:`correlation` and :func:`chsh` are always source-frame states; the
boost to the observer's frame is applied internally.

With ``transform=True`` (default) setup directions are rest-frame directions
``a`` which the observer sees as a'' = Lambda L(p) a, one per momentum branch.
With ``transform=False`` the observer reuses the 3-vectors verbatim as purely
spatial directions in their own frame.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import InvalidDirectionError, SingularObservableError
from .relativity import (
    PAULI,
    X_HAT,
    Y_HAT,
    Z_HAT,
    four_momentum,
    inverse_lorentz,
    observer_boost,
    standard_boost,
    wigner_angle,
)
from .states import boost_total

SQRT2 = np.sqrt(2.0)
TSIRELSON = 2.0 * SQRT2

_SINGULAR_TOL = 1e-12


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise InvalidDirectionError(f"direction {v} is not a 3-vector")
    n = np.linalg.norm(v)
    if n < _SINGULAR_TOL:
        raise InvalidDirectionError("zero direction")
    return v / n


def check_unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > 1e-12:
        raise InvalidDirectionError(f"direction {v} is not a unit 3-vector")
    return v


def lift(a) -> np.ndarray:
    """(0, a) as a four-vector; four-vectors pass through unchanged."""
    a = np.asarray(a, dtype=float)
    if a.shape == (4,):
        return a
    if a.shape == (3,):
        return np.concatenate([[0.0], a])
    raise InvalidDirectionError(f"cannot lift {a} to a four-vector")


def spin_observable(n) -> np.ndarray:
    """n.sigma for a 3-vector n."""
    return np.tensordot(np.asarray(n, dtype=float), PAULI, axes=1)


def rest_spin_observable(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return spin_observable(a / np.linalg.norm(a))


def transform_direction(lam, a) -> np.ndarray:
    return np.asarray(lam, dtype=float) @ lift(a)


def normalize_spatial(a4) -> np.ndarray:
    spatial = np.asarray(a4, dtype=float)[1:]
    norm = np.linalg.norm(spatial)
    if norm < _SINGULAR_TOL:
        raise InvalidDirectionError("four-vector has no spatial part to normalize")
    return spatial / norm


def pauli_lubanski_direction(a, p) -> np.ndarray:
    """Detector direction as seen from the particle rest frame: spatial part of L^-1(p) a, normalized.

    ``a`` is either a spatial 3-vector (lifted with zero time component) or a four-vector.
    """
    rest = inverse_lorentz(standard_boost(p)) @ lift(a)
    try:
        return normalize_spatial(rest)
    except InvalidDirectionError as exc:
        raise SingularObservableError(str(exc)) from None


def pauli_lubanski_direction_velocity(a, p) -> np.ndarray:
    """Same direction from the velocity decomposition of a unit 3-vector ``a``:

        (sqrt(1 - b^2) a_perp + a_par) / sqrt(1 + b^2 (|a_par|^2 - 1))
    """
    a = check_unit(a)
    p = np.asarray(p, dtype=float)
    pnorm = np.linalg.norm(p[1:])
    if pnorm == 0.0:
        return a.copy()
    beta = pnorm / p[0]
    p_hat = p[1:] / pnorm
    a_par = (a @ p_hat) * p_hat
    a_perp = a - a_par
    denom = np.sqrt(1.0 + beta**2 * (a_par @ a_par - 1.0))
    if denom < _SINGULAR_TOL:
        raise SingularObservableError("direction degenerates at this velocity")
    return (np.sqrt(1.0 - beta**2) * a_perp + a_par) / denom


def pauli_lubanski_observable(a, p) -> np.ndarray:
    return spin_observable(pauli_lubanski_direction(a, p))


@dataclass(frozen=True)
class Frame:
    eta: float = 1.0
    xi: float = 0.0
    mass: float = 1.0

    @property
    def delta(self) -> float:
        return wigner_angle(self.eta, self.xi)

    @property
    def lorentz(self) -> np.ndarray:
        return observer_boost(self.xi)

    @property
    def momenta(self) -> tuple[np.ndarray, np.ndarray]:
        """Source-frame momenta for momentum-qubit values (0, 1) = (p-, p+)."""
        return (
            four_momentum(self.mass, self.eta, -Z_HAT),
            four_momentum(self.mass, self.eta, Z_HAT),
        )

    @property
    def boosted_momenta(self) -> tuple[np.ndarray, np.ndarray]:
        lam = self.lorentz
        return tuple(lam @ p for p in self.momenta)


def joint_observable(a, branch_momenta, lorentz=None) -> np.ndarray:
    """Observable on one particle's (momentum, spin) qubit pair.

    Block diagonal in momentum: |m><m| (x) a_hat(p_m) for m = 0, 1. If ``lorentz``
    is given, ``branch_momenta`` are source-frame momenta and each block uses the
    transformed direction lorentz L(p_m) a with the boosted momentum lorentz p_m.
    """
    p0, p1 = (np.asarray(p, dtype=float) for p in branch_momenta)
    if np.allclose(p0, p1, atol=1e-12, rtol=0):
        raise ValueError("the two branch momenta must be distinct")
    blocks = []
    for p in (p0, p1):
        if lorentz is None:
            blocks.append(pauli_lubanski_observable(a, p))
        else:
            direction = lorentz @ standard_boost(p) @ lift(a)
            blocks.append(pauli_lubanski_observable(direction, lorentz @ p))
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = blocks[0]
    out[2:, 2:] = blocks[1]
    return out


def two_particle_observable(obs_a, obs_b) -> np.ndarray:
    """Embed Alice's (q0, q2) and Bob's (q1, q3) observables into the 16-dim space."""
    # kron order (q0, q2, q1, q3) -> reorder axes to (q0, q1, q2, q3)
    full = np.kron(obs_a, obs_b).reshape((2,) * 8)
    full = full.transpose(0, 2, 1, 3, 4, 6, 5, 7)
    return full.reshape(16, 16)


def _frame_observable(a, frame: Frame, transform: bool) -> np.ndarray:
    if transform:
        return joint_observable(a, frame.momenta, frame.lorentz)
    return joint_observable(a, frame.boosted_momenta)


def _expectation(boosted, obs_a, obs_b) -> float:
    psi = boosted.reshape(2, 2, 2, 2)  # (mA, mB, sA, sB)
    oa = obs_a.reshape(2, 2, 2, 2)  # (mA, sA, mA', sA')
    ob = obs_b.reshape(2, 2, 2, 2)
    val = np.einsum("abik,aicj,bkdl,cdjl->", psi.conj(), oa, ob, psi)
    return float(val.real)


def correlation(state, a, b, frame: Frame = Frame(), transform: bool = True) -> float:
    boosted = boost_total(state, frame.delta)
    return _expectation(boosted, _frame_observable(a, frame, transform), _frame_observable(b, frame, transform))


@dataclass(frozen=True, eq=False)
class MeasurementSetup:
    """CHSH directions: Alice uses ``a`` and ``a2``, Bob uses ``b`` and ``b2``."""

    a: np.ndarray
    a2: np.ndarray
    b: np.ndarray
    b2: np.ndarray

    def __post_init__(self):
        for name in ("a", "a2", "b", "b2"):
            object.__setattr__(self, name, check_unit(getattr(self, name)))

    def directions(self):
        return self.a, self.a2, self.b, self.b2

    def angles(self) -> np.ndarray:
        """Eight angles: (polar, azimuth) for a, a2, b, b2."""
        out = []
        for v in self.directions():
            out += [np.arccos(np.clip(v[2], -1.0, 1.0)), np.arctan2(v[1], v[0])]
        return np.array(out)

    @classmethod
    def from_angles(cls, angles) -> "MeasurementSetup":
        angles = np.asarray(angles, dtype=float).reshape(4, 2)
        vecs = [
            np.array([np.sin(t) * np.cos(f), np.sin(t) * np.sin(f), np.cos(t)]) for t, f in angles
        ]
        return cls(*vecs)


OPTIMAL_PLANAR_SETUP = MeasurementSetup(
    a=X_HAT,
    a2=Y_HAT,
    b=(X_HAT + Y_HAT) / SQRT2,
    b2=(Y_HAT - X_HAT) / SQRT2,
)


def chsh_terms(state, setup: MeasurementSetup, frame: Frame = Frame(), transform: bool = True) -> dict:
    boosted = boost_total(state, frame.delta)
    return _chsh_terms_boosted(boosted, setup, frame, transform)


def _chsh_terms_boosted(boosted, setup, frame, transform) -> dict:
    oa, oa2, ob, ob2 = (_frame_observable(v, frame, transform) for v in setup.directions())
    terms = {
        "E(a,b)": _expectation(boosted, oa, ob),
        "E(a,b2)": _expectation(boosted, oa, ob2),
        "E(a2,b2)": _expectation(boosted, oa2, ob2),
        "E(a2,b)": _expectation(boosted, oa2, ob),
    }
    terms["S"] = abs(terms["E(a,b)"] - terms["E(a,b2)"]) + abs(terms["E(a2,b2)"] + terms["E(a2,b)"])
    return terms


def chsh(state, setup: MeasurementSetup, frame: Frame = Frame(), transform: bool = True) -> float:
    return chsh_terms(state, setup, frame, transform)["S"]


class _FastCHSH:
    """CHSH objective reduced to 3x3 spin-correlation tensors per momentum branch.

    Only the branches |p+, p-> and |p-, p+> carry weight, so
    E(a, b) = sum over branches of n_A(a)^T C n_B(b), where n_X are the
    per-branch rest-frame directions and C[i, j] = <chi| s_i (x) s_j |chi>.
    """

    def __init__(self, boosted, frame: Frame, transform: bool):
        lam = frame.lorentz
        maps = []
        for p in frame.momenta:
            to_rest = inverse_lorentz(standard_boost(lam @ p))
            maps.append((to_rest @ lam @ standard_boost(p) if transform else to_rest)[1:, 1:])
        self.maps = maps  # index = momentum qubit value
        blocks = boost_total_blocks(boosted)
        self.terms = []
        for m_a, m_b in ((1, 0), (0, 1)):
            chi = blocks[2 * m_a + m_b]
            ops = [np.kron(PAULI[i], PAULI[j]) for i in range(3) for j in range(3)]
            corr = np.array([np.vdot(chi, op @ chi).real for op in ops]).reshape(3, 3)
            self.terms.append((m_a, m_b, corr))

    def _dirs(self, v):
        out = []
        for m in self.maps:
            n = m @ v
            out.append(n / np.linalg.norm(n))
        return out

    def __call__(self, setup: MeasurementSetup) -> float:
        a, a2, b, b2 = (self._dirs(v) for v in setup.directions())

        def e(x, y):
            return sum(x[ma] @ c @ y[mb] for ma, mb, c in self.terms)

        return abs(e(a, b) - e(a, b2)) + abs(e(a2, b2) + e(a2, b))


def boost_total_blocks(boosted) -> np.ndarray:
    """Spin vectors of the four momentum branches, shape (4, 4)."""
    return np.asarray(boosted, dtype=complex).reshape(4, 4)


def chsh_maximize(
    state,
    frame: Frame = Frame(),
    seed: int = 0,
    restarts: int = 16,
    transform: bool = True,
    tol: float = 1e-12,
) -> tuple[MeasurementSetup, float]:
    """Multi-start Nelder-Mead ascent of the CHSH value over the eight direction angles.

    Deterministic for a given seed. The best restart wins; ties within 1e-12
    go to the lowest restart index. The winner is re-polished until the value
    stops improving, and the returned value is recomputed with :func:`chsh`.
    """
    fast = _FastCHSH(boost_total(state, frame.delta), frame, transform)

    def ascend(x0):
        res = minimize(
            lambda x: -fast(MeasurementSetup.from_angles(x)),
            x0,
            method="Nelder-Mead",
            options={"xatol": 1e-9, "fatol": tol, "maxiter": 20000, "maxfev": 20000, "adaptive": True},
        )
        return res.x, -res.fun

    rng = np.random.default_rng(seed)
    best_x, best_val = None, -np.inf
    for _ in range(max(1, restarts)):
        x0 = np.column_stack([np.arccos(rng.uniform(-1, 1, 4)), rng.uniform(-np.pi, np.pi, 4)]).ravel()
        x, val = ascend(x0)
        if val > best_val + 1e-12:
            best_x, best_val = x, val

    for _ in range(10):
        x, val = ascend(best_x)
        if val <= best_val + tol:
            if val > best_val:
                best_x, best_val = x, val
            break
        best_x, best_val = x, val

    setup = MeasurementSetup.from_angles(best_x)
    return setup, chsh(state, setup, frame, transform)
