"""Two-particle states over (momA, momB, spinA, spinB) and their boosted form.

Momentum encoding: |p+> -> |1>, |p-> -> |0>, so |p+, p-> is the qubit state |10>.
Spin encoding: |up> -> |0>, |down> -> |1>.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedScenarioError
from .relativity import wigner_angle, wigner_su2
from .tensor import is_normalized, tensor_product

SQRT1_2 = 1.0 / np.sqrt(2.0)

# momentum branch indices (two-qubit basis index of |momA momB>)
BRANCH_PLUS_MINUS = 2  # |p+, p->
BRANCH_MINUS_PLUS = 1  # |p-, p+>


@dataclass(frozen=True)
class BellPsi:
    """cos(beta)|up down> + sin(beta)|down up>."""

    beta: float

    name = "bell"


@dataclass(frozen=True)
class Triplet:
    """sin t cos f |uu> + sin t sin f (|ud> + |du>)/sqrt2 + cos t |dd>."""

    theta: float
    phi: float

    name = "triplet"


SpinFamily = BellPsi | Triplet


@dataclass(frozen=True)
class Scenario:
    alpha: float
    spin: SpinFamily
    delta: float = 0.0

    @classmethod
    def from_rapidities(cls, alpha, spin, eta, xi):
        return cls(alpha, spin, wigner_angle(eta, xi))

    def initial_state(self) -> np.ndarray:
        return compose_total(momentum_state(self.alpha), spin_state(self.spin))

    def boosted_state(self) -> np.ndarray:
        return boost_total(self.initial_state(), self.delta)


def momentum_state(alpha: float) -> np.ndarray:
    psi = np.zeros(4, dtype=complex)
    psi[BRANCH_PLUS_MINUS] = np.cos(alpha)
    psi[BRANCH_MINUS_PLUS] = np.sin(alpha)
    return psi


def spin_state(family: SpinFamily) -> np.ndarray:
    if isinstance(family, BellPsi):
        return np.array([0.0, np.cos(family.beta), np.sin(family.beta), 0.0], dtype=complex)
    if isinstance(family, Triplet):
        st, ct = np.sin(family.theta), np.cos(family.theta)
        mid = st * np.sin(family.phi) * SQRT1_2
        return np.array([st * np.cos(family.phi), mid, mid, ct], dtype=complex)
    raise TypeError(f"unknown spin family {family!r}")


def compose_total(mom, spin) -> np.ndarray:
    mom = np.asarray(mom, dtype=complex)
    spin = np.asarray(spin, dtype=complex)
    if mom.shape != (4,) or spin.shape != (4,):
        raise ValueError(f"expected two 2-qubit states, got shapes {mom.shape} and {spin.shape}")
    if not (is_normalized(mom) and is_normalized(spin)):
        raise ValueError("momentum and spin states must be normalized")
    return tensor_product(mom, spin)


def boost_total(state, delta: float) -> np.ndarray:
    """Apply the momentum-controlled Wigner rotations for Wigner angle ``delta``.

    Branch |p+, p-> gets U+ (x) U- on the spins, branch |p-, p+> gets U- (x) U+.
    The momentum labels become the boosted momenta but keep their qubit values.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (16,):
        raise ValueError(f"expected a 4-qubit state, got shape {state.shape}")
    blocks = state.reshape(4, 4)  # rows: momentum branch, columns: spin pair
    if np.abs(blocks[0]).max() > 1e-12 or np.abs(blocks[3]).max() > 1e-12:
        raise UnsupportedScenarioError("state has weight on equal-momentum branches |00> or |11>")
    u_plus, u_minus = wigner_su2(delta, +1), wigner_su2(delta, -1)
    out = np.zeros_like(blocks)
    out[BRANCH_PLUS_MINUS] = np.kron(u_plus, u_minus) @ blocks[BRANCH_PLUS_MINUS]
    out[BRANCH_MINUS_PLUS] = np.kron(u_minus, u_plus) @ blocks[BRANCH_MINUS_PLUS]
    return out.reshape(16)


def bell_state(name: str) -> np.ndarray:
    """Two-qubit Bell states by name: psi+, psi-, phi+, phi-."""
    up_down = {"psi+": (0, 1, 1, 0), "psi-": (0, 1, -1, 0), "phi+": (1, 0, 0, 1), "phi-": (1, 0, 0, -1)}
    return np.array(up_down[name], dtype=complex) * SQRT1_2
