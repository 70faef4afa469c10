"""Dense complex linear algebra for a handful of qubits.

States are plain numpy vectors of length 2**n and density matrices are
2**n x 2**n arrays. Qubit 0 is the most significant bit of the basis index.
For the two-particle system the qubits mean (momA, momB, spinA, spinB).
"""
from __future__ import annotations

from functools import reduce

import numpy as np

from .errors import InvalidPartitionError

MOM_A, MOM_B, SPIN_A, SPIN_B = 0, 1, 2, 3

NORM_TOL = 1e-12


def n_qubits(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if n < 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def basis_state(bits) -> np.ndarray:
    """|b0 b1 ...> as a complex vector (b0 is the high bit)."""
    bits = [int(b) for b in bits]
    psi = np.zeros(2 ** len(bits), dtype=complex)
    psi[int("".join(map(str, bits)), 2) if bits else 0] = 1.0
    return psi


def tensor_product(*factors) -> np.ndarray:
    """Kronecker product of states or operators; the first factor holds the high bits."""
    return reduce(np.kron, [np.asarray(f, dtype=complex) for f in factors])


def normalized(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return psi / np.linalg.norm(psi)


def is_normalized(psi, atol: float = NORM_TOL) -> bool:
    return abs(np.vdot(psi, psi).real - 1.0) <= atol


def density_matrix(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def _check_keep(keep, n: int) -> list[int]:
    keep = sorted(set(int(k) for k in keep))
    if not keep or len(keep) >= n:
        raise InvalidPartitionError(f"keep set {keep} must be a nonempty proper subset of {n} qubits")
    if keep[0] < 0 or keep[-1] >= n:
        raise InvalidPartitionError(f"qubit index out of range in {keep}")
    return keep


def partial_trace(rho, keep) -> np.ndarray:
    """Trace out every qubit not in ``keep``; kept qubits stay in ascending order."""
    rho = np.asarray(rho, dtype=complex)
    n = n_qubits(rho.shape[0])
    keep = _check_keep(keep, n)
    traced = [q for q in range(n) if q not in keep]
    t = rho.reshape((2,) * (2 * n))
    # row axes 0..n-1, column axes n..2n-1
    perm = keep + traced + [n + q for q in keep] + [n + q for q in traced]
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    t = t.transpose(perm).reshape(dk, dt, dk, dt)
    return np.einsum("ajbj->ab", t)


def reduced_density(psi, keep) -> np.ndarray:
    """Same as ``partial_trace(density_matrix(psi), keep)`` without forming the full matrix."""
    psi = np.asarray(psi, dtype=complex)
    n = n_qubits(psi.shape[0])
    keep = _check_keep(keep, n)
    traced = [q for q in range(n) if q not in keep]
    m = psi.reshape((2,) * n).transpose(keep + traced).reshape(2 ** len(keep), -1)
    return m @ m.conj().T


def purity(rho) -> float:
    rho = np.asarray(rho)
    # Tr(rho^2) for Hermitian rho is the squared Frobenius norm
    return float(np.sum(np.abs(rho) ** 2))


def linear_entropy(rho) -> float:
    return 1.0 - purity(rho)


def is_density_matrix(rho, atol: float = NORM_TOL) -> bool:
    rho = np.asarray(rho)
    if not np.allclose(rho, rho.conj().T, atol=atol, rtol=0):
        return False
    if abs(np.trace(rho) - 1.0) > atol:
        return False
    return bool(np.linalg.eigvalsh(rho).min() >= -1e-10)
