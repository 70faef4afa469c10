"""Linear-entropy entanglement across bipartitions of the four qubits.

The numeric pipeline (reduced density matrices of the pure state) is the
reference. The closed forms below are kept as regression cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidPartitionError
from .states import BellPsi, Scenario, Triplet
from .tensor import linear_entropy, reduced_density

ALL_QUBITS = frozenset(range(4))


@dataclass(frozen=True)
class Bipartition:
    block_a: frozenset
    name: str = ""

    def __post_init__(self):
        block = frozenset(int(q) for q in self.block_a)
        if not block or not block < ALL_QUBITS:
            raise InvalidPartitionError(f"block {sorted(block)} is not a nonempty proper subset of {{0,1,2,3}}")
        object.__setattr__(self, "block_a", block)

    @property
    def block_b(self) -> frozenset:
        return ALL_QUBITS - self.block_a

    @classmethod
    def singleton(cls, qubit: int) -> "Bipartition":
        return cls(frozenset({qubit}), f"singleton-{qubit}")


SPIN_VS_MOM = Bipartition(frozenset({0, 1}), "spin-vs-mom")
ALICE_BOB = Bipartition(frozenset({0, 2}), "alice-bob")
CROSS = Bipartition(frozenset({0, 3}), "cross")


def partition_entanglement(state, part: Bipartition) -> float:
    """Sum of the linear entropies of both blocks (equal for a pure state)."""
    e_a = linear_entropy(reduced_density(state, sorted(part.block_a)))
    e_b = linear_entropy(reduced_density(state, sorted(part.block_b)))
    return e_a + e_b


def one_vs_three_total(state) -> float:
    """Sum of the four single-qubit linear entropies."""
    return sum(linear_entropy(reduced_density(state, [q])) for q in range(4))


# ---------------------------------------------------------------- closed forms

ONE_V_THREE_UNBOOSTED = "one_v_three_unboosted"
ONE_V_THREE_BOOSTED = "one_v_three_boosted"
ONE_V_THREE_DIFF = "one_v_three_diff"
SPINMOM_BOOSTED = "spinmom_boosted"
ALICE_BOB_TAG = "alice_bob"

# The widely printed Alice-Bob expression for the Bell family uses 10 here; it
# gives -3/4 for a product state and 3/4 at the maximally entangled point.
# 16 reproduces 0 and 3/2 and matches the numeric pipeline (see DISCREPANCIES.md).
ALICE_BOB_BELL_CONSTANT = 16.0


def closed_form_bell(tag: str, alpha: float, beta: float, delta: float = 0.0) -> float:
    a, b, d = alpha, beta, delta
    if tag == ONE_V_THREE_UNBOOSTED:
        return 0.5 * (2 - np.cos(4 * a) - np.cos(4 * b))
    if tag == ONE_V_THREE_BOOSTED:
        return (
            18
            - 10 * np.cos(4 * a)
            - 6 * np.cos(4 * b)
            - 2 * np.cos(4 * a) * np.cos(4 * b)
            - 8 * np.cos(2 * d) * np.sin(2 * a) ** 2 * np.cos(2 * b) ** 2
        ) / 16
    if tag == ONE_V_THREE_DIFF:
        return np.sin(d) ** 2 * np.sin(2 * a) ** 2 * np.cos(2 * b) ** 2
    if tag == SPINMOM_BOOSTED:
        s2b = np.sin(2 * b)
        return (
            0.5
            * np.sin(d) ** 2
            * np.sin(2 * a) ** 2
            * (1 - s2b)
            * (3 + np.cos(2 * d) + 2 * np.sin(d) ** 2 * s2b)
        )
    if tag == ALICE_BOB_TAG:
        return (ALICE_BOB_BELL_CONSTANT - (3 + np.cos(4 * a)) * (3 + np.cos(4 * b))) / 8
    raise ValueError(f"unknown closed-form tag {tag!r} for the Bell family")


def closed_form_triplet(tag: str, alpha: float, theta: float, phi: float, delta: float = 0.0) -> float:
    a, t, f, d = alpha, theta, phi, delta
    overlap = (np.cos(t) + np.cos(f) * np.sin(t)) ** 2
    if tag == ONE_V_THREE_DIFF:
        bracket = -5 + np.cos(2 * t) + 2 * np.sin(t) ** 2 * np.cos(2 * f) + 4 * np.sin(2 * t) * np.cos(f)
        return -0.25 * np.sin(d) ** 2 * np.sin(2 * a) ** 2 * overlap * bracket
    if tag == SPINMOM_BOOSTED:
        f1 = 2 * np.cos(2 * d) * (3 + np.cos(2 * t)) - 2 * np.cos(2 * t)
        f2 = 8 * np.sin(d) ** 2 * (np.cos(2 * f) * np.sin(t) ** 2 + 2 * np.cos(f) * np.sin(2 * t))
        return (
            1
            - np.cos(a) ** 4
            - np.sin(a) ** 4
            + np.sin(d) ** 2 * np.sin(2 * a) ** 2 * overlap * (26 + f1 - f2) / 32
            - np.sin(2 * a) ** 2 * (10 + f1 - f2) ** 2 / 512
        )
    if tag == ALICE_BOB_TAG:
        inner = (
            -12 * np.cos(2 * t)
            - 13 * np.cos(4 * t)
            + 16 * (3 + 5 * np.cos(2 * t)) * np.cos(2 * f) * np.sin(t) ** 2
            + 8 * np.cos(4 * f) * np.sin(t) ** 4
            - 256 * np.cos(t) * np.cos(f) * np.sin(t) ** 3 * np.sin(f) ** 2
        )
        return (203 - 103 * np.cos(4 * a) + (3 + np.cos(4 * a)) * inner) / 256
    raise ValueError(f"unknown closed-form tag {tag!r} for the triplet family")


def closed_form(tag: str, scenario: Scenario) -> float:
    spin = scenario.spin
    if isinstance(spin, BellPsi):
        return closed_form_bell(tag, scenario.alpha, spin.beta, scenario.delta)
    if isinstance(spin, Triplet):
        return closed_form_triplet(tag, scenario.alpha, spin.theta, spin.phi, scenario.delta)
    raise TypeError(f"unknown spin family {spin!r}")


def entanglement_pair(scenario: Scenario, part: Bipartition | None) -> tuple[float, float]:
    """(unboosted, boosted) entanglement; ``part=None`` selects the 1-vs-3 sum."""
    measure = one_vs_three_total if part is None else (lambda s: partition_entanglement(s, part))
    return measure(scenario.initial_state()), measure(scenario.boosted_state())


def entanglement_delta(scenario: Scenario, part: Bipartition | None) -> float:
    before, after = entanglement_pair(scenario, part)
    return after - before
