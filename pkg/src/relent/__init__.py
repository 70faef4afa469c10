"""Relativistic entanglement of two massive spin-1/2 particles as a 4-qubit system."""
from .bell import Frame, MeasurementSetup, chsh, chsh_maximize, correlation
from .entanglement import (
    ALICE_BOB,
    CROSS,
    SPIN_VS_MOM,
    Bipartition,
    entanglement_delta,
    entanglement_pair,
    one_vs_three_total,
    partition_entanglement,
)
from .relativity import wigner_angle, wigner_rotation
from .states import BellPsi, Scenario, Triplet, boost_total, compose_total, momentum_state, spin_state

__version__ = "0.1.0"
