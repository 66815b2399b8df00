"""Exact dynamics of a four-qubit isotropic Heisenberg chain with tunable
next-nearest-neighbour coupling, with closed-form and numerical routes to
fidelity, l1-coherence, concurrence and entanglement of formation."""

from .analysis import (
    MeasureRecord,
    SweepGrid,
    evaluate_point,
    phase,
    sensitivity_loci,
    sweep,
    verify_table,
)
from .dynamics import PhasePoint, analytic_state, initial_state, numeric_evolve
from .spin import ChainParams, build_hamiltonian

__all__ = [
    "ChainParams",
    "MeasureRecord",
    "PhasePoint",
    "SweepGrid",
    "analytic_state",
    "build_hamiltonian",
    "evaluate_point",
    "initial_state",
    "numeric_evolve",
    "phase",
    "sensitivity_loci",
    "sweep",
    "verify_table",
]
