"""Exact diagonalization, level crossing and ground-state entanglement of a spin-1/2 (x) spin-1 pair."""
from .entanglement import (
    DegenerateGroundStateError,
    density_from_pure,
    ground_state_entropy,
    partial_trace,
    von_neumann_entropy,
)
from .linalg import EigenDecomposition, dagger, eigh, kron, matmul
from .model import (
    ModelParams,
    build_hamiltonian,
    closed_form_ground_energy,
    closed_form_state_high_field,
    closed_form_state_low_field,
)
from .scan import CrossingReport, SweepRecord, detect_crossing, entropy_jump, find_entropy_peak, sweep
from .spin import SpinConvention, SpinOperators, make_spin_operators
from .states import DensityMatrix, PureState
from .validation import ValidationReport, validate_against_closed_forms

__version__ = "0.1.0"
