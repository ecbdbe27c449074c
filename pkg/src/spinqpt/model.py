"""Exchange-coupled spin pair in a transverse field, plus closed-form oracles.

The Hamiltonian is

    H = J (Sx(x)Sx + Sy(x)Sy + Sz(x)Sz) - B (Sx(x)1 + 1(x)Sx)

For the default system (Pauli matrices for a spin-1/2 electron, spin-1
matrices for the nucleus) the ground level has closed forms on both sides of
the level crossing at B = 2J; those are implemented here as test oracles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .linalg import EigenDecomposition, eigh, identity, kron
from .spin import SpinConvention, SpinOperators, make_spin_operators
from .states import PureState

SQRT2 = math.sqrt(2.0)


def _default_a() -> SpinOperators:
    return make_spin_operators(2, SpinConvention.PAULI_LIKE)


def _default_b() -> SpinOperators:
    return make_spin_operators(3, SpinConvention.STANDARD_SPIN)


@dataclass(frozen=True, eq=False)
class ModelParams:
    j: float
    b: float
    a_ops: SpinOperators = field(default_factory=_default_a)
    b_ops: SpinOperators = field(default_factory=_default_b)

    def __post_init__(self):
        if not (math.isfinite(self.j) and math.isfinite(self.b)):
            raise ValueError("j and b must be finite")

    @property
    def dims(self) -> tuple[int, int]:
        return self.a_ops.dim, self.b_ops.dim

    def with_field(self, b: float) -> "ModelParams":
        return replace(self, b=float(b))

    @property
    def is_paper_system(self) -> bool:
        return (
            self.a_ops.dim == 2
            and self.a_ops.convention is SpinConvention.PAULI_LIKE
            and self.b_ops.dim == 3
            and self.b_ops.convention is SpinConvention.STANDARD_SPIN
        )


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    da, db = p.dims
    ia, ib = identity(da), identity(db)
    exchange = sum(kron(sa, sb) for sa, sb in zip(p.a_ops, p.b_ops))
    zeeman = kron(p.a_ops.sx, ib) + kron(ia, p.b_ops.sx)
    return p.j * exchange - p.b * zeeman


def diagonalize(p: ModelParams) -> EigenDecomposition:
    return eigh(build_hamiltonian(p))


def _require_positive_j(j: float) -> None:
    if not j > 0:
        raise ValueError(f"closed forms assume J > 0, got {j!r}")


def _radical(j: float, b: float) -> float:
    return math.sqrt(b * b - 2.0 * j * b + 9.0 * j * j)


def closed_form_ground_energy(j: float, b: float) -> float:
    """Lowest eigenvalue of the default system: radical branch below B = 2J, J - 2B above."""
    _require_positive_j(j)
    if b < 0:
        raise ValueError(f"closed forms assume B >= 0, got {b!r}")
    if b < 2.0 * j:
        return -0.5 * b - 0.5 * j - 0.5 * _radical(j, b)
    return j - 2.0 * b


def high_field_energy(j: float, b: float) -> float:
    return j - 2.0 * b


def closed_form_state_high_field(j: float = 1.0, b: float = 0.0) -> PureState:
    """x-polarized product state (1, sqrt2, 1, 1, sqrt2, 1)/sqrt8; independent of j and b."""
    amps = np.array([1.0, SQRT2, 1.0, 1.0, SQRT2, 1.0]) / math.sqrt(8.0)
    return PureState(amps, 2, 3)


@dataclass(frozen=True, eq=False)
class ClosedFormState:
    coefficients: np.ndarray  # unnormalized a1..a6
    normalized: PureState


def low_field_coefficients(j: float, b: float, printed_sign: bool = False) -> np.ndarray:
    """Unnormalized bracket coefficients of the low-field ground state.

    ``printed_sign=True`` reproduces the originally published middle
    coefficient sqrt2 (3J - B - R)/(2B), which is not an eigenvector; the
    default uses sqrt2 (3J - B + R)/(2B).
    """
    r = _radical(j, b)
    mid = SQRT2 * (3.0 * j - b + (-r if printed_sign else r)) / (2.0 * b)
    outer = (3.0 * j + r) / b
    return np.array([-1.0, mid, outer, -outer, -mid, 1.0])


def printed_prefactor(j: float, b: float) -> float:
    r = _radical(j, b)
    return j * j / (9.0 * j * j + b * b - (j - b) * r - 2.0 * j * b)


def closed_form_state_low_field(j: float, b: float) -> ClosedFormState:
    _require_positive_j(j)
    if not 0.0 < b < 2.0 * j:
        raise ValueError(f"low-field closed form needs 0 < b < 2j, got b={b!r}, j={j!r}")
    coeffs = low_field_coefficients(j, b)
    coeffs.setflags(write=False)
    return ClosedFormState(coeffs, PureState.normalized(coeffs, 2, 3))


def eigen_residual(h: np.ndarray, state: PureState | np.ndarray, energy: float) -> float:
    """||H v - E v|| for a state or raw vector (raw vectors are normalized first)."""
    v = state.amplitudes if isinstance(state, PureState) else np.asarray(state, dtype=np.complex128)
    v = v / np.linalg.norm(v)
    return float(np.linalg.norm(h @ v - energy * v))
