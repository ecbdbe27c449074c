"""Bipartite pure states and density matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, eigh, is_hermitian

NORM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


class StateError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm amplitudes on ``C^dim_a (x) C^dim_b``, index ``i_a * dim_b + i_b``."""

    amplitudes: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1).copy()
        if self.dim_a < 1 or self.dim_b < 1:
            raise StateError("subsystem dimensions must be positive")
        if amps.size != self.dim_a * self.dim_b:
            raise StateError(f"{amps.size} amplitudes do not fit dims {self.dim_a}x{self.dim_b}")
        if not np.all(np.isfinite(amps)):
            raise StateError("amplitudes must be finite")
        if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
            raise StateError(f"state norm {np.linalg.norm(amps)!r} is not 1")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, amplitudes, dim_a: int, dim_b: int) -> "PureState":
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0.0:
            raise StateError("cannot normalize the zero vector")
        return cls(amps / norm, dim_a, dim_b)

    def overlap(self, other: "PureState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix).copy()
        if m.shape[0] != m.shape[1]:
            raise StateError(f"density matrix must be square, got {m.shape}")
        if not is_hermitian(m):
            raise StateError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > TRACE_TOL:
            raise StateError(f"density matrix trace {np.trace(m).real!r} is not 1")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def spectrum(self) -> np.ndarray:
        return eigh(self.matrix).eigenvalues

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))
