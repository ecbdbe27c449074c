"""Partial traces and von Neumann entropy (in bits) of bipartite pure states."""
from __future__ import annotations

import math

import numpy as np

from .linalg import DimensionError, eigh
from .model import ModelParams, diagonalize
from .states import PSD_TOL, DensityMatrix, PureState, StateError

__all__ = [
    "DegenerateGroundStateError",
    "DensityMatrix",
    "PureState",
    "degeneracy_tolerance",
    "density_from_pure",
    "ground_state_entropy",
    "partial_trace",
    "reduced_density",
    "state_entropy",
    "von_neumann_entropy",
]

DEGENERACY_RTOL = 1e-10


class DegenerateGroundStateError(ValueError):
    """The ground level is degenerate so its entanglement depends on the chosen basis."""

    def __init__(self, gap: float, entropies: list[float], b: float):
        self.gap = gap
        self.entropies = entropies
        self.b = b
        cands = ", ".join(f"{s:.12f}" for s in entropies)
        super().__init__(f"degenerate ground state at b={b!r} (gap={gap:.3e}); candidate entropies: {cands}")


def degeneracy_tolerance(e0: float) -> float:
    return DEGENERACY_RTOL * max(1.0, abs(e0))


def density_from_pure(state: PureState) -> DensityMatrix:
    v = state.amplitudes
    return DensityMatrix(np.outer(v, v.conj()))


def partial_trace(rho: DensityMatrix, dim_a: int, dim_b: int, keep: str = "A") -> DensityMatrix:
    """Trace out one factor of ``rho`` on ``C^dim_a (x) C^dim_b``; ``keep`` names the survivor."""
    if rho.dim != dim_a * dim_b:
        raise DimensionError(f"density matrix of size {rho.dim} does not match {dim_a}x{dim_b}")
    t = rho.matrix.reshape(dim_a, dim_b, dim_a, dim_b)
    keep = keep.upper()
    if keep == "A":
        return DensityMatrix(np.einsum("ikjk->ij", t))
    if keep == "B":
        return DensityMatrix(np.einsum("kikj->ij", t))
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def reduced_density(state: PureState, keep: str = "A") -> DensityMatrix:
    return partial_trace(density_from_pure(state), state.dim_a, state.dim_b, keep)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    lam = eigh(rho.matrix).eigenvalues.copy()
    if lam.min() < -PSD_TOL:
        raise StateError(f"eigenvalue {lam.min()!r} is negative; not a density matrix")
    lam[lam < 0.0] = 0.0
    nz = lam[lam > 0.0]
    s = float(-np.sum(nz * np.log2(nz)))
    return min(max(s, 0.0), math.log2(rho.dim))


def state_entropy(state: PureState, keep: str = "A") -> float:
    return von_neumann_entropy(reduced_density(state, keep))


def ground_state_entropy(p: ModelParams) -> float:
    """Entanglement entropy of the first subsystem in the ground state of ``p``.

    Raises DegenerateGroundStateError if the two lowest levels are within the
    degeneracy tolerance; the error carries the entropy of every vector in
    the degenerate ground multiplet.
    """
    dec = diagonalize(p)
    w, v = dec.eigenvalues, dec.eigenvectors
    da, db = p.dims
    tol = degeneracy_tolerance(w[0])
    gap = float(w[1] - w[0]) if len(w) > 1 else math.inf
    if gap <= tol:
        level = [k for k in range(len(w)) if w[k] - w[0] <= tol]
        entropies = [state_entropy(PureState.normalized(v[:, k], da, db)) for k in level]
        raise DegenerateGroundStateError(gap, entropies, p.b)
    return state_entropy(PureState.normalized(v[:, 0], da, db))
