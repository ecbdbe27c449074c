"""Dense complex matrix helpers and a cyclic Jacobi eigensolver for Hermitian matrices.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. The eigensolver is
written out by hand (complex Givens rotations) so that results are bit-for-bit
reproducible and the phase of every eigenvector is fixed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_RTOL = 1e-12
OFFDIAG_RTOL = 1e-13
MAX_SWEEPS = 60
# magnitudes within this relative window count as a tie for phase fixing
PHASE_TIE_RTOL = 1e-12


class LinalgError(ValueError):
    pass


class DimensionError(LinalgError):
    pass


class NotHermitianError(LinalgError):
    pass


class ConvergenceError(LinalgError):
    pass


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and the matching orthonormal eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def __iter__(self):
        yield self.eigenvalues
        yield self.eigenvectors


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise LinalgError("matrix contains NaN or infinite entries")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(as_matrix(a), "fro"))


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; row index of the result is ``i_a * b.rows + i_b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def is_hermitian(a, rtol: float = HERMITIAN_RTOL) -> bool:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        return False
    return float(np.linalg.norm(m - m.conj().T, "fro")) <= rtol * float(np.linalg.norm(m, "fro"))


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off, "fro"))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero ``a[p, q]`` in place with a complex Givens rotation; accumulate it into ``v``."""
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    w = np.conj(apq) / r  # e^{-i phi}
    app, aqq = a[p, p].real, a[q, q].real
    theta = (aqq - app) / (2.0 * r)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # G = diag(1, w) @ [[c, s], [-s, c]]
    gpp, gpq, gqp, gqq = c, s, -s * w, c * w

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = col_p * gpp + col_q * gqp
    a[:, q] = col_p * gpq + col_q * gqq
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = np.conj(gpp) * row_p + np.conj(gqp) * row_q
    a[q, :] = np.conj(gpq) * row_p + np.conj(gqq) * row_q
    a[p, q] = a[q, p] = 0.0
    a[p, p] = app - t * r
    a[q, q] = aqq + t * r

    vp, vq = v[:, p].copy(), v[:, q].copy()
    v[:, p] = vp * gpp + vq * gqp
    v[:, q] = vp * gpq + vq * gqq


def _fix_phase(v: np.ndarray) -> np.ndarray:
    out = v.copy()
    for k in range(out.shape[1]):
        mags = np.abs(out[:, k])
        top = mags.max()
        idx = int(np.flatnonzero(mags >= top * (1.0 - PHASE_TIE_RTOL))[0])
        out[:, k] *= np.conj(out[idx, k]) / mags[idx]
        out[idx, k] = mags[idx]
    return out


def eigh(h, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Eigenvalues come back ascending. Each eigenvector's largest-magnitude
    component is made real and positive (lowest index wins a tie). Inside a
    degenerate cluster the basis is deterministic but otherwise arbitrary.
    """
    h = as_matrix(h)
    n = h.shape[0]
    if h.shape[1] != n:
        raise DimensionError(f"eigh needs a square matrix, got {h.shape}")
    if not is_hermitian(h):
        raise NotHermitianError("matrix is not Hermitian within tolerance")

    a = 0.5 * (h + h.conj().T)
    v = identity(n)
    threshold = OFFDIAG_RTOL * float(np.linalg.norm(a, "fro"))

    sweeps = 0
    while _offdiag_norm(a) > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = _fix_phase(v[:, order])
    w.setflags(write=False)
    v.setflags(write=False)
    return EigenDecomposition(w, v, sweeps)
