"""Spin operator triples in the descending-m basis (|up> first)."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .linalg import is_hermitian


class SpinConvention(str, enum.Enum):
    # Pauli matrices, eigenvalues +-1; only meaningful for a two-level subsystem
    PAULI_LIKE = "pauli"
    # canonical angular momentum matrices, Sz eigenvalues s, s-1, ..., -s
    STANDARD_SPIN = "spin"


@dataclass(frozen=True, eq=False)
class SpinOperators:
    dim: int
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    convention: SpinConvention

    def __post_init__(self):
        for name in ("sx", "sy", "sz"):
            m = getattr(self, name)
            if m.shape != (self.dim, self.dim):
                raise ValueError(f"{name} has shape {m.shape}, expected {(self.dim, self.dim)}")
            if not is_hermitian(m):
                raise ValueError(f"{name} is not Hermitian")
            m.setflags(write=False)
        if self.convention is SpinConvention.PAULI_LIKE and self.dim != 2:
            raise ValueError("Pauli-like operators require dim == 2")

    @property
    def spin(self) -> float:
        return (self.dim - 1) / 2

    def __iter__(self):
        return iter((self.sx, self.sy, self.sz))


def ladder_raise(dim: int) -> np.ndarray:
    """S+ with real non-negative elements sqrt(s(s+1) - m(m+1)) on the superdiagonal."""
    s = (dim - 1) / 2
    m = s - np.arange(dim)
    elems = np.sqrt(s * (s + 1) - m[1:] * (m[1:] + 1))
    return np.diag(elems, k=1).astype(np.complex128)


def make_spin_operators(dim: int, convention: SpinConvention | str = SpinConvention.STANDARD_SPIN) -> SpinOperators:
    """Build (Sx, Sy, Sz) for a ``dim``-level subsystem.

    >>> ops = make_spin_operators(3)
    >>> np.sqrt(2) * ops.sx.real
    array([[0., 1., 0.],
           [1., 0., 1.],
           [0., 1., 0.]])
    """
    convention = SpinConvention(convention)
    if not isinstance(dim, (int, np.integer)) or dim < 1:
        raise ValueError(f"dim must be a positive integer, got {dim!r}")
    if convention is SpinConvention.PAULI_LIKE:
        if dim != 2:
            raise ValueError(f"Pauli-like convention needs dim == 2, got {dim}")
        sx = np.array([[0, 1], [1, 0]], dtype=np.complex128)
        sy = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
        sz = np.array([[1, 0], [0, -1]], dtype=np.complex128)
        return SpinOperators(2, sx, sy, sz, convention)

    s = (dim - 1) / 2
    sp = ladder_raise(dim)
    sm = sp.conj().T
    sx = 0.5 * (sp + sm)
    sy = -0.5j * (sp - sm)
    sz = np.diag(s - np.arange(dim)).astype(np.complex128)
    return SpinOperators(int(dim), sx, sy, sz, convention)


def paper_subsystems() -> tuple[SpinOperators, SpinOperators]:
    """Pauli matrices for the electron spin and spin-1 matrices for the nucleus."""
    return make_spin_operators(2, SpinConvention.PAULI_LIKE), make_spin_operators(3, SpinConvention.STANDARD_SPIN)
