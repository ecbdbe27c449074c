"""Cross-check of the numerical eigensolver against the closed-form ground level."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .entanglement import degeneracy_tolerance, reduced_density, state_entropy
from .model import (
    ModelParams,
    build_hamiltonian,
    closed_form_ground_energy,
    closed_form_state_high_field,
    closed_form_state_low_field,
    eigen_residual,
    high_field_energy,
    low_field_coefficients,
    printed_prefactor,
)
from .linalg import eigh

PASS_TOL = 1e-9
CORRECTED_RESIDUAL_TOL = 1e-10


@dataclass
class ValidationReport:
    j: float
    n_points: int = 0
    max_energy_deviation: float = 0.0
    max_state_residual: float = 0.0
    degenerate_points: list[float] = field(default_factory=list)
    # diagnostics at b = j for the middle coefficient of the low-field state
    printed_form_residual: float = math.nan
    corrected_form_residual: float = math.nan
    # |prefactor * ||bracket|| - 1|, worst case over low-field grid points
    prefactor_norm_error: float = math.nan
    entropy_at_b_equals_j: float = math.nan
    reduced_offdiag_at_b_equals_j: float = math.nan
    low_field_limit_entropy: float = math.nan
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"j = {self.j:.12g}, grid points = {self.n_points}",
            f"max |E0(eigh) - E0(closed form)| = {self.max_energy_deviation:.3e}",
            f"max closed-form eigen-residual = {self.max_state_residual:.3e}",
            f"degenerate grid points (flagged, not failed): {[round(b, 12) for b in self.degenerate_points]}",
            f"low-field middle coefficient at b=j: printed-sign residual = {self.printed_form_residual:.6f}, "
            f"corrected-sign residual = {self.corrected_form_residual:.3e}",
            f"printed normalization prefactor: worst |prefactor*norm - 1| = {self.prefactor_norm_error:.6f}",
            f"entropy at b=j = {self.entropy_at_b_equals_j:.12f} bits "
            f"(reduced off-diagonal {self.reduced_offdiag_at_b_equals_j:.3e})",
            f"entropy at b=1e-4 j (low-field limit) = {self.low_field_limit_entropy:.12f} bits",
        ]
        out.extend(f"FAIL: {f}" for f in self.failures)
        out.append("PASS" if self.passed else "FAIL")
        return out


def validate_against_closed_forms(j: float, b_grid) -> ValidationReport:
    """Compare eigh with the closed forms on ``b_grid``; failures are recorded, never raised."""
    if not j > 0:
        raise ValueError(f"validation needs j > 0, got {j!r}")
    rep = ValidationReport(j=float(j))
    grid = [float(b) for b in np.asarray(b_grid, dtype=float).reshape(-1)]
    rep.n_points = len(grid)
    product = closed_form_state_high_field()
    prefactor_errs = []

    for b in grid:
        if b < 0:
            rep.failures.append(f"b={b!r} is negative")
            continue
        h = build_hamiltonian(ModelParams(j, b))
        w = eigh(h).eigenvalues
        if w[1] - w[0] <= degeneracy_tolerance(w[0]):
            rep.degenerate_points.append(b)
        rep.max_energy_deviation = max(rep.max_energy_deviation, abs(w[0] - closed_form_ground_energy(j, b)))
        residuals = [eigen_residual(h, product, high_field_energy(j, b))]
        if 0.0 < b < 2.0 * j:
            cf = closed_form_state_low_field(j, b)
            residuals.append(eigen_residual(h, cf.normalized, closed_form_ground_energy(j, b)))
            prefactor_errs.append(abs(printed_prefactor(j, b) * np.linalg.norm(cf.coefficients) - 1.0))
        rep.max_state_residual = max(rep.max_state_residual, *residuals)

    if rep.max_energy_deviation > PASS_TOL:
        rep.failures.append(f"ground energy deviation {rep.max_energy_deviation:.3e} > {PASS_TOL}")
    if rep.max_state_residual > PASS_TOL:
        rep.failures.append(f"closed-form state residual {rep.max_state_residual:.3e} > {PASS_TOL}")
    if prefactor_errs:
        rep.prefactor_norm_error = max(prefactor_errs)

    h = build_hamiltonian(ModelParams(j, j))
    e = closed_form_ground_energy(j, j)
    rep.printed_form_residual = eigen_residual(h, low_field_coefficients(j, j, printed_sign=True), e)
    rep.corrected_form_residual = eigen_residual(h, low_field_coefficients(j, j), e)
    if rep.corrected_form_residual > CORRECTED_RESIDUAL_TOL:
        rep.failures.append(f"corrected low-field state residual {rep.corrected_form_residual:.3e} at b=j")

    cf = closed_form_state_low_field(j, j)
    rep.entropy_at_b_equals_j = state_entropy(cf.normalized)
    rep.reduced_offdiag_at_b_equals_j = float(abs(reduced_density(cf.normalized).matrix[0, 1]))
    rep.low_field_limit_entropy = state_entropy(closed_form_state_low_field(j, 1e-4 * j).normalized)
    return rep
