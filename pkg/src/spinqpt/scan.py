"""Field sweeps, level-crossing detection and entropy-peak search."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .entanglement import DegenerateGroundStateError, degeneracy_tolerance, ground_state_entropy
from .linalg import eigh, kron
from .model import ModelParams, diagonalize
from .spin import SpinOperators
from .states import PureState

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
PRESCAN_POINTS = 64
# entropy differences below this are treated as flat in the unimodality pre-scan
PRESCAN_FLAT = 1e-12


class ScanError(ValueError):
    pass


class NoCrossingError(ScanError):
    pass


@dataclass(frozen=True)
class SweepRecord:
    b: float
    b_over_j: float
    spectrum: tuple[float, ...]
    gap: float
    entropy: float | None
    degenerate: bool

    @property
    def e0(self) -> float:
        return self.spectrum[0]


@dataclass(frozen=True)
class CrossingReport:
    b_star: float
    bracket: tuple[float, float]
    gap_at_b_star: float
    iterations: int
    j: float = 1.0

    @property
    def b_star_over_j(self) -> float:
        return self.b_star / self.j


def _params(j: float, b: float, a_ops: SpinOperators | None, b_ops: SpinOperators | None) -> ModelParams:
    kw = {}
    if a_ops is not None:
        kw["a_ops"] = a_ops
    if b_ops is not None:
        kw["b_ops"] = b_ops
    return ModelParams(float(j), float(b), **kw)


def evaluate_point(template: ModelParams, b: float) -> SweepRecord:
    p = template.with_field(b)
    w = diagonalize(p).eigenvalues
    gap = float(w[1] - w[0]) if len(w) > 1 else math.inf
    degenerate = gap < degeneracy_tolerance(w[0])
    entropy = None
    if not degenerate:
        try:
            entropy = ground_state_entropy(p)
        except DegenerateGroundStateError:
            degenerate = True
    return SweepRecord(
        b=float(b),
        b_over_j=float(b) / template.j,
        spectrum=tuple(float(x) for x in w),
        gap=max(gap, 0.0),
        entropy=entropy,
        degenerate=degenerate,
    )


def sweep(template: ModelParams, b_min: float, b_max: float, steps: int, workers: int | None = None) -> list[SweepRecord]:
    """Evaluate ``steps`` uniformly spaced fields in [b_min, b_max], ascending.

    ``workers > 1`` farms grid points out to a process pool; the result is
    identical to the serial one.
    """
    if not (math.isfinite(b_min) and math.isfinite(b_max)) or not b_min < b_max:
        raise ScanError(f"invalid field range [{b_min!r}, {b_max!r}]")
    if steps < 2:
        raise ScanError(f"steps must be >= 2, got {steps}")
    if template.j == 0:
        raise ScanError("j must be nonzero to form b/j")
    grid = np.linspace(b_min, b_max, steps)
    fn = partial(evaluate_point, template)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, grid, chunksize=max(1, steps // (4 * workers))))
    return [fn(b) for b in grid]


# --- output ---------------------------------------------------------------

def _fmt(x: float) -> str:
    s = f"{x:.12f}"
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


def field_names(n_levels: int) -> list[str]:
    return ["b", "b_over_j", *(f"e{k}" for k in range(n_levels)), "gap", "entropy", "degenerate"]


def records_to_csv(records: list[SweepRecord]) -> str:
    n = len(records[0].spectrum) if records else 6
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(field_names(n))
    for r in records:
        writer.writerow(
            [_fmt(r.b), _fmt(r.b_over_j), *(_fmt(e) for e in r.spectrum), _fmt(r.gap),
             "" if r.entropy is None else _fmt(r.entropy), int(r.degenerate)]
        )
    return buf.getvalue()


def records_to_json(records: list[SweepRecord]) -> str:
    rows = []
    for r in records:
        row = {"b": r.b, "b_over_j": r.b_over_j}
        row.update({f"e{k}": e for k, e in enumerate(r.spectrum)})
        row.update(gap=r.gap, entropy=r.entropy, degenerate=int(r.degenerate))
        rows.append(row)
    return json.dumps(rows, indent=1) + "\n"


# --- level crossing -------------------------------------------------------

def product_reference_state(a_ops: SpinOperators, b_ops: SpinOperators) -> PureState:
    """Both subsystems fully polarized along +x."""
    va = eigh(a_ops.sx).eigenvectors[:, -1]
    vb = eigh(b_ops.sx).eigenvectors[:, -1]
    amps = kron(va.reshape(-1, 1), vb.reshape(-1, 1)).reshape(-1)
    return PureState.normalized(amps, a_ops.dim, b_ops.dim)


def product_overlap(p: ModelParams, reference: PureState) -> float:
    v = diagonalize(p).eigenvectors[:, 0]
    return abs(np.vdot(reference.amplitudes, v))


def detect_crossing(
    j: float,
    b_lo: float,
    b_hi: float,
    tol: float = 1e-9,
    *,
    a_ops: SpinOperators | None = None,
    b_ops: SpinOperators | None = None,
) -> CrossingReport:
    """Bisect on the ground state's overlap with the x-polarized product state.

    The overlap is below 1/2 on the entangled side of the crossing and above
    1/2 on the product side; the bracket is halved until narrower than ``tol``.
    """
    if not b_lo < b_hi:
        raise ScanError(f"need b_lo < b_hi, got [{b_lo!r}, {b_hi!r}]")
    if not tol > 0:
        raise ScanError("tol must be positive")
    template = _params(j, b_lo, a_ops, b_ops)
    ref = product_reference_state(template.a_ops, template.b_ops)

    def on_product_side(b: float) -> bool:
        return product_overlap(template.with_field(b), ref) > 0.5

    if on_product_side(b_lo) or not on_product_side(b_hi):
        raise NoCrossingError(f"ground level does not switch to the product branch across [{b_lo!r}, {b_hi!r}]")

    lo, hi, it = float(b_lo), float(b_hi), 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if on_product_side(mid):
            hi = mid
        else:
            lo = mid
        it += 1
    b_star = 0.5 * (lo + hi)
    w = diagonalize(template.with_field(b_star)).eigenvalues
    gap = float(w[1] - w[0])
    gap_tol = max(10.0 * tol, degeneracy_tolerance(w[0]))
    if gap > gap_tol:
        raise ScanError(f"overlap switch at b={b_star!r} has gap {gap:.3e}; avoided crossing, not a level crossing")
    return CrossingReport(b_star, (lo, hi), gap, it, float(j))


# --- entropy peak ---------------------------------------------------------

def golden_section_max(f, a: float, b: float, tol: float) -> float:
    """Maximizer of a unimodal ``f`` on [a, b], to within ``tol``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def find_entropy_peak(
    j: float,
    b_lo: float,
    b_hi: float,
    tol: float = 1e-6,
    *,
    a_ops: SpinOperators | None = None,
    b_ops: SpinOperators | None = None,
) -> tuple[float, float]:
    """Field of maximal ground-state entropy inside the entangled phase (0, 2j)."""
    if not (0.0 < b_lo < b_hi < 2.0 * j):
        raise ScanError(f"bracket [{b_lo!r}, {b_hi!r}] must lie inside (0, 2j) = (0, {2.0 * j!r})")
    if not tol > 0:
        raise ScanError("tol must be positive")
    template = _params(j, b_lo, a_ops, b_ops)

    def entropy(b: float) -> float:
        return ground_state_entropy(template.with_field(b))

    grid = np.linspace(b_lo, b_hi, PRESCAN_POINTS)
    s = np.array([entropy(b) for b in grid])
    d = np.diff(s)
    signs = [x for x in np.sign(np.where(np.abs(d) < PRESCAN_FLAT, 0.0, d)) if x != 0]
    peaks = sum(1 for x, y in zip(signs, signs[1:]) if x > 0 and y < 0)
    if peaks > 1:
        raise ScanError(f"entropy has {peaks} local maxima on the bracket; golden-section needs a single one")
    i = int(np.argmax(s))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, PRESCAN_POINTS - 1)]
    b_peak = golden_section_max(entropy, float(lo), float(hi), tol)
    return b_peak, entropy(b_peak)


def entropy_jump(
    j: float,
    delta: float,
    *,
    a_ops: SpinOperators | None = None,
    b_ops: SpinOperators | None = None,
) -> tuple[float, float]:
    """Ground-state entropies just below and just above b = 2j."""
    if not 0.0 < delta < j / 10.0:
        raise ScanError(f"need 0 < delta < j/10, got delta={delta!r}, j={j!r}")
    template = _params(j, 2.0 * j, a_ops, b_ops)
    left = ground_state_entropy(template.with_field(2.0 * j - delta))
    right = ground_state_entropy(template.with_field(2.0 * j + delta))
    return left, right

