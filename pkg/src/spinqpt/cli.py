"""Command-line front end.

Exit status: 0 success, 2 usage error, 3 numerical/validation failure, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .entanglement import DegenerateGroundStateError, ground_state_entropy
from .model import ModelParams, diagonalize
from .scan import NoCrossingError, ScanError, detect_crossing, find_entropy_peak, records_to_csv, records_to_json, sweep
from .spin import SpinConvention, make_spin_operators
from .validation import validate_against_closed_forms

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

COMMANDS = ("spectrum", "entropy", "sweep", "crossing", "peak", "validate")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    j: float = 1.0
    b: float | None = None
    b_min: float | None = None
    b_max: float | None = None
    steps: int | None = None
    output_path: str | None = None
    format: str = "csv"
    spin_a: str = "pauli"
    dim_b: int = 3
    tol: float | None = None
    workers: int | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        for name in ("j", "b", "b_min", "b_max", "tol"):
            v = getattr(self, name)
            if v is not None and not math.isfinite(v):
                raise UsageError(f"--{name.replace('_', '-')} must be finite")
        if self.steps is not None and self.steps < 2:
            raise UsageError("--steps must be >= 2")
        if self.dim_b < 1:
            raise UsageError("--dim-b must be positive")
        if self.tol is not None and self.tol <= 0:
            raise UsageError("--tol must be positive")

    def template(self, b: float = 0.0) -> ModelParams:
        return ModelParams(
            self.j,
            b,
            make_spin_operators(2, SpinConvention(self.spin_a)),
            make_spin_operators(self.dim_b, SpinConvention.STANDARD_SPIN),
        )

    @property
    def is_paper_system(self) -> bool:
        return self.spin_a == "pauli" and self.dim_b == 3


def _f(x: float) -> str:
    s = f"{x:.12f}"
    return s[1:] if s.startswith("-") and float(s) == 0.0 else s


def _require_j_positive(cfg: RunConfig) -> None:
    if not cfg.j > 0:
        raise UsageError(f"{cfg.command} needs --j > 0")


def cmd_spectrum(cfg: RunConfig, out) -> int:
    if cfg.b is None:
        raise UsageError("spectrum needs --b")
    p = cfg.template(cfg.b)
    w = diagonalize(p).eigenvalues
    print(f"j {_f(cfg.j)}", file=out)
    print(f"b {_f(cfg.b)}", file=out)
    for k, e in enumerate(w):
        print(f"e{k} {_f(e)}", file=out)
    _print_entropy(p, out)
    return EXIT_OK


def _print_entropy(p: ModelParams, out) -> None:
    try:
        print(f"entropy {_f(ground_state_entropy(p))}", file=out)
    except DegenerateGroundStateError as exc:
        cands = " ".join(_f(s) for s in exc.entropies)
        print(f"entropy degenerate ground state (gap {exc.gap:.3e}); basis-dependent candidates: {cands}", file=out)


def cmd_entropy(cfg: RunConfig, out) -> int:
    if cfg.b is None:
        raise UsageError("entropy needs --b")
    _print_entropy(cfg.template(cfg.b), out)
    return EXIT_OK


def cmd_sweep(cfg: RunConfig, out) -> int:
    b_min = 0.05 * cfg.j if cfg.b_min is None else cfg.b_min
    b_max = 4.0 * cfg.j if cfg.b_max is None else cfg.b_max
    steps = 200 if cfg.steps is None else cfg.steps
    if cfg.j == 0:
        raise UsageError("sweep needs --j != 0")
    try:
        records = sweep(cfg.template(), b_min, b_max, steps, workers=cfg.workers)
    except ScanError as exc:
        raise UsageError(str(exc)) from exc
    text = records_to_json(records) if cfg.format == "json" else records_to_csv(records)
    if cfg.output_path is None:
        out.write(text)
        return EXIT_OK
    try:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(records)} rows to {cfg.output_path}", file=out)
    return EXIT_OK


def cmd_crossing(cfg: RunConfig, out) -> int:
    _require_j_positive(cfg)
    b_lo = 0.5 * cfg.j if cfg.b_min is None else cfg.b_min
    b_hi = 3.5 * cfg.j if cfg.b_max is None else cfg.b_max
    tol = 1e-9 if cfg.tol is None else cfg.tol
    p = cfg.template()
    try:
        rep = detect_crossing(cfg.j, b_lo, b_hi, tol, a_ops=p.a_ops, b_ops=p.b_ops)
    except NoCrossingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ScanError as exc:
        raise UsageError(str(exc)) from exc
    print(f"b_star {_f(rep.b_star)}", file=out)
    print(f"b_star_over_j {rep.b_star_over_j:.6f}", file=out)
    print(f"gap_at_b_star {rep.gap_at_b_star:.3e}", file=out)
    print(f"iterations {rep.iterations}", file=out)
    return EXIT_OK


def cmd_peak(cfg: RunConfig, out) -> int:
    _require_j_positive(cfg)
    b_lo = 0.2 * cfg.j if cfg.b_min is None else cfg.b_min
    b_hi = 1.8 * cfg.j if cfg.b_max is None else cfg.b_max
    tol = 1e-6 if cfg.tol is None else cfg.tol
    p = cfg.template()
    try:
        b_peak, s_peak = find_entropy_peak(cfg.j, b_lo, b_hi, tol, a_ops=p.a_ops, b_ops=p.b_ops)
    except ScanError as exc:
        raise UsageError(str(exc)) from exc
    except DegenerateGroundStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    print(f"b_peak {b_peak:.10f}", file=out)
    print(f"b_peak_over_j {b_peak / cfg.j:.10f}", file=out)
    print(f"s_peak {_f(s_peak)}", file=out)
    return EXIT_OK


def cmd_validate(cfg: RunConfig, out) -> int:
    _require_j_positive(cfg)
    if not cfg.is_paper_system:
        raise UsageError("validate only covers the default system (--spin-a pauli --dim-b 3)")
    b_min = 0.01 * cfg.j if cfg.b_min is None else cfg.b_min
    b_max = 4.0 * cfg.j if cfg.b_max is None else cfg.b_max
    steps = 200 if cfg.steps is None else cfg.steps
    rep = validate_against_closed_forms(cfg.j, np.linspace(b_min, b_max, steps))
    for line in rep.lines():
        print(line, file=out)
    return EXIT_OK if rep.passed else EXIT_NUMERIC


HANDLERS = {
    "spectrum": cmd_spectrum,
    "entropy": cmd_entropy,
    "sweep": cmd_sweep,
    "crossing": cmd_crossing,
    "peak": cmd_peak,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--j", type=float, default=1.0, help="exchange coupling J (default 1)")
    common.add_argument("--spin-a", choices=["pauli", "spin"], default="pauli",
                        help="first subsystem: Pauli matrices or standard spin-1/2 (default pauli)")
    common.add_argument("--dim-b", type=int, default=3, help="dimension 2s+1 of the second spin (default 3)")

    parser = argparse.ArgumentParser(prog="spinqpt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("spectrum", "entropy"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--b", type=float, required=True, help="field strength B")

    p = sub.add_parser("sweep", parents=[common], help="write spectrum and entropy on a uniform B grid")
    p.add_argument("--b-min", type=float)
    p.add_argument("--b-max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--out", dest="output_path")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, help="process pool size (output is identical)")

    for name, hlp in (("crossing", "bracket for the level crossing"), ("peak", "bracket for the entropy maximum")):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--b-min", type=float, help=hlp)
        p.add_argument("--b-max", type=float, help=hlp)
        p.add_argument("--tol", type=float)

    p = sub.add_parser("validate", parents=[common], help="cross-check eigensolver against closed forms")
    p.add_argument("--b-min", type=float)
    p.add_argument("--b-max", type=float)
    p.add_argument("--steps", type=int)
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return HANDLERS[cfg.command](cfg, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
