#!/usr/bin/env python3
"""Tabulate eigen-residuals of the low-field ground state with either sign of the middle coefficient.

Also reports how far the published normalization prefactor is from actually
normalizing the state.
"""
import argparse

import numpy as np

from spinqpt.model import (
    ModelParams,
    build_hamiltonian,
    closed_form_ground_energy,
    eigen_residual,
    low_field_coefficients,
    printed_prefactor,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--j", type=float, default=1.0)
    ap.add_argument("--points", type=int, default=9)
    args = ap.parse_args()
    j = args.j

    print(f"{'B/J':>6} {'printed':>12} {'corrected':>12} {'prefactor*norm':>15}")
    for b in np.linspace(0.2, 1.8, args.points) * j:
        h = build_hamiltonian(ModelParams(j, b))
        e = closed_form_ground_energy(j, b)
        r_printed = eigen_residual(h, low_field_coefficients(j, b, printed_sign=True), e)
        coeffs = low_field_coefficients(j, b)
        r_fixed = eigen_residual(h, coeffs, e)
        pref = printed_prefactor(j, b) * np.linalg.norm(coeffs)
        print(f"{b / j:6.3f} {r_printed:12.4e} {r_fixed:12.4e} {pref:15.6f}")


if __name__ == "__main__":
    main()
