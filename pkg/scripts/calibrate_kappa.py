#!/usr/bin/env python3
"""Re-derive the KKS convention constant from the su(2) matrix model.

The exact engine stores one global constant relating its KKS block values to
lambda([A_alpha, B_alpha]) evaluated with explicit matrices.  This script
performs the calibration that produced the frozen value: build su(2), take
lambda = (1/2, -1/2), evaluate the bracket pairing numerically, and divide by
the exact pairing (lambda, alpha) = 1.  The result must reproduce
orbitkit.orbit.KKS_KAPPA; it is a build artifact, never refit in tests.
"""

from fractions import Fraction

from orbitkit import Weight, build_root_system, parse_series
from orbitkit.oracle import (
    _br,
    _eval_functional,
    _real_pair,
    lambda_vector,
    match_roots,
    numeric_root_decomposition,
    special_unitary_basis,
)
from orbitkit.orbit import KKS_KAPPA
from orbitkit.rootsys import pairing


def main():
    alg = special_unitary_basis(2)
    rs = build_root_system(parse_series("A1"))
    lam = Weight((Fraction(1, 2), Fraction(-1, 2)))
    v_lam = lambda_vector(lam, alg)

    ((numeric, exact_root, residual),) = [
        m for m in match_roots(numeric_root_decomposition(alg), rs)
        if m[1].coords == (Fraction(1), Fraction(-1))
    ]
    a, b = _real_pair(numeric.eigenvector)
    bracket_value = _eval_functional(v_lam, _br(a, b))
    exact_pairing = pairing(lam, exact_root, rs)

    kappa = bracket_value / float(exact_pairing)
    print(f"root match residual        : {residual:.3e}")
    print(f"lambda([A, B]) numeric     : {bracket_value:+.12f}")
    print(f"(lambda, alpha) exact      : {exact_pairing}")
    print(f"calibrated kappa           : {kappa:+.12f}")
    print(f"frozen KKS_KAPPA           : {KKS_KAPPA}")
    drift = abs(kappa - float(KKS_KAPPA))
    print(f"drift from frozen value    : {drift:.3e}")
    if drift > 1e-9:
        raise SystemExit("calibration drifted from the frozen constant")
    print("frozen constant confirmed")


if __name__ == "__main__":
    main()
