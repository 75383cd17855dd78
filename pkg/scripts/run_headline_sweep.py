#!/usr/bin/env python3
"""Sweep Werner-state weights through the correlated Pauli environment.

Prints, for each gamma, the negativity after sending one qubit alone
(entanglement always destroyed) versus sending both qubits through the
same correlated environment (entanglement untouched above the threshold).
"""

import argparse

import numpy as np

from twirlbreak.channels import ProbabilityVector, apply_kraus, correlated_pauli, local_depolarizing
from twirlbreak.linalg import frobenius_distance, negativity
from twirlbreak.states import werner_qubit


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p0", type=float, default=0.5, help="identity weight of the Pauli mix")
    parser.add_argument("--n-gamma", type=int, default=11, help="grid points in gamma")
    args = parser.parse_args()

    rest = (1.0 - args.p0) / 3.0
    p = ProbabilityVector((args.p0, rest, rest, rest))
    single = local_depolarizing(p, "A")
    double = correlated_pauli(p)

    print(f"Pauli mix p = {tuple(round(x, 6) for x in p.p)}")
    print(f"{'gamma':>7} {'neg(single)':>12} {'neg(double)':>12} {'invariance':>12}")
    for gamma in np.linspace(0.0, 1.0, args.n_gamma):
        rho = werner_qubit(float(gamma))
        out_single = apply_kraus(single, rho)
        out_double = apply_kraus(double, rho)
        print(
            f"{gamma:7.3f} {negativity(out_single):12.3e} "
            f"{negativity(out_double):12.3e} "
            f"{frobenius_distance(out_double.mat, rho.mat):12.3e}"
        )


if __name__ == "__main__":
    main()
