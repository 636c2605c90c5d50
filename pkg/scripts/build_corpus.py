"""Write the bundled state corpus and regenerate its golden reports.

    python3 scripts/build_corpus.py            # states only
    python3 scripts/build_corpus.py --golden   # states, then golden reports
"""

import argparse
import subprocess
import sys
from pathlib import Path

import numpy as np

from ipent.correlation import number_operator
from ipent.fileio import operator_document, state_document, write_document
from ipent.states import TwoBosonState, TwoFermionState, SingleParticleState, boson_product

ROOT = Path(__file__).resolve().parent.parent / "states"
R2 = np.sqrt(2.0)


def _sym(n, entries):
    w = np.zeros((n, n), dtype=complex)
    for (i, j), v in entries.items():
        w[i, j] = w[j, i] = v
    return w


def _skew(n, entries):
    w = np.zeros((n, n), dtype=complex)
    for (i, j), v in entries.items():
        w[i, j], w[j, i] = v, -v
    return w


def corpus():
    c = np.array([1, 1, 0]) / R2
    d = np.array([1, -1, 1j * R2]) / 2
    fc = np.array([1, 0, 0])
    fb = np.array([0, 1, 1]) / R2
    pauli = (np.outer(fc, fc + fb) - np.outer(fc + fb, fc)) / 2
    pauli = pauli / np.sqrt(2 * np.sum(np.abs(pauli) ** 2))
    z1, z2 = 1 / np.sqrt(5), 1 / (2 * np.sqrt(5))
    return [
        ("01_boson_same_mode", "c+c+|0>", TwoBosonState(_sym(2, {(0, 0): 1 / R2}))),
        ("02_boson_orthogonal_pair", "a+b+|0>", TwoBosonState(_sym(2, {(0, 1): 0.5}))),
        ("03_boson_balanced_diagonal", "(a+a+ + b+b+)/2 |0>",
         TwoBosonState(_sym(2, {(0, 0): 0.5, (1, 1): 0.5}))),
        ("04_boson_rotated_pair", "c+d+|0>, c and d orthonormal in 3 modes",
         boson_product(c, d)),
        ("05_fermion_slater", "a1+a2+|0> in 4 modes", TwoFermionState(_skew(4, {(0, 1): 0.5}))),
        ("06_fermion_pauli_collapse", "c+(c+ + b+)|0> for fermions", TwoFermionState(pauli)),
        ("07_boson_c_cb", "c+(c+ + b+)|0>/sqrt3, modes (c, b)",
         TwoBosonState(_sym(2, {(0, 0): 1 / np.sqrt(3), (0, 1): 0.5 / np.sqrt(3)}))),
        ("08_boson_three_party", "(a+a+ + b+c+)|0>/sqrt3",
         TwoBosonState(_sym(3, {(0, 0): 1 / np.sqrt(3), (1, 2): 0.5 / np.sqrt(3)}))),
        ("09_boson_unbalanced_diagonal", "(2 a+a+ + b+b+)|0>/sqrt10",
         TwoBosonState(_sym(2, {(0, 0): 2 / np.sqrt(10), (1, 1): 1 / np.sqrt(10)}))),
        ("10_boson_distinguishable_bell", "(a1+a3+ + a2+a4+)|0>/sqrt2",
         TwoBosonState(_sym(4, {(0, 2): 1 / (2 * R2), (1, 3): 1 / (2 * R2)}))),
        ("11_fermion_two_pairs", "(a1+a2+ + a3+a4+)|0>/sqrt2",
         TwoFermionState(_skew(4, {(0, 1): 1 / (2 * R2), (2, 3): 1 / (2 * R2)}))),
        ("12_fermion_unequal_pairs", "canonical z = (1/sqrt5, 1/(2 sqrt5))",
         TwoFermionState(_skew(4, {(0, 1): z1, (2, 3): z2}))),
    ]


def extras():
    return [
        ("single_a_plus_b", "(a+ + b+)|0>/sqrt2", SingleParticleState(np.array([1, 1]) / R2)),
    ]


def operators():
    return [("n_0_of_2", "n_0", number_operator(2, 0)), ("n_1_of_2", "n_1", number_operator(2, 1))]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--golden", action="store_true")
    args = ap.parse_args()
    (ROOT / "extra").mkdir(parents=True, exist_ok=True)
    for stem, label, st in corpus():
        write_document(state_document(st, label), ROOT / f"{stem}.json")
    for stem, label, st in extras():
        write_document(state_document(st, label), ROOT / "extra" / f"{stem}.json")
    for stem, label, op in operators():
        write_document(operator_document(op, label), ROOT / "extra" / f"{stem}.json")
    if args.golden:
        subprocess.run([sys.executable, "-m", "ipent", "batch", str(ROOT),
                        "--out", str(ROOT / "golden")], check=True)


if __name__ == "__main__":
    main()
