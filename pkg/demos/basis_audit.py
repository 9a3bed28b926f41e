"""Compare closed-form bases with computed mod-sets, including the type D repair.

Run with: python demos/basis_audit.py
"""
from artifact.classreps import all_class_params
from artifact.intlin import lattice_equal
from artifact.modset import basis_rule, predicted_basis, rep_mod_set

RULE = "type D cuspidal basis rule, delta_1 = 1 < delta_2"

for n in range(4, 11):
    for p in all_class_params("D", n):
        if basis_rule(p) != RULE:
            continue
        actual = rep_mod_set(p).basis
        stated = lattice_equal(predicted_basis(p), actual)
        amended = lattice_equal(predicted_basis(p, amend=True), actual)
        if not stated:
            print(f"D{n} {p}: stated basis wrong, amended basis {'right' if amended else 'wrong'}")
            print("   computed:", actual.vectors[:2], "...")
print("every other class of this shape matches as stated")
