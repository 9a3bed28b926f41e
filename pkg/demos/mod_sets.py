"""Walk through mod-sets of a few finite Weyl group elements.

Run with: python demos/mod_sets.py
"""
from artifact import from_word, mod_set, root_datum
from artifact.classreps import all_class_params, parse_class_params, representative
from artifact.modset import predicted_snf, rep_mod_set


def show(label, w):
    rep = mod_set(w)
    print(f"{label}: SNF {rep.snf_diag}, torsion {rep.invariant_factors}, fills={rep.fills}")
    for v in rep.basis.vectors:
        print("    basis vector", v)
    for c in rep.congruences:
        print(f"    needs {c.a} . lam == 0" + (f" mod {c.modulus}" if c.modulus else ""))


# The Coxeter element of A3 moves everything, but its mod-set has index 4.
A3 = root_datum("A", 3)
show("A3 s_1 s_2 s_3", from_word(A3, "123"))

# A single reflection in C2: the long simple coroot direction only reaches 2Z.
show("C2 s_2", from_word(root_datum("C", 2), "2"))

# Class representatives come from partition data; the closed forms agree with SNF.
print("\nType D5, every class:")
for p in all_class_params("D", 5):
    got = rep_mod_set(p).snf_diag
    mark = "ok" if got == predicted_snf(p) else "MISMATCH"
    print(f"  {str(p):<28} {got}  {mark}")

# An exceptional row is just a stored word.
w = representative(parse_class_params("E6:row=25"))
print("\nE6 last row:", mod_set(w).snf_diag)
