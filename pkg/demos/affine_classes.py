"""Conjugacy classes and coconjugation sets in small affine Weyl groups.

Run with: python demos/affine_classes.py
"""
from artifact.affconj import (
    affine_element,
    affine_from_word,
    affine_simple_reflection,
    are_conjugate,
    brute_class_window,
    class_window,
    coconjugation,
    component_count,
    conjugate_affine,
)
from artifact.rootdata import root_datum

A2 = root_datum("A", 2)

s0 = affine_simple_reflection(A2, 0)
print("s_0 in affine A2:", s0)

x = affine_from_word(A2, "012")
print("s_0 s_1 s_2 =", x)

# The closed form for the class, cut to a window, against brute-force conjugation
win = class_window(x, 3)
print(f"class window R=3: {len(win)} elements, brute force agrees:",
      win.keys() == brute_class_window(x, 3))
print("components:", component_count(x))

# Which y conjugate x to t^(1,1) s_1?
target = affine_element(A2, (1, 1), "1")
rep = coconjugation(x, target)
print("\nCoconj(x, t^(1,1) s_1):")
for c in rep.cosets:
    print(f"  u={c.u.word_string():<8} eta={c.eta} fix lattice {c.fix_basis.vectors}")
for y in rep.sample(5)[:5]:
    assert conjugate_affine(y, x).key() == target.key()
print("sampled conjugators all check out")

# A translation shift outside Mod(w) leaves the class
w = affine_element(A2, (0, 0), "12")
print("\nt^(1,0) s_12 conjugate to s_12?", are_conjugate(w, affine_element(A2, (1, 0), "12")))
print("t^(1,-1) s_12 conjugate to s_12?", are_conjugate(w, affine_element(A2, (1, -1), "12")))
