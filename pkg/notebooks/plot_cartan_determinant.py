"""
Cartan determinants from cycles
===============================

Two oriented triangles share their vertices.  The outer and inner triangle
both carry full relations; walking outer-inner-outer... gives a six-cycle
with no relations.  The determinant of the weighted Cartan matrix only sees
these cycles.
"""

from pathlib import Path

from locgentle import cartan_exact, det_elimination, det_formula, load_quiver, minimal_cycles, validate

here = Path(__file__).resolve().parent.parent / "quivers"
q, w = load_quiver(here / "example43.quiver")
lgq = validate(q)

###############################################################################
# Minimal cycles: two of length 3 with full relations, one of length 6 without.
zc, ic = minimal_cycles(lgq, w)
for c in zc + ic:
    print(c)

###############################################################################
# The matrix itself.  Denominators are 1 - w(C) for the six-cycle; since
# 1 - q^6 = (1 - q^3)(1 + q^3) each entry is also (...)/(1 - q^3).
cm = cartan_exact(lgq, w)
print(cm)

###############################################################################
# The determinant two ways.  The cycle product needs no linear algebra;
# elimination works on the matrix above.
print("formula:    ", det_formula(lgq, w))
print("elimination:", det_elimination(lgq, w))
print("equal:", det_formula(lgq, w).equals(det_elimination(lgq, w)))
