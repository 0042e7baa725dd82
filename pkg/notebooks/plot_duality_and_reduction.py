"""
Duality and the reduction step
==============================

Removing one triangle with full relations merges two arrows into a single
arrow of weight q^2.  The determinant picks up the factor (1 + q^3) twice,
and the reduced quiver has no cycle with full relations left.  Its dual is
then the reverse situation, and the two Cartan matrices are inverse to each
other after t -> -t.
"""

from pathlib import Path

from locgentle import (
    RationalFunction,
    WeightFunction,
    cartan_exact,
    det_elimination,
    dual,
    format_quiver,
    load_quiver,
    minimal_cycles,
    parse_monomial,
    parse_polynomial,
    reduce_step,
    validate,
)
from locgentle.cartan import matmul

here = Path(__file__).resolve().parent.parent / "quivers"
q, _ = load_quiver(here / "example43.quiver")
lgq = validate(q)

###############################################################################
# Weight each arrow q*t so that t keeps track of path length, then reduce.
w = WeightFunction({a.id: parse_monomial("q*t") for a in lgq.arrows})
zc, _ = minimal_cycles(lgq, w)
out = reduce_step(lgq, w, zc[0], "1")
print(format_quiver(out.quiver, out.weights))
print("extracted:", [str(f) for f in out.extracted_factors])

lhs = det_elimination(lgq, w)
rhs = RationalFunction(out.factor_product()) * det_elimination(out.quiver, out.weights)
print("det before = factors * det after:", lhs.equals(rhs))

###############################################################################
# Counting the merged arrow as one step of length (weight q^2*t) gives the
# small three-vertex quiver stored in ``example33.quiver``.
q33, w33 = load_quiver(here / "example33.quiver")
small = validate(q33)
c = cartan_exact(small, w33)
cd = cartan_exact(dual(small), w33)
print(c)
print(cd)

###############################################################################
# Product with the dual matrix at t -> -t.
neg = [[x.substitute({"t": -parse_polynomial("t")}) for x in row] for row in cd.entries]
prod = matmul(c.entries, neg)
for row in prod:
    print("  ".join(str(x) for x in row))
