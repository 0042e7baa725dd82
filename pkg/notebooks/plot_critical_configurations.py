"""
Critical quivers from secant configurations
===========================================

Pair up the corners of a 2n-gon so that no two neighbours are paired.  The
pairing is closed when stepping to the next corner and then sliding along
the secant visits every corner in one tour.  Closed pairings are counted by
the Harer-Zagier formula, and each gives a critical quiver with Cartan
determinant 1.
"""

from locgentle import (
    count_closed,
    count_closed_up_to_dihedral,
    critical_quiver_from,
    det_elimination,
    enumerate_Pn_prime,
    format_quiver,
    hz_a_n1,
    is_closed,
    minimal_cycles,
)

###############################################################################
# Brute force against the closed formula.
for n in range(1, 7):
    print(f"n={n}: closed={count_closed(n)} formula={hz_a_n1(n)}")

###############################################################################
# Up to rotating and reflecting the polygon there are far fewer.
for n in (2, 4, 6):
    print(f"n={n}: {count_closed_up_to_dihedral(n)} dihedral classes")

###############################################################################
# One critical quiver on four vertices.  Its two minimal cycles run through
# every arrow, and their contributions cancel in the determinant.
c = next(c for c in enumerate_Pn_prime(4) if is_closed(c))
lgq, w = critical_quiver_from(c)
print(c)
print(format_quiver(lgq))
zc, ic = minimal_cycles(lgq, w)
print("ZC:", zc[0])
print("IC:", ic[0])
print("det:", det_elimination(lgq, w))
