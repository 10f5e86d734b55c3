"""
Comparing two groups of order 36
================================

D18 (the dihedral group with 36 elements) has a smaller sum of element
orders than Z4 x Z3 x Z3, yet for larger powers the comparison flips.
"""

from psik import Dihedral, DirectProduct, Cyclic, psi, spectrum
from psik.search import find_reversals

d18 = Dihedral(18)
g2 = DirectProduct((Cyclic(4), Cyclic(3), Cyclic(3)))

# The order spectra: element order -> number of elements of that order.
print("D18         ", spectrum(d18).as_dict())
print("Z4 x Z3 x Z3", spectrum(g2).as_dict())

# psi_k adds up o(g)**k.  The 19 involutions of D18 lose at k = 1, but its
# 12 elements of order 9 and 18 dominate once k grows.
for k in range(1, 7):
    a, b = psi(d18, k).value, psi(g2, k).value
    print(f"k={k}: psi(D18)={a:>12}  psi(Z4xZ3xZ3)={b:>12}  {'<' if a < b else '>'}")

# The scanner finds every such pair among the built-in groups of order 36.
for w in find_reversals(36, 6):
    print(w.to_dict())
