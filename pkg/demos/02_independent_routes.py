"""
Four ways to the same number
============================

For abelian p-groups the library has two recursions, a counting formula for
the spectrum, and the definitional brute force over an explicit Cayley table.
"""

import numpy as np

from psik import Abelian, build_cayley, spectrum_bruteforce
from psik.cayley import element_orders
from psik.groups import partitions, spectrum_abelian_p
from psik.psi import psi_abelian_recurrence, psi_abelian_saha, psi_from_spectrum

p, m, k = 3, 4, 3
for parts in partitions(m):
    table = build_cayley(Abelian({p: parts}))
    routes = (
        psi_abelian_recurrence(p, parts, k).value,
        psi_abelian_saha(p, parts, k).value,
        psi_from_spectrum(spectrum_abelian_p(p, parts), k).value,
        psi_from_spectrum(spectrum_bruteforce(table), k).value,
    )
    print(parts, routes, "agree" if len(set(routes)) == 1 else "DISAGREE")

# The Cayley table is an ordinary numpy array; orders come from iterating it.
g = build_cayley(Abelian({2: (1, 2)}))
print(g.table)
orders = element_orders(g)
print("element orders:", orders, " sum:", int(np.sum(orders)))
