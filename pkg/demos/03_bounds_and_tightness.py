"""
How far below the cyclic group can a non-cyclic group sit?
==========================================================

For every non-cyclic built-in group G of order n, psi_k(G) / psi_k(Z_n) stays
below (1 + 3*2^k) / (1 + 2^k + 2*4^k), and Z_t x Z_2 x Z_2 with odd t meets
it exactly.
"""

from fractions import Fraction

from psik.search import worst_ratio_scan
from psik.verify import SuiteConfig, check_tightness, main_bound_coefficients, run_suite, violations

for k in (1, 2, 3):
    num, den = main_bound_coefficients(k)
    print(f"k={k}: bound {num}/{den}")
    for rec in worst_ratio_scan(60, k, top=4):
        ratio = Fraction(rec.psi_group, rec.psi_cyclic)
        print(f"    {rec.to_dict()['group']:<16} n={rec.n:<3} ratio={ratio}  at bound: {rec.at_bound}")

# The equality cases, compared as scaled integers (no floats anywhere).
print([check_tightness(t, 5).verdict.value for t in (1, 3, 5, 7)])

# A small sweep of every checker; an empty violation list is the expected outcome.
reports = run_suite(SuiteConfig(n_max=100, k_max=4, product_max=200, semidirect_max=200))
print(len(reports), "reports,", len(violations(reports)), "violated")
