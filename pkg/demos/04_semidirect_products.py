"""
Metacyclic groups Z_{p^r} x| Z_m
================================

When Z_m acts on Z_{p^r} through u -> a*u, the elements split by whether
their Z_m coordinate acts trivially.  That gives a closed form for psi_k which
we compare with brute-force element orders.
"""

from psik import SemidirectCyclic, psi
from psik.cayley import spectrum_semidirect_bruteforce
from psik.families import semidirect_instances
from psik.psi import psi_from_spectrum
from psik.verify import check_quotient_bound

for spec in [SemidirectCyclic(7, 1, 3, 2), SemidirectCyclic(5, 1, 4, 2), *semidirect_instances(63)]:
    brute = psi_from_spectrum(spectrum_semidirect_bruteforce(spec), 2).value
    closed = psi(spec, 2).value
    bound = check_quotient_bound(spec, 2)
    print(f"{spec}: kernel {spec.kernel_order}, psi_2 {closed} (brute {brute}), "
          f"quotient bound {bound.verdict.value}")

# With the trivial action the product is direct and the quotient bound is an equality.
print(check_quotient_bound(SemidirectCyclic(7, 1, 3, 1), 2).verdict.value)
