"""Exact psi_k(G) = sum of o(g)^k over finite groups, plus mechanical theorem checks."""

from __future__ import annotations

from .arith import DomainError, factorize, is_prime
from .cayley import CayleyTableError, build_cayley, load_cayley, spectrum_bruteforce
from .groups import (
    Abelian,
    AbelianPPrimary,
    CayleyTable,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpecError,
    OrderSpectrum,
    SemidirectCyclic,
    spectrum,
)
from .psi import PsiValue, psi, psi_cyclic
from .search import extremal_over_order, find_reversals, worst_ratio_scan
from .syntax import SpecParseError, parse_spec, render
from .verify import BoundReport, SuiteConfig, run_suite, violations

__version__ = "0.1.0"

__all__ = [
    "Abelian", "AbelianPPrimary", "BoundReport", "CayleyTable", "CayleyTableError", "Cyclic",
    "Dicyclic", "Dihedral", "DirectProduct", "DomainError", "GroupSpecError", "OrderSpectrum",
    "PsiValue", "SemidirectCyclic", "SpecParseError", "SuiteConfig", "build_cayley",
    "extremal_over_order", "factorize", "find_reversals", "is_prime", "load_cayley", "parse_spec",
    "psi", "psi_cyclic", "render", "run_suite", "spectrum", "spectrum_bruteforce", "violations",
    "worst_ratio_scan",
]
