"""Frobenius powers, Tor lengths and socles over F_p-algebras."""
from .fp import FpMatrix, PrimeField
from .groebner import INFINITE, BudgetExceeded, GroebnerBasis, buchberger, normal_form, std_monomials
from .homalg import (ChainComplex, ChainMap, FpModule, QuotientRing, chi, ext, free_resolution,
                     homology, homology_length, koszul, koszul_resolution, mapping_cone, tor,
                     tor_length)
from .poly import MonomialOrder, Poly, PolyMatrix, PolyRing, VecPoly

__version__ = "0.1.0"
