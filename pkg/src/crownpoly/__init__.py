"""Exact invariants of order polytopes of crown and zigzag posets."""

from .errors import DomainError, MathError, ResourceError
from .faces import fvector_formula, fvector_oracle
from .hstar import (
    CAP,
    cswap,
    enumerate_caps,
    gamma_via_peaks,
    hstar_from_cswap,
    hstar_from_descents,
    hstar_all,
    hstar_from_ehrhart,
)
from .order_poly import ehrhart, omega, omega_oracle
from .polynomial import IntVector, RationalPoly
from .poset import Poset, make_crown, make_zigzag

__version__ = "0.1.0"
