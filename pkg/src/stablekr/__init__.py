"""Exact algebra for y-ified and specialized differentials on stable Khovanov-Rozansky homology.

Polynomials live in a super-commutative ring with even generators
u_k, y_i, x_i and odd generators xi_k, theta_i.  The differentials send
xi(z) to u(z)^N (or dW(u(z))) modulo p(z) = prod (z - y_i), and the
homology engine computes their Koszul homology tridegree by tridegree.
"""

from .differential import (
    Differential,
    apply_derivation,
    build_dn,
    build_dn_closed_form,
    build_dw,
    mu_class,
    mu_w,
)
from .homology import (
    DegreeWindow,
    GradedHomologyReport,
    WindowTooSmall,
    compute_report,
    conjecture_mu_check,
    enumerate_basis,
    homology_at,
    regular_sequence_check,
)
from .interp import InterpolationContext, cramer_solve, long_div_remainder, remainder_closed_form
from .parse import ParseError, parse_poly
from .potential import Potential
from .ring import NonExactDivision, ParityError, Poly, SuperRing, Tridegree, exact_divide, substitute
from .special import apply_phi_m, coproduct, divided_difference, divided_difference_star, phi_m
from .symfunc import HookShape, e_elementary, h_complete, hook_schur
from .zpoly import ZPoly

__version__ = "0.1.0"

__all__ = [
    "DegreeWindow",
    "Differential",
    "GradedHomologyReport",
    "HookShape",
    "InterpolationContext",
    "NonExactDivision",
    "ParityError",
    "ParseError",
    "Poly",
    "Potential",
    "SuperRing",
    "Tridegree",
    "WindowTooSmall",
    "ZPoly",
    "apply_derivation",
    "apply_phi_m",
    "build_dn",
    "build_dn_closed_form",
    "build_dw",
    "compute_report",
    "conjecture_mu_check",
    "coproduct",
    "cramer_solve",
    "divided_difference",
    "divided_difference_star",
    "e_elementary",
    "enumerate_basis",
    "exact_divide",
    "h_complete",
    "homology_at",
    "hook_schur",
    "long_div_remainder",
    "mu_class",
    "mu_w",
    "parse_poly",
    "phi_m",
    "regular_sequence_check",
    "remainder_closed_form",
    "substitute",
]
