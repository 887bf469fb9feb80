"""Hilbert modular groups over real quadratic fields and their realisation as
orthogonal groups of signature (2,2), in exact arithmetic.

Modules:
    quadfield  exact arithmetic in Q(sqrt m), fundamental units
    ideals     ideals of O_K in Hermite normal form
    modgroup   Sigma_K, Gamma_K(I), Atkin-Lehner matrices, the normalizer
    ortho4     rational 4x4 orthogonal groups and discriminant kernels
    isomap     the maps into SO(2,2) and their inverse
    action     actions on H^2 and on orthogonal half-spaces
    verify     randomized property suites
"""
from .errors import HilbertSOError
from .quadfield import FieldCtx, QuadElem, fundamental_unit, make_field, parse_quad, two_squares
from .ideals import FracIdeal, IdealHNF, A_ell, ideal_from_canonical, ideal_inverse
from .modgroup import (
    GammaICtx,
    NormalizerElem,
    SigmaElem,
    atkin_lehner,
    atkin_lehner_ideal,
    atkin_lehner_set,
    coset_count,
    in_gamma,
    in_gamma_I,
    in_gamma_star,
    in_gamma_star_I,
    in_normalizer,
    index_gamma_star,
    normalizer_class,
    parse_matrix,
    sample,
)
from .ortho4 import GramForm, in_discriminant_kernel, in_SO0, is_orthogonal
from .isomap import BasisCtx, base_change_oracle, phi_fast, phi_inverse, psi, psi_inverse
from .action import CPoint, automorphy, check_compat, mobius, ortho_action

__all__ = [
    "HilbertSOError",
    "FieldCtx",
    "QuadElem",
    "fundamental_unit",
    "make_field",
    "parse_quad",
    "two_squares",
    "FracIdeal",
    "IdealHNF",
    "A_ell",
    "ideal_from_canonical",
    "ideal_inverse",
    "GammaICtx",
    "NormalizerElem",
    "SigmaElem",
    "atkin_lehner",
    "atkin_lehner_ideal",
    "atkin_lehner_set",
    "coset_count",
    "in_gamma",
    "in_gamma_I",
    "in_gamma_star",
    "in_gamma_star_I",
    "in_normalizer",
    "index_gamma_star",
    "normalizer_class",
    "parse_matrix",
    "sample",
    "GramForm",
    "in_discriminant_kernel",
    "in_SO0",
    "is_orthogonal",
    "BasisCtx",
    "base_change_oracle",
    "phi_fast",
    "phi_inverse",
    "psi",
    "psi_inverse",
    "CPoint",
    "automorphy",
    "check_compat",
    "mobius",
    "ortho_action",
]

__version__ = "0.1.0"
