"""Exact Salem-number realizations in arithmetic hyperbolic lattices."""
from .arith import INF, four_squares, hilbert_symbol, squarefree_part
from .clifford import C4, CQ6, OMEGA, ORDER_Q, CliffordAlgebra, CliffordElement, order_coordinates
from .errors import DomainError, InternalError, NotLoxodromic, VahlenViolation
from .polynomials import Poly
from .qforms import (BrauerClass, DiagForm, field_splits, find_obstructed, form_with_witt,
                     hasse_class, obstruct_dim3, obstruct_dim4, obstruct_dim5, signed_det,
                     witt_class)
from .realizer import (RealizationCertificate, realize, realize_any_deg4, realize_deg2,
                       realize_deg4, verify_certificate)
from .salem import (SalemQuadratic, SalemQuartic, disc_class, enumerate_salem, holonomy_quartic,
                    salem_check_deg4, salem_with_disc, sigma_of, sqrt_witness, square_coeffs,
                    tau_of, trace_form_dets)
from .spin_bridge import SOMatrix, iota, phi, psi
from .vahlen import VahlenMatrix, family_matrix, translation_length_estimate, vahlen_check

__all__ = [
    "INF", "four_squares", "hilbert_symbol", "squarefree_part", "C4", "CQ6", "OMEGA", "ORDER_Q",
    "CliffordAlgebra", "CliffordElement", "order_coordinates", "DomainError", "InternalError",
    "NotLoxodromic", "VahlenViolation", "Poly", "BrauerClass", "DiagForm", "field_splits",
    "find_obstructed", "form_with_witt", "hasse_class", "obstruct_dim3", "obstruct_dim4",
    "obstruct_dim5", "signed_det", "witt_class", "RealizationCertificate", "realize",
    "realize_any_deg4", "realize_deg2", "realize_deg4", "verify_certificate", "SalemQuadratic",
    "SalemQuartic", "disc_class", "enumerate_salem", "holonomy_quartic", "salem_check_deg4",
    "salem_with_disc", "sigma_of", "sqrt_witness", "square_coeffs", "tau_of", "trace_form_dets",
    "SOMatrix", "iota", "phi", "psi", "VahlenMatrix", "family_matrix",
    "translation_length_estimate", "vahlen_check",
]

__version__ = "0.1.0"
