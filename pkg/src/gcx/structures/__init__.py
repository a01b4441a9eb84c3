"""Generalized almost contact structures and generalized complex structures on Lie algebras."""
from __future__ import annotations

from .classical import (
    ClosedFormsReport, NormalityReport, cosymplectic_report, from_almost_contact, from_contact,
    from_cosymplectic, is_normal, nijenhuis_phi, reeb_field,
)
from .classify import Classification, Level, Obstruction, classify, dEta_on_kernel, nij, obstruction
from .deform import DeformParam, MCResult, deform_E, gamma_sharp, graph_closed, mc_check, pairing_form
from .eigen import EigenData, TypeBlocks, eigenbundles, kernel_basis, projectors, type_components
from .gacs import Gacs, Violation, gacs_violations, make_gacs, odot_matrix, rescale, validate_gacs
from .gcs import (
    Gcs, complex_gcs, gcs_from_eigenspan, gcs_integrable, gcs_violations, kodaira_basis,
    kodaira_family, kodaira_rows, kodaira_span, lift_gcs, symplectic_gcs, validate_gcs,
)

__all__ = [
    "Classification", "ClosedFormsReport", "DeformParam", "EigenData", "Gacs", "Gcs", "Level",
    "MCResult", "NormalityReport", "Obstruction", "TypeBlocks", "Violation", "classify",
    "complex_gcs", "cosymplectic_report", "dEta_on_kernel", "deform_E", "eigenbundles",
    "from_almost_contact", "from_contact", "from_cosymplectic", "gacs_violations", "gamma_sharp",
    "gcs_from_eigenspan", "gcs_integrable", "gcs_violations", "graph_closed", "is_normal",
    "kernel_basis", "kodaira_basis", "kodaira_family", "kodaira_rows", "kodaira_span", "lift_gcs",
    "make_gacs", "mc_check", "nij", "nijenhuis_phi", "obstruction", "odot_matrix", "pairing_form",
    "projectors", "reeb_field", "rescale", "symplectic_gcs", "type_components", "validate_gacs",
    "validate_gcs",
]
