"""Chekanov-Eliashberg DGA, filling augmentations and the Catalan classification
for the max-tb Legendrian (2, n) torus knot, over GF(2) Laurent coefficients."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, ChordId, evaluate, extend_derivation
from .classify import (ClassReport, apply_basis_change, catalan, distinctness_report,
                       enumerate_classes, equivalent, invariant_vector, relation_neighbors)
from .diagram import LagrangianDiagram, build_band, build_final_unknot, build_torus_2n
from .disks import DGA, check_dga, differential, enumerate_rigid_disks
from .errors import DGAError, DiagramError, DomainError, ResourceGuardError, UsageError
from .filling import (Augmentation, Permutation, augmentation_by_pinching, close_filling,
                      closed_form_augmentation, lift_even, pinch_map, pinch_sequence,
                      s_set, t_set)
from .laurent import LaurentPoly, VariableContext, substitute

__all__ = [
    "AlgebraElement", "Augmentation", "ChordId", "ClassReport", "DGA", "DGAError",
    "DiagramError", "DomainError", "LagrangianDiagram", "LaurentPoly", "Permutation",
    "ResourceGuardError", "UsageError", "VariableContext", "apply_basis_change",
    "augmentation_by_pinching", "build_band", "build_final_unknot", "build_torus_2n",
    "catalan", "check_dga", "close_filling", "closed_form_augmentation", "differential",
    "distinctness_report", "enumerate_classes", "enumerate_rigid_disks", "equivalent",
    "evaluate", "extend_derivation", "invariant_vector", "lift_even", "pinch_map",
    "pinch_sequence", "relation_neighbors", "s_set", "substitute", "t_set",
]
