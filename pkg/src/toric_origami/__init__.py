"""Cohomology invariants of toric origami manifolds from their templates."""

from .errors import (CapabilityError, DimensionError, InconsistencyError,
                     NotAPolytopeError, OrigamiError, PreconditionError,
                     StructuralError, TemplateParseError)
from .fileformat import load, load_fixture, save
from .homology import chain_complex, expected_dual_homology, homology
from .invariants import (betti_closed_form, betti_inductive, h_vector,
                         invariant_report)
from .orbit_space import (acyclicity_report, build_face_classes, f_vector,
                          order_complex)
from .polytope import DelzantPolytope, Facet
from .ring4d import ring_presentation
from .template import FoldEdge, OrigamiTemplate, cut, validate_template

__all__ = [
    "CapabilityError", "DimensionError", "InconsistencyError", "NotAPolytopeError",
    "OrigamiError", "PreconditionError", "StructuralError", "TemplateParseError",
    "load", "load_fixture", "save", "chain_complex", "expected_dual_homology",
    "homology", "betti_closed_form", "betti_inductive", "h_vector",
    "invariant_report", "acyclicity_report", "build_face_classes", "f_vector",
    "order_complex", "DelzantPolytope", "Facet", "ring_presentation", "FoldEdge",
    "OrigamiTemplate", "cut", "validate_template",
]
