"""Ideal triangulations of cusped 3-manifolds.

Gluing tables, Pachner and 4-4 moves, canonical isomorphism signatures,
first homology via Smith normal form, and hyperbolic volume by
angle-structure maximisation -- enough machinery to verify mechanically
that the census triangulations x101 and x103 describe the same manifold.
"""

from .perm4 import Perm4
from .triangulation import (Triangulation, Gluing, make_closed,
                            EdgeClass, VertexClass, SkeletonReport,
                            LinkSurface, ValidationReport,
                            validate, skeleton, vertex_link, is_orientable,
                            face_classes, edge_walk)
from .builders import (CubeComplex, Square, SquareMap, DiagonalMismatch,
                       five_tet_cube, layer_on_square, identify_squares,
                       build_x101, x101_flip_edge, build_x103,
                       double_cover, build_figure_eight, X101_MAPS)
from .moves import (MoveDescriptor, MoveError, pachner_23, pachner_32,
                    move_44, move_44_as_pachner_pair, legal_moves,
                    apply_move)
from .isosig import (Isomorphism, canonical_signature, canonical_form,
                     decode_signature, are_isomorphic, relabel)
from .homology import (IntMatrix, AbelianGroup, SpinePresentation,
                       smith_normal_form, spine_presentation,
                       first_homology)
from .angles import (AnglePoint, AngleSystem, angle_slot, angle_equations,
                     feasible_point, coordinate_bounds)
from .volume import (VolumeResult, lobachevsky, max_volume,
                     INTERIOR_MAX, BOUNDARY_MAX, INFEASIBLE, NOT_CONVERGED)
from .search import (SearchBudget, PachnerPath, DedupeGroup, DedupeReport,
                     bfs_connect, dedupe_census)
from .fileio import parse, serialize, ParseError

__version__ = "0.1.0"

__all__ = [
    "Perm4", "Triangulation", "Gluing", "make_closed",
    "EdgeClass", "VertexClass", "SkeletonReport", "LinkSurface",
    "ValidationReport", "validate", "skeleton", "vertex_link",
    "is_orientable", "face_classes", "edge_walk",
    "CubeComplex", "Square", "SquareMap", "DiagonalMismatch",
    "five_tet_cube", "layer_on_square", "identify_squares",
    "build_x101", "x101_flip_edge", "build_x103", "double_cover",
    "build_figure_eight", "X101_MAPS",
    "MoveDescriptor", "MoveError", "pachner_23", "pachner_32", "move_44",
    "move_44_as_pachner_pair", "legal_moves", "apply_move",
    "Isomorphism", "canonical_signature", "canonical_form",
    "decode_signature", "are_isomorphic", "relabel",
    "IntMatrix", "AbelianGroup", "SpinePresentation",
    "smith_normal_form", "spine_presentation", "first_homology",
    "AnglePoint", "AngleSystem", "angle_slot", "angle_equations",
    "feasible_point", "coordinate_bounds",
    "VolumeResult", "lobachevsky", "max_volume",
    "INTERIOR_MAX", "BOUNDARY_MAX", "INFEASIBLE", "NOT_CONVERGED",
    "SearchBudget", "PachnerPath", "DedupeGroup", "DedupeReport",
    "bfs_connect", "dedupe_census",
    "parse", "serialize", "ParseError",
]
