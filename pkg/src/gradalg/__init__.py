"""Exact computations with finite-dimensional graded algebras."""

from .algcore import (
    AlgebraRep,
    Arrow,
    QuiverPresentation,
    build_from_presentation,
    center,
    radical,
    radical_series,
    socle_series,
    validate_algebra,
)
from .exactla import Field, Mat, mat_nullspace, mat_rank, mat_solve
from .grading import Grading, degree_profile, degree_zero_part, regrade_by_shifts, validate_grading
from .laurent import LaurentPoly

__all__ = [
    "AlgebraRep", "Arrow", "QuiverPresentation", "build_from_presentation", "center", "radical",
    "radical_series", "socle_series", "validate_algebra", "Field", "Mat", "mat_nullspace",
    "mat_rank", "mat_solve", "Grading", "degree_profile", "degree_zero_part", "regrade_by_shifts",
    "validate_grading", "LaurentPoly",
]
