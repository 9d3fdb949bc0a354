"""Builders for the regular graph families and their shared checks."""

from .common import (
    AuditReport,
    ConstructionError,
    ConstructionResult,
    EdgeNotInGraph,
    FeasibilityVerdict,
    ImproperInputColoring,
    InternalRecipeInconsistency,
    LabelCollision,
    ParamOutOfRange,
    ParityViolation,
    Reason,
    TEqualsKMinus2,
    audit,
    build_glk,
    chromatic_join,
    feasibility,
    nonessential_check,
)
from .even_k import build_theorem3
from .higher_degree import build_theorem4
from .odd_k import build_theorem2, theorem2_nonessential_edges
from .three_layer import build_theorem1

__all__ = [
    "AuditReport",
    "ConstructionError",
    "ConstructionResult",
    "EdgeNotInGraph",
    "FeasibilityVerdict",
    "ImproperInputColoring",
    "InternalRecipeInconsistency",
    "LabelCollision",
    "ParamOutOfRange",
    "ParityViolation",
    "Reason",
    "TEqualsKMinus2",
    "audit",
    "build_glk",
    "build_theorem1",
    "build_theorem2",
    "build_theorem3",
    "build_theorem4",
    "chromatic_join",
    "feasibility",
    "nonessential_check",
    "theorem2_nonessential_edges",
]
