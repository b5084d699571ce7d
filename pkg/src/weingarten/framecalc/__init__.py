"""Symbolic surface calculus, coefficient tables and the printed-formula audit."""

from .audit import (
    ERRATUM,
    EXACT,
    MISMATCH,
    AuditReport,
    PreconditionError,
    arclength_identity_check,
    audit_all,
    audit_entry,
    audit_formula,
    replay,
)
from .catalog import CATALOG, ENTRIES, CatalogEntry, CatalogError, get_entry, select
from .frames import (
    FRENET,
    PARALLEL,
    FrameMismatchError,
    FrameVector,
    alphabet_for,
    build_cyclic_parametrization,
    triple_product,
)
from .table import (
    KEYS,
    CoefficientTable,
    RadicalSpec,
    Step,
    base_table,
    case_substitute,
    extract_table,
)
from .weingarten import RelationError, WeingartenRelation, assemble_weingarten, curvature_parts

__all__ = [
    "AuditReport", "CATALOG", "CatalogEntry", "CatalogError", "CoefficientTable", "ENTRIES",
    "ERRATUM", "EXACT", "FRENET", "FrameMismatchError", "FrameVector", "KEYS", "MISMATCH",
    "PARALLEL", "PreconditionError", "RadicalSpec", "RelationError", "Step",
    "WeingartenRelation", "alphabet_for", "arclength_identity_check", "assemble_weingarten",
    "audit_all", "audit_entry", "audit_formula", "base_table", "build_cyclic_parametrization",
    "case_substitute", "curvature_parts", "extract_table", "get_entry", "replay", "select",
    "triple_product",
]
