"""Independent checks: planarity, embedding validation, decomposition audits.

Nothing here reuses the code that builds decompositions or embeddings.
"""

from .audit import AuditReport, Check, audit_decomposition
from .embedding import ValidationReport, trace_faces, validate_embedding
from .planarity import is_planar

__all__ = [
    "AuditReport",
    "Check",
    "ValidationReport",
    "audit_decomposition",
    "is_planar",
    "trace_faces",
    "validate_embedding",
]
