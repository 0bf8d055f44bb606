"""Reidemeister-Franz torsion of based chain complexes.

Exact rational arithmetic throughout; rationals cross the boundary as
"p/q" strings and complexes as document text (see the README for the
format).
"""

from ._core import (
    DocumentSemanticError,
    DocumentSyntaxError,
    UnknownModelError,
    betti,
    model,
    model_document,
    roundtrip,
    ses_verify,
    symplectic_torsion,
    torsion,
    verify_suite,
)

__all__ = [
    "DocumentSemanticError",
    "DocumentSyntaxError",
    "UnknownModelError",
    "betti",
    "model",
    "model_document",
    "roundtrip",
    "ses_verify",
    "symplectic_torsion",
    "torsion",
    "verify_suite",
]
