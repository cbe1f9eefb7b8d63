"""Preferred answer sets of ordered logic programs."""

from ._olp import (
    Error,
    InvalidArgument,
    ParseError,
    Program,
    SemanticError,
    answer_sets,
    compile,
    is_preferred,
    solve,
    stratify,
    trace,
    witness,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "ParseError",
    "Program",
    "SemanticError",
    "answer_sets",
    "compile",
    "is_preferred",
    "solve",
    "stratify",
    "trace",
    "witness",
]
