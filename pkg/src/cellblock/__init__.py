"""Harmonies, packings and chords on the twelve pitch classes."""
from .errors import ChordSyntaxError, DomainError, PreconditionError, TheoremViolation
from .kernels import BACKEND
from .pcset import PitchClassSet, ShapeClass, note_name, note_value, parse_pcset

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ChordSyntaxError", "DomainError", "PitchClassSet", "PreconditionError",
    "ShapeClass", "TheoremViolation", "note_name", "note_value", "parse_pcset",
]
