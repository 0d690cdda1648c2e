"""Coincidence and similarity rotations of lattices, in exact arithmetic."""

from csl.errors import CslError

__version__ = "0.1.0"

__all__ = ["CslError", "__version__"]
