"""Exact straightedge-and-compass constructions for Euclid Book I."""

from .number import Constructible, new_context, sqrt_nonneg

__all__ = ["Constructible", "new_context", "sqrt_nonneg"]

__version__ = "0.1.0"
