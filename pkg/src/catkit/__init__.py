"""Exact computations for braided monoidal categories, Hall algebras, species,
Mackey functors and duoidal derivation schemes."""
from __future__ import annotations

from .laurent import LaurentPoly, format_poly
from .sparse import SparseMat

__version__ = "0.1.0"

__all__ = ["LaurentPoly", "SparseMat", "format_poly", "__version__"]
