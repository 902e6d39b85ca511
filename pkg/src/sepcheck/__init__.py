"""Verification engine for codimension-1 separation theorems on
triangulated manifolds: cohomological component-count formulas checked
against an independent combinatorial complement oracle."""

from .complexes import SimplicialComplex, Subcomplex
from .maps import SimplicialMap

__all__ = ["SimplicialComplex", "Subcomplex", "SimplicialMap"]
__version__ = "0.1.0"
