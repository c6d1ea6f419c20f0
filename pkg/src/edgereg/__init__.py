"""Regularity of edge ideals: graph invariants, independence complexes and
exhaustive checks of the regularity bounds on small graphs."""

from edgereg.graph import Graph
from edgereg.simplicial import SimplicialComplex, independence_complex
from edgereg.homology import PrimeField

__all__ = ["Graph", "SimplicialComplex", "independence_complex", "PrimeField"]
__version__ = "0.1.0"
