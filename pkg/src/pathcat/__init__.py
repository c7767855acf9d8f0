"""Chain-level models of the path category of a finite simplicial set."""

from .kernels import BACKEND
from .operators import SimplicialOperator, compose_operators
from .simplicial import SimplexRef, SSet, build_space, validate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "SimplicialOperator",
    "compose_operators",
    "SimplexRef",
    "SSet",
    "build_space",
    "validate",
]
