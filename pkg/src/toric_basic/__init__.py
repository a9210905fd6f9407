"""Exact computations for complete simplicial marked fans: basic Betti
numbers and ring presentations, marked-fan isomorphism, and moment-angle
realization data."""
from .equivalence import marked_fan_isomorphic, p_equivalent
from .facering import basic_betti, graded_quotient, ring_presentation
from .fan import MarkedFan, is_rational, validate_marked_fan
from .fanfile import load, loads
from .realize import real_quotient_data, realize_moment_angle
from .simplicial import SimplicialComplex

__all__ = [
    "MarkedFan", "SimplicialComplex", "basic_betti", "graded_quotient",
    "is_rational", "load", "loads", "marked_fan_isomorphic", "p_equivalent",
    "real_quotient_data", "realize_moment_angle", "ring_presentation",
    "validate_marked_fan",
]
