"""Le numbers, Le cycles and cohomology constraints for curve singularities.

The main entry points:

* :func:`parse_polynomial` and :class:`Polynomial` for exact arithmetic over Q;
* :func:`analyze` for the polar curve, Le cycle and Le numbers of ``f``;
* :func:`classify` / :func:`classify_analysis` for admissible cohomology;
* :mod:`lenumbers.lemodule` for integer linear algebra on Le-module candidates.
"""
from .classify import CohomologyProfile, TorsionDescriptor, classify, classify_analysis, prime_allowed
from .components import CurveComponent, CycleDecomposition, SplitConfig, split_components
from .errors import LeError
from .ideals import buchberger, local_colength, local_dimension, mora_standard_basis
from .lecycles import LeAnalysis, analyze
from .poly import Polynomial, parse_polynomial

__all__ = [
    "CohomologyProfile",
    "CurveComponent",
    "CycleDecomposition",
    "LeAnalysis",
    "LeError",
    "Polynomial",
    "SplitConfig",
    "TorsionDescriptor",
    "analyze",
    "buchberger",
    "classify",
    "classify_analysis",
    "local_colength",
    "local_dimension",
    "mora_standard_basis",
    "parse_polynomial",
    "prime_allowed",
    "split_components",
]

__version__ = "0.1.0"
