"""Discrete eigenproblems for superpositions of fractional Laplacians.

Pencils ``L_{mu+} u = lambda L_{mu-} u`` on unions of intervals in 1-D, with
exterior Dirichlet data, plus numerical checks of their qualitative spectral
properties.
"""
from .eigensolver import (
    EigenResult,
    Pencil,
    build_pencil,
    rayleigh_quotient,
    sign_classification,
    simplicity_diagnostic,
    smallest_eigenpairs,
)
from .errors import (
    ConfigError,
    DefinitenessError,
    DomainError,
    MixspecError,
    NumericalError,
    PreconditionError,
    ResolutionError,
    ShapeError,
    StructuralError,
)
from .grid import Domain, Grid, build_grid
from .measure import MeasureAtom, SignedMeasure, combine, from_density, make_dirac
from .operator import assemble_single, assemble_superposed, brute_force_apply, seminorm_sq

__version__ = "0.1.0"
