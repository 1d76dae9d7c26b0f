"""Verification engine for operator-valued plane waves of non-Abelian
gauge fields, with a Dirac Zitterbewegung source model and Poynting-flux
cross-checks."""

from .algebra import (
    DimMismatch,
    GeneratorSet,
    NonTracelessBasis,
    OperatorMatrix,
    OperatorVector3,
    UnsupportedGenerator,
    anticommutator,
    commutator,
    cross,
    custom_generators,
    dot,
    make_generators,
    structure_constants,
)
from .fields import (
    HarmonicScalarField,
    HarmonicVectorField,
    SolutionFamily,
    WaveContext,
    build_fields,
    build_potentials,
    fields_from_potentials,
    random_family,
    xz_family,
)

__version__ = "0.1.0"
