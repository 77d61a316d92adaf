"""Finite rings, free cyclic submodules of R^n and their radical decomposition."""

from .core_projective import (
    CoreLine,
    LineFactorization,
    core_line_of,
    core_point_of,
    induced_factorization,
    ordinary_factorization,
)
from .errors import (
    AxiomViolation,
    BudgetExceeded,
    CoreUnavailable,
    InconsistentSignature,
    InternalDisagreement,
    NoUnity,
    NotAField,
    NotALine,
    NotInCore,
    NotIrreducible,
    NotPrime,
    RingError,
    ZeroVector,
)
from .module_geometry import (
    CyclicSubmodule,
    enumerate_nonunimodular_free,
    generate_submodule,
    is_unimodular,
    scale,
)
from .radical_decomposition import RadicalClass, decompose, radical_signature
from .ring_core import (
    FiniteRing,
    Ideal,
    build_ring,
    jacobson_radical,
    load_ring,
    maximal_ideals,
    units,
    zero_divisors,
)
from .ternion_builder import FieldSpec, build_field, build_ternions, radical_entry_indicator, ternions

__version__ = "0.1.0"
