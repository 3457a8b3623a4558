"""Normal integral bases of Emma Lehmer's cyclic quintic fields, in exact arithmetic."""

from .errors import (
    CertificationFailed,
    FactorizationIncomplete,
    LehmerError,
    NoDividingConjugate,
    NonIntegralM,
    UnsplittablePrime,
    WildRamification,
)
from .integral_basis import IntegralBasis, build_integral_basis
from .invariants import FieldInvariants, compute_invariants
from .nib import NibGenerator, build_nib_generator, certify_nib, squarefree_generator
from .nib_enum import GroupRingUnit, act_unit, enumerate_generators, orbit_match, xi
from .quintic_field import FieldContext, FieldElement, build_field
from .zeta5 import CycInt

__version__ = "0.1.0"
