"""Exact computations in the stable module category of path algebras of acyclic quivers over GF(p)."""

from .errors import (
    InputError,
    InternalAssertion,
    NoneExists,
    NotAbelianCase,
    OracleMismatch,
    SplitAssertionFailed,
    StableModError,
)
from .exactfield import DEFAULT_PRIME, PrimeField
from .normality import (
    alpha_pushout,
    bimorphism_witness,
    is_normal_epi,
    non_normal_mono_witness,
    normal_mono_certificate,
    sequence_splits,
    stable_envelope_procedure,
)
from .quiver import Quiver, an_quiver
from .rep import Morphism, Representation, inj, interval, proj, simple
from .stablecat import (
    clear_caches,
    epi_witness,
    is_stable_epi,
    is_stable_iso,
    is_stable_mono,
    is_stable_split_epi,
    is_stable_split_mono,
    is_stably_zero,
    stable_hom,
)
from .suites import run_suite
from .torsion import canonical_split, torsion_submodule
from .verdict import census, classify, equivalence_table

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME",
    "InputError",
    "InternalAssertion",
    "Morphism",
    "NoneExists",
    "NotAbelianCase",
    "OracleMismatch",
    "PrimeField",
    "Quiver",
    "Representation",
    "SplitAssertionFailed",
    "StableModError",
    "alpha_pushout",
    "an_quiver",
    "bimorphism_witness",
    "canonical_split",
    "census",
    "classify",
    "clear_caches",
    "epi_witness",
    "equivalence_table",
    "inj",
    "interval",
    "is_normal_epi",
    "is_stable_epi",
    "is_stable_iso",
    "is_stable_mono",
    "is_stable_split_epi",
    "is_stable_split_mono",
    "is_stably_zero",
    "non_normal_mono_witness",
    "normal_mono_certificate",
    "proj",
    "run_suite",
    "sequence_splits",
    "simple",
    "stable_envelope_procedure",
    "stable_hom",
    "torsion_submodule",
]
