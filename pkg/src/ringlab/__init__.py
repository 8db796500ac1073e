"""Exact computation over commutative Bezout rings.

Certified diagonal reduction of matrices, exhaustive predicate
classification of finite rings, constructive adequacy witnesses on
structured infinite rings, and a corpus runner that machine-checks the
supporting theory at desk scale.
"""

from .concrete import (
    builtin_table_path,
    load_table_ring,
    localized_residue_map,
    make_ring,
    quotient_ring,
)
from .engine import (
    AdequateWitness,
    PiRegularWitness,
    PropertyResult,
    build_cache,
    element_predicate,
    fza_witness,
    j_characterization_check,
    pi_regular_decomposition,
    ring_predicate,
)
from .reduction import (
    ReductionCertificate,
    RingMatrix,
    comax_triangular_reduce,
    diagonal_reduce,
    hermite_step,
    solve_reduction_residue,
    verify_certificate,
)
from .rings import BezoutData, Element, Ring, arith, bezout_gcd, divides, is_unit

__version__ = "0.1.0"

__all__ = [
    "AdequateWitness",
    "BezoutData",
    "Element",
    "PiRegularWitness",
    "PropertyResult",
    "ReductionCertificate",
    "Ring",
    "RingMatrix",
    "arith",
    "bezout_gcd",
    "build_cache",
    "builtin_table_path",
    "comax_triangular_reduce",
    "diagonal_reduce",
    "divides",
    "element_predicate",
    "fza_witness",
    "hermite_step",
    "is_unit",
    "j_characterization_check",
    "load_table_ring",
    "localized_residue_map",
    "make_ring",
    "pi_regular_decomposition",
    "quotient_ring",
    "ring_predicate",
    "solve_reduction_residue",
    "verify_certificate",
]
