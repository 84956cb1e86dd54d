"""Exact gcd-symmetric invariants of integer partitions and the matrix
algebras fixed by a permutation: enumeration and counting, g- and h-vectors,
partition polynomials and their equivalence classes, block decompositions,
isomorphism and Morita decisions, with brute-force oracles for everything.
"""

from .algebra import (
    FieldSpec,
    MoritaResult,
    OrbitBasis,
    OrbitDecomposition,
    Permutation,
    WedderburnShape,
    canonical_permutation,
    cycle_type,
    dimension,
    is_semisimple,
    isomorphic,
    morita_equivalent,
    orbit_basis,
    pair_orbits,
    parse_permutation,
    perm_matrix,
    wedderburn,
)
from .classify import EquivalenceClass, EquivalenceClasses, classify, self_equivalent
from .errors import BoundExceededError, ConsistencyError, InputError
from .gcd_symm import (
    DetBounds,
    DivisorMatrix,
    GcdMatrix,
    GVector,
    HVector,
    divisor_matrix,
    euler_phi,
    g_vector,
    gcd_matrix,
    gcd_matrix_det_and_bounds,
    gcd_product,
    h_vector,
    power_norm,
)
from .oracles import (
    ReducedFraction,
    VerificationReport,
    brute_g,
    commutant_dimension,
    eigenvalue_multiplicities,
    root_union,
    verify_all,
)
from .partition_poly import (
    PartitionPolynomial,
    distinct_eigenvalue_count,
    epsilon,
    epsilon_eval,
    equivalent,
)
from .partitions import (
    Partition,
    concat,
    conjugate,
    count_partitions,
    enumerate_partitions,
    parse_partition,
    scale,
    truncate,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "ConsistencyError",
    "DetBounds",
    "DivisorMatrix",
    "EquivalenceClass",
    "EquivalenceClasses",
    "FieldSpec",
    "GVector",
    "GcdMatrix",
    "HVector",
    "InputError",
    "MoritaResult",
    "OrbitBasis",
    "OrbitDecomposition",
    "Partition",
    "PartitionPolynomial",
    "Permutation",
    "ReducedFraction",
    "VerificationReport",
    "WedderburnShape",
    "brute_g",
    "canonical_permutation",
    "classify",
    "commutant_dimension",
    "concat",
    "conjugate",
    "count_partitions",
    "cycle_type",
    "dimension",
    "distinct_eigenvalue_count",
    "divisor_matrix",
    "eigenvalue_multiplicities",
    "enumerate_partitions",
    "epsilon",
    "epsilon_eval",
    "equivalent",
    "euler_phi",
    "g_vector",
    "gcd_matrix",
    "gcd_matrix_det_and_bounds",
    "gcd_product",
    "h_vector",
    "is_semisimple",
    "isomorphic",
    "morita_equivalent",
    "orbit_basis",
    "pair_orbits",
    "parse_partition",
    "parse_permutation",
    "perm_matrix",
    "power_norm",
    "root_union",
    "scale",
    "self_equivalent",
    "truncate",
    "verify_all",
    "wedderburn",
]
