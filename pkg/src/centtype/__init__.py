"""Exact type invariants of matrices and conjugacy of centralizers.

The library computes the cycle type, Green type, and generalized type
of a square matrix over Q or a prime field, decides whether two
centralizer algebras are conjugate inside the full matrix algebra
(they are exactly when the generalized types agree), and produces
checkable witnesses: polynomials p, q with p(X) similar to Y and q(Y)
similar to X, an explicit conjugator, and centralizer bases.  It also
decides equality of permutation centralizers in symmetric and
alternating groups, with brute-force oracles for small degrees.
"""

from .centkit import (
    CentralizerBasis,
    ConjugacyCertificate,
    JCDecomposition,
    PrimaryComponent,
    cent_conjugate_bruteforce,
    cent_dim,
    cent_span_equal,
    centralizer_basis,
    centralizers_conjugate,
    jordan_chevalley,
    primary_decomposition,
    witness_polynomials,
)
from .errors import (
    CompositeModulus,
    CtxMismatch,
    DivisionByZero,
    ExactAlgebraError,
    NonCoprimeModuli,
    NonSquarefreeDerivativeUnit,
    NotAnExtension,
    NotIrreducible,
    NotSquare,
    OddPermutation,
    ParseError,
    ReducibleModulus,
    SingularMatrix,
    SizeMismatch,
    TooLarge,
    UnknownSuite,
    UnsupportedField,
    VerificationError,
    ZeroPolynomial,
)
from .exactfield import (
    ExtensionField,
    FieldElem,
    PrimeField,
    RationalField,
    elem_from_json,
    elem_to_json,
    extension_field,
    field_from_descriptor,
    make_field,
    prime_field,
    rationals,
)
from .exactmat import (
    FrobeniusForm,
    Matrix,
    block_diag,
    charpoly,
    companion,
    frobenius_form,
    mat_eval_poly,
    matrix_embed,
    minpoly,
    restrict_to_basis,
    similar_conjugator,
)
from .permcent import (
    CycleLayers,
    Permutation,
    VariationReport,
    an_cent_equal,
    cent_order_sn,
    cycle_layers,
    locally_equivalent,
    perm_centralizer_bruteforce,
    perm_equivalent,
    sn_cent_equal,
)
from .typealg import (
    CycleType,
    GeneralizedType,
    GreenType,
    Partition,
    cent_dim_formula,
    cent_dim_weight,
    cycle_type,
    dominance_leq,
    generalized_type,
    gentype_equal,
    gentype_matching,
    green_type,
    partitions_of,
    poly_equivalent,
)
from .upoly import (
    Factorization,
    Poly,
    is_irreducible,
    poly_compose_mod,
    poly_crt,
    poly_embed,
    poly_factor,
    poly_gcd,
    poly_lcm,
    poly_pow_mod,
    poly_resultant,
    poly_roots_in_ext,
    poly_xgcd,
    squarefree_decomposition,
    squarefree_part,
)
from .verify import VerifyReport, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "CentralizerBasis",
    "CompositeModulus",
    "ConjugacyCertificate",
    "CtxMismatch",
    "CycleLayers",
    "CycleType",
    "DivisionByZero",
    "ExactAlgebraError",
    "ExtensionField",
    "Factorization",
    "FieldElem",
    "FrobeniusForm",
    "GeneralizedType",
    "GreenType",
    "JCDecomposition",
    "Matrix",
    "NonCoprimeModuli",
    "NonSquarefreeDerivativeUnit",
    "NotAnExtension",
    "NotIrreducible",
    "NotSquare",
    "OddPermutation",
    "ParseError",
    "Partition",
    "Permutation",
    "Poly",
    "PrimaryComponent",
    "PrimeField",
    "RationalField",
    "ReducibleModulus",
    "SingularMatrix",
    "SizeMismatch",
    "TooLarge",
    "UnknownSuite",
    "UnsupportedField",
    "VariationReport",
    "VerificationError",
    "VerifyReport",
    "ZeroPolynomial",
    "an_cent_equal",
    "block_diag",
    "cent_conjugate_bruteforce",
    "cent_dim",
    "cent_dim_formula",
    "cent_dim_weight",
    "cent_order_sn",
    "cent_span_equal",
    "centralizer_basis",
    "centralizers_conjugate",
    "charpoly",
    "companion",
    "cycle_layers",
    "cycle_type",
    "dominance_leq",
    "elem_from_json",
    "elem_to_json",
    "extension_field",
    "field_from_descriptor",
    "frobenius_form",
    "generalized_type",
    "gentype_equal",
    "gentype_matching",
    "green_type",
    "is_irreducible",
    "jordan_chevalley",
    "locally_equivalent",
    "make_field",
    "mat_eval_poly",
    "matrix_embed",
    "minpoly",
    "partitions_of",
    "perm_centralizer_bruteforce",
    "perm_equivalent",
    "poly_compose_mod",
    "poly_crt",
    "poly_embed",
    "poly_equivalent",
    "poly_factor",
    "poly_gcd",
    "poly_lcm",
    "poly_pow_mod",
    "poly_resultant",
    "poly_roots_in_ext",
    "poly_xgcd",
    "primary_decomposition",
    "prime_field",
    "rationals",
    "restrict_to_basis",
    "run_suite",
    "similar_conjugator",
    "sn_cent_equal",
    "squarefree_decomposition",
    "squarefree_part",
    "suite_names",
    "witness_polynomials",
]
