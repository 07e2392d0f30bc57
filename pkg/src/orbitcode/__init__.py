"""Cyclic orbit codes in the Grassmannian over GF(q).

The package builds constant-dimension codes as orbits of a subspace
under a cyclic matrix group in rational canonical form, computes their
projective minor coordinates two independent ways (column minors of
each codeword, and one wedge expansion pushed along the group action),
and answers ball membership queries through linear vanishing
conditions on those coordinates.
"""

from .errors import AlgebraError, ParseError
from .gf import (
    GF,
    FieldElement,
    FieldSpec,
    Polynomial,
    ResidueElement,
    is_irreducible,
    is_primitive,
    multiplicative_order,
    parse_polynomial,
    poly_gcd,
    poly_powmod,
    smallest_irreducible,
)
from .grassmann import (
    PlueckerPoint,
    Subspace,
    ball_bound_tuple,
    enumerate_grassmannian,
    gaussian_binomial,
    in_ball,
    in_standard_ball,
    plucker_coordinates,
    standard_subspace,
    subspace_distance,
    tuple_leq,
)
from .linalg import (
    FqMatrix,
    RrefResult,
    block_diagonal,
    companion_matrix,
    complete_to_invertible,
    compound_matrix,
    index_tuples,
    validate_index_tuple,
)
from .orbits import (
    GeneratorSpec,
    OrbitCode,
    ReducibilityClass,
    classify,
    generator_matrix,
    generator_order,
    orbit,
)
from .wedge import (
    ModuleElement,
    WedgeElement,
    basis_element,
    commutes_with_generator,
    factorwise_multiply,
    module_to_vector,
    one_element,
    plucker_orbit,
    vector_to_module,
    wedge_expand,
    wedge_to_plucker,
    x_element,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "ParseError",
    "GF",
    "FieldElement",
    "FieldSpec",
    "Polynomial",
    "ResidueElement",
    "is_irreducible",
    "is_primitive",
    "multiplicative_order",
    "parse_polynomial",
    "poly_gcd",
    "poly_powmod",
    "smallest_irreducible",
    "FqMatrix",
    "RrefResult",
    "block_diagonal",
    "companion_matrix",
    "complete_to_invertible",
    "compound_matrix",
    "index_tuples",
    "validate_index_tuple",
    "PlueckerPoint",
    "Subspace",
    "ball_bound_tuple",
    "enumerate_grassmannian",
    "gaussian_binomial",
    "in_ball",
    "in_standard_ball",
    "plucker_coordinates",
    "standard_subspace",
    "subspace_distance",
    "tuple_leq",
    "GeneratorSpec",
    "OrbitCode",
    "ReducibilityClass",
    "classify",
    "generator_matrix",
    "generator_order",
    "orbit",
    "ModuleElement",
    "WedgeElement",
    "basis_element",
    "commutes_with_generator",
    "factorwise_multiply",
    "module_to_vector",
    "one_element",
    "plucker_orbit",
    "vector_to_module",
    "wedge_expand",
    "wedge_to_plucker",
    "x_element",
    "__version__",
]
