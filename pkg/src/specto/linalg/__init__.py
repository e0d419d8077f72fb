from .module import (
    char_poly,
    collatz_wielandt_lower,
    collatz_wielandt_upper,
    coordinates,
    cyclic_subspace,
    determinant,
    hermite_normal_form,
    integer_kernel,
    is_primitive,
    krylov_vectors,
    poly_at_matrix,
    project_remark_b,
    rank,
    restrict,
    saturate_lattice,
    solve_in_span,
    subspace_from_basis,
)
from .schema import IntMatrix, IntPoly, MinimalSubspace, RatVector

__all__ = [
    "IntMatrix",
    "IntPoly",
    "MinimalSubspace",
    "RatVector",
    "char_poly",
    "collatz_wielandt_lower",
    "collatz_wielandt_upper",
    "coordinates",
    "cyclic_subspace",
    "determinant",
    "hermite_normal_form",
    "integer_kernel",
    "is_primitive",
    "krylov_vectors",
    "poly_at_matrix",
    "project_remark_b",
    "rank",
    "restrict",
    "saturate_lattice",
    "solve_in_span",
    "subspace_from_basis",
]
