"""Set partitions, rooks on triangular boards, and symmetric functions in
noncommuting variables, with exhaustive small-case verification."""

from .partitions import (
    TRIVIAL,
    SetPartition,
    atomic_factor,
    coarser_eq,
    enumerate_partitions,
    from_rgf,
    is_atomic,
    is_unsplitable,
    normalize,
    parse_partition,
    slash,
    split,
    to_rgf,
    unsplitable_factor,
)
from .rooks import (
    UNIT_ROOK,
    PermutationMatrix,
    RookAlgebraElement,
    RookPlacement,
    edsum,
    extend,
    is_extendable,
    is_extendable_bruteforce,
    partition_to_rook,
    rook_product,
    rook_to_partition,
)
from .ncsym import (
    NCPolynomial,
    NCSymElement,
    expand_m,
    expand_p,
    multiply_nc,
    mu_matrix,
    product_p,
    rook_image,
    to_basis,
    type_partition,
    zeta_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "TRIVIAL",
    "SetPartition",
    "atomic_factor",
    "coarser_eq",
    "enumerate_partitions",
    "from_rgf",
    "is_atomic",
    "is_unsplitable",
    "normalize",
    "parse_partition",
    "slash",
    "split",
    "to_rgf",
    "unsplitable_factor",
    "UNIT_ROOK",
    "PermutationMatrix",
    "RookAlgebraElement",
    "RookPlacement",
    "edsum",
    "extend",
    "is_extendable",
    "is_extendable_bruteforce",
    "partition_to_rook",
    "rook_product",
    "rook_to_partition",
    "NCPolynomial",
    "NCSymElement",
    "expand_m",
    "expand_p",
    "multiply_nc",
    "mu_matrix",
    "product_p",
    "rook_image",
    "to_basis",
    "type_partition",
    "zeta_matrix",
]
