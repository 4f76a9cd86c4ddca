from app.models.base import (
    AlgebraError,
    DegreeCapError,
    FieldMismatchError,
    RingMismatchError,
)
from app.models.gf2_poly import (
    FqElement,
    FqField,
    Gf2Poly,
    NotIrreducibleError,
    fq_inv,
    fq_sqrt,
    gf2_factor,
    gf2_mul,
)
from app.models.number_ring import NumberRing, RingElement, elem_add, elem_from_int, elem_mul
from app.models.ideal_lattice import (
    FractionalIdeal,
    IdealLattice,
    NonMaximalOrderError,
    PrimeAbove2,
    ZeroIdealError,
    dedekind_maximal_at_2,
    hnf_reduce,
    fractional_mul,
    ideal_contains,
    ideal_equal,
    ideal_from_elems,
    ideal_mul,
    is_generated_by,
    is_square_modulo,
    prime_inverse,
    primes_above_2,
)
from app.models.bivar_poly import (
    BivarPoly,
    Variable,
    poly_derivative,
    poly_eval,
    poly_reduce_mod_P,
)


__all__ = [
    "AlgebraError",
    "DegreeCapError",
    "FieldMismatchError",
    "RingMismatchError",
    "FqElement",
    "FqField",
    "Gf2Poly",
    "NotIrreducibleError",
    "fq_inv",
    "fq_sqrt",
    "gf2_factor",
    "gf2_mul",
    "NumberRing",
    "RingElement",
    "elem_add",
    "elem_from_int",
    "elem_mul",
    "FractionalIdeal",
    "IdealLattice",
    "NonMaximalOrderError",
    "PrimeAbove2",
    "ZeroIdealError",
    "dedekind_maximal_at_2",
    "hnf_reduce",
    "fractional_mul",
    "ideal_contains",
    "ideal_equal",
    "ideal_from_elems",
    "ideal_mul",
    "is_generated_by",
    "is_square_modulo",
    "prime_inverse",
    "primes_above_2",
    "BivarPoly",
    "Variable",
    "poly_derivative",
    "poly_eval",
    "poly_reduce_mod_P",
]
