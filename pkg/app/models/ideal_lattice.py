"""Integral ideals of B = Z[θ] as full-rank lattices in Hermite normal form.

Also hosts the Dedekind machinery for the prime 2: the maximality test,
the splitting of 2B and the inverses of the primes above 2.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from sympy.polys.densearith import dup_exquo_ground, dup_mul, dup_sub
from sympy.polys.domains import FF, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from app.models.base import AlgebraError, RingMismatchError
from app.models.gf2_poly import FqElement, FqField, Gf2Poly, gf2_factor, gf2_gcd
from app.models.number_ring import NumberRing, RingElement

logger = logging.getLogger(__name__)


class ZeroIdealError(AlgebraError):
    pass


class NonMaximalOrderError(AlgebraError):
    pass


@dataclass(frozen=True)
class IdealLattice:
    """columns[j] is the j-th Z-basis vector; columns[j][i] == 0 for i > j."""

    ring: NumberRing
    columns: Tuple[Tuple[int, ...], ...]

    @classmethod
    def unit(cls, ring: NumberRing) -> "IdealLattice":
        return hnf_reduce(ring, [ring.power(i) for i in range(ring.n)])

    @property
    def basis(self) -> Tuple[Tuple[int, ...], ...]:
        """The HNF matrix, row by row."""
        n = self.ring.n
        return tuple(tuple(self.columns[j][i] for j in range(n)) for i in range(n))

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.columns[i][i] for i in range(self.ring.n))

    @property
    def norm(self) -> int:
        return prod(self.diagonal)

    def basis_elements(self) -> List[RingElement]:
        return [self.ring.element(col) for col in self.columns]

    def contains(self, x: RingElement) -> bool:
        return ideal_contains(self, x)

    def is_unit(self) -> bool:
        return self.norm == 1

    def residue_representatives(self) -> Iterator[RingElement]:
        """One element per class of B/I: the box 0 <= v_i < diagonal_i."""
        for coords in itertools.product(*(range(d) for d in self.diagonal)):
            yield self.ring.element(coords)

    def __mul__(self, other: "IdealLattice") -> "IdealLattice":
        return ideal_mul(self, other)

    def __pow__(self, exponent: int) -> "IdealLattice":
        if exponent < 0:
            raise AlgebraError("use prime_inverse for negative powers")
        result = IdealLattice.unit(self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        return "<" + ", ".join(str(x) for x in self.basis_elements()) + ">"


def hnf_reduce(ring: NumberRing, generators: Iterable[Sequence[int]]) -> IdealLattice:
    n = ring.n
    gens = []
    for g in generators:
        vector = tuple(int(c) for c in g)
        if len(vector) != n:
            raise AlgebraError(f"generator {vector} does not have {n} coordinates")
        if any(vector):
            gens.append(vector)
    if not gens:
        raise ZeroIdealError("the zero ideal is not representable")

    matrix = DomainMatrix([[ZZ(g[i]) for g in gens] for i in range(n)], (n, len(gens)), ZZ)
    hnf = hermite_normal_form(matrix).to_Matrix()
    if hnf.shape[1] != n:
        raise ZeroIdealError(f"generators span a rank-{hnf.shape[1]} sublattice, rank {n} is required")
    columns = tuple(tuple(int(hnf[i, j]) for i in range(n)) for j in range(n))
    return IdealLattice(ring, columns)


def ideal_from_elems(elems: Sequence[RingElement]) -> IdealLattice:
    """The B-module generated by elems: Z-generators elem·θ^j."""
    elems = list(elems)
    if not elems:
        raise ZeroIdealError("an ideal needs at least one generator")
    ring = elems[0].ring
    for e in elems:
        if e.ring != ring:
            raise RingMismatchError(f"{e.ring!r} differs from {ring!r}")
    if all(e.is_zero() for e in elems):
        raise ZeroIdealError("the zero ideal is not representable")
    theta_powers = [ring.element(ring.power(j)) for j in range(ring.n)]
    return hnf_reduce(ring, [(e * t).coords for e in elems for t in theta_powers])


def ideal_mul(left: IdealLattice, right: IdealLattice) -> IdealLattice:
    if left.ring != right.ring:
        raise RingMismatchError(f"{left.ring!r} differs from {right.ring!r}")
    return hnf_reduce(
        left.ring,
        [(x * y).coords for x in left.basis_elements() for y in right.basis_elements()],
    )


def ideal_contains(ideal: IdealLattice, x: RingElement) -> bool:
    if x.ring != ideal.ring:
        raise RingMismatchError(f"{x.ring!r} differs from {ideal.ring!r}")
    residual = list(x.coords)
    for j in range(ideal.ring.n - 1, -1, -1):
        column = ideal.columns[j]
        q, r = divmod(residual[j], column[j])
        if r:
            return False
        if q:
            for i in range(j + 1):
                residual[i] -= q * column[i]
    return True


def is_square_modulo(ideal: IdealLattice, x: RingElement) -> bool:
    return any(ideal.contains(y * y - x) for y in ideal.residue_representatives())


def ideal_equal(left: IdealLattice, right: IdealLattice) -> bool:
    """HNF is canonical, so lattice equality is column equality."""
    if left.ring != right.ring:
        raise RingMismatchError(f"{left.ring!r} differs from {right.ring!r}")
    return left.columns == right.columns


def is_generated_by(ideal: IdealLattice, x: RingElement) -> bool:
    if x.is_zero():
        return False
    return ideal_equal(ideal, ideal_from_elems([x]))


@dataclass(frozen=True)
class FractionalIdeal:
    """numerator / denominator, kept in lowest terms by make()."""

    numerator: IdealLattice
    denominator: int

    @classmethod
    def make(cls, numerator: IdealLattice, denominator: int) -> "FractionalIdeal":
        if denominator <= 0:
            raise AlgebraError(f"denominator must be positive, got {denominator}")
        content = 0
        for column in numerator.columns:
            for c in column:
                content = gcd(content, c)
        g = gcd(content, denominator)
        if g > 1:
            numerator = hnf_reduce(numerator.ring, [[c // g for c in col] for col in numerator.columns])
            denominator //= g
        return cls(numerator, denominator)

    def basis_elements(self) -> List[Tuple[RingElement, int]]:
        return [(x, self.denominator) for x in self.numerator.basis_elements()]

    def is_unit(self) -> bool:
        return self.denominator == 1 and self.numerator.is_unit()

    def __mul__(self, other: Union["FractionalIdeal", IdealLattice]) -> "FractionalIdeal":
        return fractional_mul(self, other)

    def __str__(self) -> str:
        return f"(1/{self.denominator})·{self.numerator}"


def fractional_mul(
    left: Union[FractionalIdeal, IdealLattice], right: Union[FractionalIdeal, IdealLattice]
) -> FractionalIdeal:
    if isinstance(left, IdealLattice):
        left = FractionalIdeal(left, 1)
    if isinstance(right, IdealLattice):
        right = FractionalIdeal(right, 1)
    return FractionalIdeal.make(left.numerator * right.numerator, left.denominator * right.denominator)


@dataclass(frozen=True)
class PrimeAbove2:
    ideal: IdealLattice
    second_generator: RingElement
    residue_modulus: Gf2Poly
    ramification: int

    @property
    def ring(self) -> NumberRing:
        return self.ideal.ring

    @property
    def residue_degree(self) -> int:
        return int(self.residue_modulus.degree)

    @property
    def generators(self) -> Tuple[RingElement, RingElement]:
        return self.ring.from_int(2), self.second_generator

    @cached_property
    def residue_field(self) -> FqField:
        return FqField(self.residue_modulus)

    @cached_property
    def square(self) -> IdealLattice:
        return self.ideal * self.ideal

    def contains(self, x: RingElement) -> bool:
        return self.ideal.contains(x)

    def reduce(self, x: RingElement) -> FqElement:
        """Residue map B -> GF(2)[x]/(ḡ), θ -> x."""
        return self.residue_field(Gf2Poly.from_coeffs(x.coords))

    def lift(self, z: FqElement) -> RingElement:
        """Lift with coordinates in {0, 1}."""
        bits = z.value.coeffs()
        return self.ring.element(bits + [0] * (self.ring.n - len(bits)))

    def __str__(self) -> str:
        return f"(2, {self.second_generator})"


def _dense(coeffs: Sequence[int]) -> list:
    return [ZZ(int(c)) for c in reversed(list(coeffs))]


def dedekind_maximal_at_2(ring: NumberRing) -> bool:
    """Dedekind's criterion for Z[θ] at the prime 2."""
    f = ring.min_poly
    f_bar = Gf2Poly.from_coeffs(f)
    radical = Gf2Poly.one()
    for factor, _ in gf2_factor(f_bar):
        radical = radical * factor
    cofactor = f_bar // radical

    lifted_product = dup_mul(_dense(radical.coeffs()), _dense(cofactor.coeffs()), ZZ)
    t = dup_exquo_ground(dup_sub(lifted_product, _dense(f), ZZ), ZZ(2), ZZ)
    t_bar = Gf2Poly.from_coeffs([int(c) for c in reversed(t)])

    common = gf2_gcd(gf2_gcd(t_bar, radical), cofactor)
    maximal = common == Gf2Poly.one()
    logger.debug(
        "Dedekind criterion at 2",
        extra={"ring": repr(ring), "radical": str(radical), "t_bar": str(t_bar), "maximal": maximal},
    )
    return maximal


@lru_cache(maxsize=None)
def primes_above_2(ring: NumberRing) -> Tuple[PrimeAbove2, ...]:
    if not dedekind_maximal_at_2(ring):
        logger.warning("Rejected order that is not maximal at 2", extra={"ring": repr(ring)})
        raise NonMaximalOrderError(
            f"order not maximal at 2: Z[θ] with minimal polynomial {list(ring.min_poly)} fails Dedekind's criterion"
        )
    two = ring.from_int(2)
    primes = []
    for factor, multiplicity in gf2_factor(Gf2Poly.from_coeffs(ring.min_poly)):
        beta = ring.evaluate(factor.coeffs())
        primes.append(PrimeAbove2(ideal_from_elems([two, beta]), beta, factor, multiplicity))
    logger.debug("Split 2B", extra={"ring": repr(ring), "primes": [str(p) for p in primes]})
    return tuple(primes)


@lru_cache(maxsize=None)
def prime_inverse(prime: PrimeAbove2) -> FractionalIdeal:
    """P^-1 = (1/2)·{x in B : x·β in 2B}, since 2 is already in P."""
    ring = prime.ring
    n = ring.n
    field = FF(2)
    images = [(ring.element(ring.power(j)) * prime.second_generator).coords for j in range(n)]
    matrix = DomainMatrix(
        [[field(images[j][i] % 2) for j in range(n)] for i in range(n)], (n, n), field
    )
    kernel = matrix.nullspace().to_Matrix().tolist()
    generators = [[int(v) % 2 for v in row] for row in kernel]
    generators += [[2 if i == j else 0 for i in range(n)] for j in range(n)]
    return FractionalIdeal.make(hnf_reduce(ring, generators), 2)
