"""Polynomials over GF(2) and the residue fields GF(2^k) built from them.

A polynomial is stored as a nonnegative integer whose bit i is the
coefficient of x^i, so addition is XOR and multiplication is carry-less.
Factorization and irreducibility are delegated to sympy's galoistools.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from app.core.config import settings
from app.models.base import AlgebraError, DegreeCapError, FieldMismatchError

logger = logging.getLogger(__name__)

ZERO_DEGREE = float("-inf")


class NotIrreducibleError(AlgebraError):
    pass


@dataclass(frozen=True)
class Gf2Poly:
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise AlgebraError(f"negative bit pattern {self.bits}")
        if self.bits.bit_length() - 1 > settings.GF2_DEGREE_CAP:
            raise DegreeCapError(
                f"GF(2) polynomial of degree {self.bits.bit_length() - 1} exceeds cap {settings.GF2_DEGREE_CAP}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "Gf2Poly":
        """Reduce integer coefficients (constant term first) modulo 2."""
        bits = 0
        for i, c in enumerate(coeffs):
            if int(c) % 2:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def zero(cls) -> "Gf2Poly":
        return cls(0)

    @classmethod
    def one(cls) -> "Gf2Poly":
        return cls(1)

    @classmethod
    def x(cls) -> "Gf2Poly":
        return cls(2)

    @property
    def degree(self) -> Union[int, float]:
        return self.bits.bit_length() - 1 if self.bits else ZERO_DEGREE

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeffs(self) -> List[int]:
        return [(self.bits >> i) & 1 for i in range(self.bits.bit_length())]

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return gf2_mul(self, other)

    def __divmod__(self, other: "Gf2Poly") -> Tuple["Gf2Poly", "Gf2Poly"]:
        return gf2_divmod(self, other)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return gf2_divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return gf2_divmod(self, other)[1]

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2_mul(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_clmul(p.bits, q.bits))


def gf2_divmod(p: Gf2Poly, q: Gf2Poly) -> Tuple[Gf2Poly, Gf2Poly]:
    quotient, remainder = _divmod(p.bits, q.bits)
    return Gf2Poly(quotient), Gf2Poly(remainder)


def gf2_gcd(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    a, b = p.bits, q.bits
    while b:
        a, b = b, _divmod(a, b)[1]
    return Gf2Poly(a)


def _to_dense(p: Gf2Poly) -> list:
    # galoistools wants the leading coefficient first
    return [ZZ((p.bits >> i) & 1) for i in range(int(p.degree), -1, -1)]


def _from_dense(f: Sequence) -> Gf2Poly:
    bits = 0
    for c in f:
        bits = (bits << 1) | (int(c) % 2)
    return Gf2Poly(bits)


def gf2_factor(p: Gf2Poly) -> List[Tuple[Gf2Poly, int]]:
    """Irreducible factors with multiplicities, sorted by (degree, bit value)."""
    if p.is_zero() or p.degree < 1:
        raise AlgebraError(f"cannot factor {p}: degree must be at least 1")
    _, factors = gf_factor(_to_dense(p), 2, ZZ)
    result = [(_from_dense(f), int(k)) for f, k in factors]
    result.sort(key=lambda fk: (fk[0].degree, fk[0].bits))
    return result


def is_irreducible(p: Gf2Poly) -> bool:
    if p.is_zero() or p.degree < 1:
        return False
    return bool(gf_irreducible_p(_to_dense(p), 2, ZZ))


@lru_cache(maxsize=None)
def smallest_irreducible(degree: int) -> Gf2Poly:
    """The irreducible polynomial of the given degree with the smallest bit value."""
    if degree < 1:
        raise AlgebraError(f"no irreducible polynomial of degree {degree}")
    for bits in range(1 << degree, 1 << (degree + 1)):
        candidate = Gf2Poly(bits)
        if is_irreducible(candidate):
            return candidate
    raise AlgebraError(f"no irreducible polynomial of degree {degree}")


@dataclass(frozen=True)
class FqField:
    """GF(2)[x]/(modulus) for an irreducible modulus of degree k."""

    modulus: Gf2Poly

    def __post_init__(self):
        if not is_irreducible(self.modulus):
            raise NotIrreducibleError(f"{self.modulus} is not irreducible over GF(2)")

    @property
    def k(self) -> int:
        return int(self.modulus.degree)

    @property
    def order(self) -> int:
        return 1 << self.k

    def __call__(self, value: Union[int, Gf2Poly]) -> "FqElement":
        poly = value if isinstance(value, Gf2Poly) else Gf2Poly(value)
        return FqElement(self, poly % self.modulus)

    def zero(self) -> "FqElement":
        return FqElement(self, Gf2Poly.zero())

    def one(self) -> "FqElement":
        return FqElement(self, Gf2Poly.one())

    def gen(self) -> "FqElement":
        return self(Gf2Poly.x())

    def from_int(self, value: int) -> "FqElement":
        return self.one() if value % 2 else self.zero()

    def elements(self) -> Iterator["FqElement"]:
        for bits in range(self.order):
            yield FqElement(self, Gf2Poly(bits))

    def evaluate(self, poly: Gf2Poly, at: "FqElement") -> "FqElement":
        if at.field != self:
            raise FieldMismatchError(f"cannot evaluate at an element of {at.field} inside {self}")
        result = self.zero()
        for c in reversed(poly.coeffs()):
            result = result * at
            if c:
                result = result + self.one()
        return result

    def __str__(self) -> str:
        return f"GF(2^{self.k})"


@dataclass(frozen=True)
class FqElement:
    field: FqField
    value: Gf2Poly

    def __post_init__(self):
        if self.value.degree >= self.field.k:
            raise AlgebraError(f"representative {self.value} is not reduced modulo {self.field.modulus}")

    def _coerce(self, other):
        if isinstance(other, int):
            return self.field.from_int(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} and {other.field} differ")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FqElement(self.field, self.value + other.value)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "FqElement":
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FqElement(self.field, (self.value * other.value) % self.field.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FqElement":
        if exponent < 0:
            return fq_inv(self) ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * fq_inv(other)

    def __bool__(self) -> bool:
        return not self.value.is_zero()

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __str__(self) -> str:
        return str(self.value)


def fq_sqrt(x: FqElement) -> FqElement:
    """Inverse Frobenius: x^(2^(k-1))."""
    result = x
    for _ in range(x.field.k - 1):
        result = result * result
    return result


def fq_inv(x: FqElement) -> FqElement:
    if x.is_zero():
        raise ZeroDivisionError(f"zero has no inverse in {x.field}")
    return x ** (x.field.order - 2)


@dataclass(frozen=True)
class FieldEmbedding:
    source: FqField
    target: FqField
    image_of_generator: FqElement

    def __call__(self, z: FqElement) -> FqElement:
        if z.field != self.source:
            raise FieldMismatchError(f"{z} does not belong to {self.source}")
        return self.target.evaluate(z.value, self.image_of_generator)


@lru_cache(maxsize=None)
def embedding(source: FqField, target: FqField) -> FieldEmbedding:
    """Send the class of x to the first root of source.modulus in target."""
    if target.k % source.k:
        raise FieldMismatchError(f"{source} does not embed into {target}")
    for candidate in target.elements():
        if target.evaluate(source.modulus, candidate).is_zero():
            return FieldEmbedding(source, target, candidate)
    raise FieldMismatchError(f"{source.modulus} has no root in {target}")


@lru_cache(maxsize=None)
def extension(base: FqField, m: int) -> FqField:
    if m < 1:
        raise AlgebraError(f"extension degree must be positive, got {m}")
    if m == 1:
        return base
    return FqField(smallest_irreducible(base.k * m))
