"""Arithmetic in B = Z[θ] for a monic integer minimal polynomial, in the power basis."""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_zz_factor

from app.core.config import settings
from app.models.base import AlgebraError, DegreeCapError, RingMismatchError

logger = logging.getLogger(__name__)


def _integer_root(coeffs: Tuple[int, ...]) -> Optional[int]:
    if coeffs[0] == 0:
        return 0
    # linear factors of the monic polynomial; the constant term is never factored
    _, factors = dup_zz_factor([ZZ(c) for c in reversed(coeffs)], ZZ)
    roots = sorted(-int(f[1]) for f, _ in factors if len(f) == 2)
    return roots[0] if roots else None


class NumberRing:
    """Z[θ] with θ a root of min_poly (constant term first, monic).

    Irreducibility of min_poly is a precondition; only the absence of an
    integer root is checked here.
    """

    def __init__(self, min_poly: Sequence[int]):
        coeffs = tuple(int(c) for c in min_poly)
        if len(coeffs) < 2:
            raise AlgebraError("minimal polynomial must have degree at least 1")
        if coeffs[-1] != 1:
            raise AlgebraError(f"minimal polynomial must be monic, leading coefficient is {coeffs[-1]}")
        n = len(coeffs) - 1
        if n > settings.MAX_RING_DEGREE:
            raise DegreeCapError(f"ring degree {n} exceeds cap {settings.MAX_RING_DEGREE}")
        if n >= 2:
            root = _integer_root(coeffs)
            if root is not None:
                raise AlgebraError(f"minimal polynomial has the integer root {root}, so it is reducible")
        self._min_poly = coeffs
        self._n = n
        self._powers = self._power_table()
        logger.debug("Number ring built", extra={"ring": str(self), "degree": n})

    def _power_table(self) -> Tuple[Tuple[int, ...], ...]:
        # coordinates of θ^m for 0 <= m <= 2n-2
        n = self._n
        tail = [-c for c in self._min_poly[:-1]]
        powers = []
        for m in range(2 * n - 1):
            if m < n:
                v = [0] * n
                v[m] = 1
            else:
                prev = powers[-1]
                top = prev[-1]
                shifted = [0] + list(prev[:-1])
                v = [s + top * t for s, t in zip(shifted, tail)]
            powers.append(tuple(v))
        return tuple(powers)

    @property
    def n(self) -> int:
        return self._n

    @property
    def min_poly(self) -> Tuple[int, ...]:
        return self._min_poly

    def power(self, m: int) -> Tuple[int, ...]:
        return self._powers[m]

    @property
    def mul_table(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """mul_table[i][j] holds the coordinates of θ^i·θ^j."""
        return tuple(tuple(self._powers[i + j] for j in range(self._n)) for i in range(self._n))

    def element(self, coords: Sequence[int]) -> "RingElement":
        return RingElement(self, tuple(int(c) for c in coords))

    def from_int(self, value: int) -> "RingElement":
        return RingElement(self, (int(value),) + (0,) * (self._n - 1))

    def zero(self) -> "RingElement":
        return self.from_int(0)

    def one(self) -> "RingElement":
        return self.from_int(1)

    def theta(self) -> "RingElement":
        if self._n == 1:
            return self.from_int(-self._min_poly[0])
        return RingElement(self, tuple(1 if i == 1 else 0 for i in range(self._n)))

    def evaluate(self, coeffs: Sequence[int]) -> "RingElement":
        """Value at θ of the integer polynomial with the given coefficients, constant first."""
        result = self.zero()
        theta = self.theta()
        for c in reversed(list(coeffs)):
            result = result * theta + int(c)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberRing) and self._min_poly == other._min_poly

    def __hash__(self) -> int:
        return hash(self._min_poly)

    def __repr__(self) -> str:
        return f"NumberRing({list(self._min_poly)})"

    def __str__(self) -> str:
        if self._n == 1:
            return "Z"
        return f"Z[θ], {_format_poly(self._min_poly, 'θ')} = 0"


def _format_monomial(i: int, symbol: str) -> str:
    return "" if i == 0 else symbol if i == 1 else f"{symbol}^{i}"


def _format_poly(coeffs: Sequence[int], symbol: str) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = _format_monomial(i, symbol)
        magnitude = abs(c)
        body = str(magnitude) if not mono else mono if magnitude == 1 else f"{magnitude}{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RingElement:
    ring: NumberRing
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.ring.n:
            raise AlgebraError(f"expected {self.ring.n} coordinates, got {len(self.coords)}")

    def _coerce(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} and {other.ring!r} differ")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, tuple(-x for x in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.ring.n
        acc = [0] * n
        for i, xi in enumerate(self.coords):
            if not xi:
                continue
            for j, yj in enumerate(other.coords):
                if not yj:
                    continue
                t = xi * yj
                for l, c in enumerate(self.ring.power(i + j)):
                    if c:
                        acc[l] += t * c
        return RingElement(self.ring, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            raise AlgebraError("negative powers are not defined in B")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, k: int) -> "RingElement":
        if k == 0 or any(c % k for c in self.coords):
            raise AlgebraError(f"{self} is not divisible by {k} in B")
        return RingElement(self.ring, tuple(c // k for c in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return _format_poly(self.coords, "θ")


def elem_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def elem_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def elem_from_int(k: int, ring: NumberRing) -> RingElement:
    return ring.from_int(k)
