"""Sparse polynomials in X, Y over B = Z[θ] or over a residue field GF(2^k)."""
import logging
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from app.models.base import AlgebraError, FieldMismatchError, RingMismatchError
from app.models.gf2_poly import FqElement, FqField, embedding
from app.models.ideal_lattice import PrimeAbove2
from app.models.number_ring import NumberRing, RingElement

logger = logging.getLogger(__name__)

Coefficient = Union[RingElement, FqElement]
Domain = Union[NumberRing, FqField]
Monomial = Tuple[int, int]


class Variable(str, Enum):
    X = "X"
    Y = "Y"


class BivarPoly:
    """Σ c_ij X^i Y^j with no stored zero coefficients."""

    __slots__ = ("_domain", "_terms")

    def __init__(self, domain: Domain, terms: Optional[Mapping[Monomial, Coefficient]] = None):
        self._domain = domain
        cleaned: Dict[Monomial, Coefficient] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise AlgebraError(f"negative exponent in monomial {(i, j)}")
            c = self._coerce_coefficient(c)
            if not c.is_zero():
                cleaned[(int(i), int(j))] = c
        self._terms = cleaned

    def _coerce_coefficient(self, c) -> Coefficient:
        if isinstance(c, int):
            return self._domain.from_int(c)
        if isinstance(self._domain, NumberRing):
            if not isinstance(c, RingElement) or c.ring != self._domain:
                raise RingMismatchError(f"coefficient {c} is not in {self._domain!r}")
        elif not isinstance(c, FqElement) or c.field != self._domain:
            raise FieldMismatchError(f"coefficient {c} is not in {self._domain}")
        return c

    @classmethod
    def constant(cls, domain: Domain, c) -> "BivarPoly":
        return cls(domain, {(0, 0): c})

    @classmethod
    def variable(cls, domain: Domain, var: Variable) -> "BivarPoly":
        return cls(domain, {(1, 0) if var == Variable.X else (0, 1): 1})

    @classmethod
    def x(cls, domain: Domain) -> "BivarPoly":
        return cls.variable(domain, Variable.X)

    @classmethod
    def y(cls, domain: Domain) -> "BivarPoly":
        return cls.variable(domain, Variable.Y)

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def kind(self) -> str:
        return "ring" if isinstance(self._domain, NumberRing) else "field"

    @property
    def terms(self) -> Dict[Monomial, Coefficient]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Coefficient]]:
        return sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def coefficient(self, i: int, j: int) -> Coefficient:
        return self._terms.get((i, j), self._domain.from_int(0))

    def coefficients(self) -> List[Coefficient]:
        return [c for _, c in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def _lift(self, other) -> Optional["BivarPoly"]:
        if isinstance(other, BivarPoly):
            if other._domain != self._domain:
                raise FieldMismatchError(f"{self._domain} and {other._domain} differ")
            return other
        if isinstance(other, (int, RingElement, FqElement)) and not isinstance(other, bool):
            return BivarPoly.constant(self._domain, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return BivarPoly(self._domain, terms)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(self._domain, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: Dict[Monomial, Coefficient] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                product = c1 * c2
                terms[m] = terms[m] + product if m in terms else product
        return BivarPoly(self._domain, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivarPoly":
        if exponent < 0:
            raise AlgebraError("negative powers of polynomials are not defined")
        result = BivarPoly.constant(self._domain, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._domain == other._domain and self._terms == other._terms

    __hash__ = None

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient], domain: Domain) -> "BivarPoly":
        return BivarPoly(domain, {m: fn(c) for m, c in self._terms.items()})

    def exact_div(self, k: int) -> "BivarPoly":
        return BivarPoly(self._domain, {m: c.exact_div(k) for m, c in self._terms.items()})

    def substitute(self, x_value: "BivarPoly", y_value: "BivarPoly") -> "BivarPoly":
        """p(x_value, y_value)."""
        result = BivarPoly(self._domain)
        for (i, j), c in self._terms.items():
            result = result + (x_value ** i) * (y_value ** j) * c
        return result

    def to_triples(self) -> List[Tuple[int, int, Coefficient]]:
        return [(i, j, c) for (i, j), c in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            mono = "*".join(
                p for p in (
                    "" if i == 0 else "X" if i == 1 else f"X^{i}",
                    "" if j == 0 else "Y" if j == 1 else f"Y^{j}",
                ) if p
            )
            text = str(c)
            compound = " " in text
            if not mono:
                parts.append(f"({text})" if compound and parts else text)
            elif text == "1":
                parts.append(mono)
            elif text == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"({text})*{mono}" if compound else f"{text}*{mono}")
        rendered = parts[0]
        for part in parts[1:]:
            rendered += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return rendered

    def __repr__(self) -> str:
        return f"BivarPoly({self})"


def poly_eval(p: BivarPoly, x: FqElement, y: FqElement) -> FqElement:
    """Value at (x, y); coefficients are pushed into the field of x and y when it is an extension."""
    if not isinstance(p.domain, FqField):
        raise FieldMismatchError("evaluation needs residue-field coefficients")
    if x.field != y.field:
        raise FieldMismatchError(f"point coordinates lie in {x.field} and {y.field}")
    target = x.field
    lift = (lambda c: c) if target == p.domain else embedding(p.domain, target)
    total = target.zero()
    for (i, j), c in p.terms.items():
        total = total + lift(c) * (x ** i) * (y ** j)
    return total


def poly_derivative(p: BivarPoly, variable: Variable) -> BivarPoly:
    terms: Dict[Monomial, Coefficient] = {}
    for (i, j), c in p.terms.items():
        if variable == Variable.X and i > 0:
            terms[(i - 1, j)] = c * i
        elif variable == Variable.Y and j > 0:
            terms[(i, j - 1)] = c * j
    return BivarPoly(p.domain, terms)


def poly_reduce_mod_P(p: BivarPoly, prime: PrimeAbove2) -> BivarPoly:
    if p.kind != "ring":
        raise FieldMismatchError("only polynomials over B can be reduced modulo a prime")
    return p.map_coefficients(prime.reduce, prime.residue_field)
