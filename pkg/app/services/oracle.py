import logging
import random
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Optional

from pydantic import BaseModel, Field
from sympy import isprime

from app.core.config import settings
from app.models.base import AlgebraError
from app.models.bivar_poly import BivarPoly, Variable, poly_derivative, poly_eval, poly_reduce_mod_P
from app.models.gf2_poly import FqElement, FqField, extension, fq_sqrt
from app.models.ideal_lattice import PrimeAbove2, prime_inverse, primes_above_2
from app.models.number_ring import NumberRing
from app.services.conic_analyzer import ConicAnalyzer, ConicInput

logger = logging.getLogger(__name__)


class NotPrimeError(AlgebraError):
    pass


class SearchTooLargeError(AlgebraError):
    pass


class OracleConfig(BaseModel):
    degree_bound: int = Field(
        default_factory=lambda: settings.ORACLE_DEGREE_BOUND,
        ge=1,
        description="Largest m such that points over GF(2^(k*m)) are searched",
    )
    max_field_order: int = Field(
        default_factory=lambda: settings.ORACLE_MAX_FIELD_ORDER,
        ge=2,
        description="Refuse searches over fields with more elements than this",
    )


@dataclass(frozen=True)
class RationalPoint:
    field: FqField
    x: FqElement
    y: FqElement

    def __str__(self) -> str:
        return f"({self.x}, {self.y}) over {self.field}"


@dataclass
class Disagreement:
    a: List[int]
    b: List[int]
    c: List[int]
    check: str
    analyzer: bool
    oracle: bool


@dataclass
class AgreementReport:
    ring: NumberRing
    samples: int
    seed: int
    disagreements: List[Disagreement] = field(default_factory=list)

    @property
    def agreed(self) -> bool:
        return not self.disagreements


class PointOracle:
    """Brute-force point search in the fibers of Spec A over the primes above 2."""

    def __init__(self, ring: NumberRing, config: Optional[OracleConfig] = None):
        self.ring = ring
        self.config = config or OracleConfig()
        self.primes = primes_above_2(ring)
        self._check_search_size()

    def _check_search_size(self) -> None:
        for prime in self.primes:
            order = 2 ** (prime.residue_degree * self.config.degree_bound)
            if order > self.config.max_field_order:
                logger.warning(
                    "Point search refused",
                    extra={"prime": str(prime), "field_order": order, "cap": self.config.max_field_order},
                )
                raise SearchTooLargeError(
                    f"point search over GF({order}) above {prime} exceeds the field order cap "
                    f"{self.config.max_field_order}; lower the degree bound"
                )

    def points(self, prime: PrimeAbove2) -> Iterator[RationalPoint]:
        for m in range(1, self.config.degree_bound + 1):
            target = extension(prime.residue_field, m)
            for x in target.elements():
                for y in target.elements():
                    yield RationalPoint(target, x, y)

    def _find_common_zero(self, prime: PrimeAbove2, polys: List[BivarPoly]) -> Optional[RationalPoint]:
        for point in self.points(prime):
            if all(poly_eval(p, point.x, point.y).is_zero() for p in polys):
                return point
        return None

    def smooth_oracle(self, conic: ConicInput) -> bool:
        for prime in self.primes:
            g_bar = poly_reduce_mod_P(conic.g, prime)
            system = [g_bar, poly_derivative(g_bar, Variable.X), poly_derivative(g_bar, Variable.Y)]
            witness = self._find_common_zero(prime, system)
            if witness is not None:
                logger.debug("Singular fiber point", extra={"prime": str(prime), "point": str(witness)})
                return False
        return True

    def _fp_by_substitution(self, prime: PrimeAbove2, conic: ConicInput) -> BivarPoly:
        a, b, c = conic.a, conic.b, conic.c
        x, y = BivarPoly.x(self.ring), BivarPoly.y(self.ring)
        if not prime.reduce(a).is_zero():
            # d^2·g(W/d, Y) with W = -eY - 1
            d = prime.lift(fq_sqrt(prime.reduce(a)))
            e = prime.lift(fq_sqrt(prime.reduce(c)))
            w = -(e * y) - 1
            return a * w ** 2 + b * d * w * y + c * d * d * y ** 2 - d * d
        # e^2·g(X, V/e) with V = -1
        e = prime.lift(fq_sqrt(prime.reduce(c)))
        v = BivarPoly.constant(self.ring, -1)
        return a * e * e * x ** 2 + b * e * x * v + c * v ** 2 - e * e

    def regular_oracle(self, conic: ConicInput) -> bool:
        for prime in self.primes:
            a_bar, b_bar, c_bar = (prime.reduce(t) for t in (conic.a, conic.b, conic.c))
            if not b_bar.is_zero() or (a_bar.is_zero() and c_bar.is_zero()):
                continue
            f_p = self._fp_by_substitution(prime, conic)
            system = [poly_reduce_mod_P(conic.g, prime)]
            for t, denominator in prime_inverse(prime).basis_elements():
                system.append(poly_reduce_mod_P((f_p * t).exact_div(denominator), prime))
            witness = self._find_common_zero(prime, system)
            if witness is not None:
                logger.debug("Non-regular maximal ideal", extra={"prime": str(prime), "point": str(witness)})
                return False
        return True

    def excluded_fiber_empty(self, conic: ConicInput, prime: PrimeAbove2) -> bool:
        """True when g has no zero over the residue field of prime or its searched extensions."""
        g_bar = poly_reduce_mod_P(conic.g, prime)
        return self._find_common_zero(prime, [g_bar]) is None

    def agreement_sweep(
        self,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        coeff_range: Optional[int] = None,
    ) -> AgreementReport:
        samples = settings.ORACLE_SAMPLES if samples is None else samples
        seed = settings.ORACLE_SEED if seed is None else seed
        bound = settings.ORACLE_COEFF_RANGE if coeff_range is None else coeff_range

        rng = random.Random(seed)
        analyzer = ConicAnalyzer(self.ring)
        report = AgreementReport(ring=self.ring, samples=samples, seed=seed)
        n = self.ring.n
        for _ in range(samples):
            a, b, c = ([rng.randint(-bound, bound) for _ in range(n)] for _ in range(3))
            conic = ConicInput.from_coords(self.ring, a, b, c)
            checks: Dict[str, tuple] = {
                "smooth": (analyzer.is_smooth(conic), self.smooth_oracle(conic)),
                "regular": (analyzer.is_regular(conic), self.regular_oracle(conic)),
            }
            for check, (expected, observed) in checks.items():
                if expected != observed:
                    report.disagreements.append(Disagreement(a, b, c, check, expected, observed))

        if report.disagreements:
            logger.warning(
                "Oracle disagrees with analyzer",
                extra={"ring": repr(self.ring), "disagreements": len(report.disagreements)},
            )
        else:
            logger.info("Oracle agreement sweep passed", extra={"ring": repr(self.ring), "samples": samples})
        return report


@dataclass(frozen=True)
class Example14Result:
    p: int
    not_smooth: bool
    regular: bool
    identity_ok: bool

    @property
    def passed(self) -> bool:
        return self.not_smooth and self.regular and self.identity_ok


class Example14Verifier:
    """The family (p+1)X^p + p^2·Y^p - 1 over Z: not smooth, yet regular."""

    def __init__(self, max_prime: Optional[int] = None):
        self.max_prime = settings.EXAMPLE14_MAX_PRIME if max_prime is None else max_prime
        self.ring = NumberRing([0, 1])

    def polynomial(self, p: int) -> BivarPoly:
        return BivarPoly(self.ring, {(p, 0): p + 1, (0, p): p * p, (0, 0): -1})

    @staticmethod
    def _eval_mod(poly: BivarPoly, x: int, y: int, modulus: int) -> int:
        total = 0
        for (i, j), c in poly.terms.items():
            total += c.coords[0] * pow(x, i, modulus) * pow(y, j, modulus)
        return total % modulus

    def _not_smooth(self, p: int, g: BivarPoly) -> bool:
        system = [g, poly_derivative(g, Variable.X), poly_derivative(g, Variable.Y)]
        return any(
            all(self._eval_mod(q, x, y, p) == 0 for q in system)
            for x in range(p)
            for y in range(p)
        )

    def _identity_ok(self, p: int, g: BivarPoly) -> bool:
        # the X slot carries Z = X - 1
        z, y = BivarPoly.x(self.ring), BivarPoly.y(self.ring)
        in_z = g.substitute(z + 1, y)
        expansion = z ** p
        for k in range(1, p):
            expansion = expansion + comb(p, k) * z ** (p - k)
        rhs = (p + 1) * expansion + p * (p * y ** p + 1)
        binomials_divisible = all(comb(p, k) % p == 0 for k in range(1, p))
        return (in_z - rhs).is_zero() and binomials_divisible

    def _tail_residue_is_one(self, p: int) -> bool:
        y = BivarPoly.y(self.ring)
        tail = p * y ** p + 1
        residue = {
            (i, j): c.coords[0] % p for (i, j), c in tail.terms.items() if i == 0 and c.coords[0] % p
        }
        return residue == {(0, 0): 1}

    def verify(self, p: int) -> Example14Result:
        if not isprime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p > self.max_prime:
            raise AlgebraError(f"prime {p} exceeds the verifier bound {self.max_prime}")
        g = self.polynomial(p)
        identity_ok = self._identity_ok(p, g)
        result = Example14Result(
            p=p,
            not_smooth=self._not_smooth(p, g),
            regular=identity_ok and self._tail_residue_is_one(p),
            identity_ok=identity_ok,
        )
        logger.info("Verified degree-p family", extra={"p": p, "passed": result.passed})
        return result
