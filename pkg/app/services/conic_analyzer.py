import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from app.models.base import AlgebraError, RingMismatchError
from app.models.bivar_poly import BivarPoly
from app.models.gf2_poly import fq_sqrt
from app.models.ideal_lattice import PrimeAbove2, prime_inverse, primes_above_2
from app.models.number_ring import NumberRing, RingElement

logger = logging.getLogger(__name__)


class NotInGammaError(AlgebraError):
    pass


class FpCase(str, Enum):
    A_NOT_IN_P = "a∉P"
    A_IN_P = "a∈P"


@dataclass(frozen=True)
class ConicInput:
    ring: NumberRing
    a: RingElement
    b: RingElement
    c: RingElement

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if getattr(self, name).ring != self.ring:
                raise RingMismatchError(f"coefficient {name} does not belong to {self.ring!r}")

    @classmethod
    def from_coords(cls, ring: NumberRing, a, b, c) -> "ConicInput":
        return cls(ring, ring.element(a), ring.element(b), ring.element(c))

    @property
    def quadratic_form(self) -> BivarPoly:
        return BivarPoly(self.ring, {(2, 0): self.a, (1, 1): self.b, (0, 2): self.c})

    @property
    def g(self) -> BivarPoly:
        return self.quadratic_form - 1

    def __str__(self) -> str:
        return f"a = {self.a}, b = {self.b}, c = {self.c}"


@dataclass(frozen=True)
class Cor8Condition:
    name: str
    element: RingElement
    in_p2: bool
    required_in_p2: bool

    @property
    def holds(self) -> bool:
        return self.in_p2 == self.required_in_p2


@dataclass
class PrimeReport:
    prime: PrimeAbove2
    d: RingElement
    e: RingElement
    case: FpCase
    f_p: BivarPoly
    conditions: List[Cor8Condition]
    regular_at_p: bool
    h_factor_generators: List[BivarPoly]


@dataclass
class SingularLocus:
    non_regular: List[PrimeReport]
    h_generators: List[BivarPoly]
    unit_ideal: bool


@dataclass
class AnalysisReport:
    conic: ConicInput
    smooth: bool
    gamma: List[PrimeReport]
    regular: bool
    singular_locus: SingularLocus = field(repr=False)

    @property
    def singular_locus_empty(self) -> bool:
        return self.regular


class ConicAnalyzer:
    """Smoothness, the set Γ, F_P, regularity and the singular locus of A = B[X,Y]/(g)."""

    def __init__(self, ring: NumberRing):
        self.ring = ring
        self.primes = primes_above_2(ring)

    def _check(self, conic: ConicInput) -> None:
        if conic.ring != self.ring:
            raise RingMismatchError(f"analyzer for {self.ring!r} cannot handle {conic.ring!r}")

    def compute_gamma(self, conic: ConicInput) -> List[PrimeAbove2]:
        """Primes above 2 with b in P and (a, c) not inside P."""
        self._check(conic)
        return [
            p for p in self.primes
            if p.contains(conic.b) and not (p.contains(conic.a) and p.contains(conic.c))
        ]

    def is_smooth(self, conic: ConicInput) -> bool:
        # a, c in rad((2, b)B) iff every prime above 2 containing b contains a and c
        return not self.compute_gamma(conic)

    def compute_de(self, prime: PrimeAbove2, a: RingElement, c: RingElement) -> Tuple[RingElement, RingElement]:
        d = prime.lift(fq_sqrt(prime.reduce(a)))
        e = prime.lift(fq_sqrt(prime.reduce(c)))
        return d, e

    def compute_fp(
        self, prime: PrimeAbove2, conic: ConicInput, d: RingElement, e: RingElement
    ) -> BivarPoly:
        a, b, c = conic.a, conic.b, conic.c
        if not prime.contains(a):
            return BivarPoly(self.ring, {
                (0, 2): a * e * e - b * d * e + c * d * d,
                (0, 1): 2 * a * e - b * d,
                (0, 0): a - d * d,
            })
        if prime.contains(c):
            raise NotInGammaError(f"a and c both lie in {prime}, so F_P is undefined")
        return BivarPoly(self.ring, {
            (2, 0): a * e * e,
            (1, 0): -(b * e),
            (0, 0): c - e * e,
        })

    def h_factor_generators(self, prime: PrimeAbove2, f_p: BivarPoly) -> List[BivarPoly]:
        """Generators of (P, F_P·P^-1): a Z-basis of P, then F_P·t for t in a Z-basis of P^-1."""
        generators = [BivarPoly.constant(self.ring, x) for x in prime.ideal.basis_elements()]
        for t, denominator in prime_inverse(prime).basis_elements():
            generators.append((f_p * t).exact_div(denominator))
        return generators

    def cor8_check(
        self,
        prime: PrimeAbove2,
        conic: ConicInput,
        d: Optional[RingElement] = None,
        e: Optional[RingElement] = None,
    ) -> PrimeReport:
        self._check(conic)
        if not prime.contains(conic.b):
            raise NotInGammaError(f"b does not lie in {prime}")
        if d is None or e is None:
            default_d, default_e = self.compute_de(prime, conic.a, conic.c)
            d = default_d if d is None else d
            e = default_e if e is None else e

        a, b, c = conic.a, conic.b, conic.c
        if not prime.contains(a):
            case = FpCase.A_NOT_IN_P
            tests = [
                ("b - 2de in P^2", b - 2 * d * e, True),
                ("cd^2 - ae^2 in P^2", c * d * d - a * e * e, True),
                ("a - d^2 not in P^2", a - d * d, False),
            ]
        else:
            case = FpCase.A_IN_P
            tests = [
                ("a in P^2", a, True),
                ("b in P^2", b, True),
                ("c - e^2 not in P^2", c - e * e, False),
            ]
        conditions = [
            Cor8Condition(name, element, prime.square.contains(element), required)
            for name, element, required in tests
        ]
        regular_at_p = all(cond.holds for cond in conditions)
        f_p = self.compute_fp(prime, conic, d, e)

        logger.debug(
            "Checked prime in gamma",
            extra={"prime": str(prime), "case": case.value, "d": str(d), "e": str(e), "regular_at_P": regular_at_p},
        )
        return PrimeReport(
            prime=prime,
            d=d,
            e=e,
            case=case,
            f_p=f_p,
            conditions=conditions,
            regular_at_p=regular_at_p,
            h_factor_generators=self.h_factor_generators(prime, f_p),
        )

    def is_regular(self, conic: ConicInput) -> bool:
        return all(self.cor8_check(p, conic).regular_at_p for p in self.compute_gamma(conic))

    def singular_locus(self, conic: ConicInput) -> SingularLocus:
        return self._singular_locus([self.cor8_check(p, conic) for p in self.compute_gamma(conic)])

    def _singular_locus(self, reports: List[PrimeReport]) -> SingularLocus:
        # H is the generator-wise product of the factors (P, F_P·P^-1) over Γ
        h_generators = [BivarPoly.constant(self.ring, 1)]
        for report in reports:
            h_generators = [u * v for u in h_generators for v in report.h_factor_generators]
        non_regular = [r for r in reports if not r.regular_at_p]
        return SingularLocus(non_regular=non_regular, h_generators=h_generators, unit_ideal=not non_regular)

    def analyze(self, conic: ConicInput) -> AnalysisReport:
        reports = [self.cor8_check(p, conic) for p in self.compute_gamma(conic)]
        locus = self._singular_locus(reports)
        report = AnalysisReport(
            conic=conic,
            smooth=not reports,
            gamma=reports,
            regular=locus.unit_ideal,
            singular_locus=locus,
        )
        logger.info(
            "Analysis finished",
            extra={"ring": repr(self.ring), "conic": str(conic), "smooth": report.smooth, "regular": report.regular},
        )
        return report

    def identity_residual(
        self, prime: PrimeAbove2, conic: ConicInput, d: RingElement, e: RingElement
    ) -> BivarPoly:
        """Difference of the two sides of the Z_P decomposition of d^2·g (or e^2·g); zero when correct."""
        a, b, c = conic.a, conic.b, conic.c
        x, y = BivarPoly.x(self.ring), BivarPoly.y(self.ring)
        f_p = self.compute_fp(prime, conic, d, e)
        if not prime.contains(a):
            z = d * x + e * y + 1
            rhs = a * z ** 2 - 2 * a * z * (e * y + 1) + b * d * y * z + f_p
            return d * d * conic.g - rhs
        z = e * y + 1
        rhs = c * z ** 2 - 2 * c * z + b * e * x * z + f_p
        return e * e * conic.g - rhs
