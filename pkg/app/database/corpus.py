"""Compiled-in reproduction corpus: published verdicts and the residue-class rules behind the sweeps."""
import logging
from typing import Callable, Dict, List

from app.models.ideal_lattice import IdealLattice, ideal_from_elems
from app.models.number_ring import NumberRing, RingElement
from app.schemas.corpus import CaseKind, CorpusCase, Expected
from app.schemas.job import JobConfig

logger = logging.getLogger(__name__)

RING_Z = [0, 1]
RING_SQRT_MINUS5 = [5, 0, 1]
RING_SQRT_MINUS7 = [2, -1, 1]
RING_DEGREE4 = [1, 0, -4, 0, 1]
RING_NOT_MAXIMAL = [3, 0, 1]

CORPUS_RINGS = [RING_Z, RING_SQRT_MINUS5, RING_SQRT_MINUS7, RING_DEGREE4]

EXAMPLE14_PRIMES = [2, 3, 5, 7, 11, 13]

SweepRule = Callable[[NumberRing, RingElement, RingElement, RingElement], Expected]


class CaseNotFound(LookupError):
    pass


def _job(min_poly: List[int], a: List[int], b: List[int], c: List[int]) -> JobConfig:
    return JobConfig(min_poly=min_poly, a=a, b=b, c=c)


def _divisible(ideal: IdealLattice, *elems: RingElement) -> bool:
    return all(ideal.contains(x) for x in elems)


def _z_smooth(ring, a, b, c) -> Expected:
    a0, b0, c0 = a.coords[0], b.coords[0], c.coords[0]
    return Expected(smooth=b0 % 2 == 1 or (a0 % 2, b0 % 2, c0 % 2) == (0, 0, 0))


def _z_mod4(ring, a, b, c) -> Expected:
    smooth = _z_smooth(ring, a, b, c).smooth
    residues = (a.coords[0] % 4, b.coords[0] % 4, c.coords[0] % 4)
    regular_not_smooth = residues in {(3, 2, 3), (0, 0, 3), (3, 0, 0)}
    return Expected(smooth=smooth, regular=smooth or regular_not_smooth)


def _sqrt_minus7_smooth(ring, a, b, c) -> Expected:
    theta = ring.theta()
    p, p_bar = ideal_from_elems([theta]), ideal_from_elems([1 - theta])
    two = ideal_from_elems([ring.from_int(2)])
    cases = (
        not p.contains(b) and not p_bar.contains(b),
        not p.contains(b) and _divisible(p_bar, a, b, c),
        not p_bar.contains(b) and _divisible(p, a, b, c),
        _divisible(two, a, b, c),
    )
    return Expected(smooth=any(cases))


def _degree4_smooth(ring, a, b, c) -> Expected:
    p = ideal_from_elems([1 + ring.theta()])
    return Expected(smooth=not p.contains(b) or _divisible(p, a, b, c))


def _sqrt_minus5(ring, a, b, c) -> Expected:
    theta = ring.theta()
    p = ideal_from_elems([ring.from_int(2), 1 + theta])
    two = ideal_from_elems([ring.from_int(2)])
    smooth = not p.contains(b) or _divisible(p, a, b, c)
    regular_not_smooth = (
        _divisible(two, a - theta, b, c - theta)
        or _divisible(two, a, b, c - theta)
        or _divisible(two, a - theta, b, c)
    )
    return Expected(smooth=smooth, regular=smooth or regular_not_smooth)


SWEEP_RULES: Dict[str, SweepRule] = {
    "roberts-smooth": _z_smooth,
    "roberts-mod4": _z_mod4,
    "sqrt7-smooth": _sqrt_minus7_smooth,
    "degree4-smooth": _degree4_smooth,
    "z-sqrt-minus5": _sqrt_minus5,
}


CASES: List[CorpusCase] = [
    CorpusCase(
        id="cor2-b-odd", kind=CaseKind.SINGLE, provenance="smooth over Z when b is odd",
        job=_job(RING_Z, [1], [1], [1]), expected=Expected(smooth=True, regular=True),
    ),
    CorpusCase(
        id="cor2-all-even", kind=CaseKind.SINGLE, provenance="smooth over Z when a, b, c are all even",
        job=_job(RING_Z, [2], [2], [2]), expected=Expected(smooth=True, regular=True),
    ),
    CorpusCase(
        id="cor9-case1", kind=CaseKind.SINGLE, provenance="regular, not smooth: a≡3, b≡2, c≡3 mod 4",
        job=_job(RING_Z, [3], [2], [3]), expected=Expected(smooth=False, regular=True),
    ),
    CorpusCase(
        id="cor9-case2", kind=CaseKind.SINGLE, provenance="regular, not smooth: a≡0, b≡0, c≡3 mod 4",
        job=_job(RING_Z, [0], [0], [3]), expected=Expected(smooth=False, regular=True),
    ),
    CorpusCase(
        id="cor9-case3", kind=CaseKind.SINGLE, provenance="regular, not smooth: a≡3, b≡0, c≡0 mod 4",
        job=_job(RING_Z, [3], [0], [0]), expected=Expected(smooth=False, regular=True),
    ),
    CorpusCase(
        id="sqrt-minus5-case1", kind=CaseKind.SINGLE,
        provenance="Z[√-5]: a-√-5, b, c-√-5 divisible by 2 gives regular, not smooth",
        job=_job(RING_SQRT_MINUS5, [0, 1], [0, 0], [0, 1]), expected=Expected(smooth=False, regular=True),
    ),
    CorpusCase(
        id="roberts-smooth", kind=CaseKind.SMOOTH_SWEEP, provenance="Z: smooth iff b odd or a, b, c all even",
        rings=[RING_Z], residue_bound=4,
    ),
    CorpusCase(
        id="roberts-mod4", kind=CaseKind.REGULAR_SWEEP,
        provenance="Z: regular and not smooth exactly on (3,2,3), (0,0,3), (3,0,0) mod 4",
        rings=[RING_Z], residue_bound=4,
    ),
    CorpusCase(
        id="sqrt7-smooth", kind=CaseKind.SMOOTH_SWEEP,
        provenance="Z[(1+√-7)/2]: the four smoothness cases over θ and its conjugate",
        rings=[RING_SQRT_MINUS7],
    ),
    CorpusCase(
        id="degree4-smooth", kind=CaseKind.SMOOTH_SWEEP,
        provenance="Z[(√2+√6)/2]: smooth iff 1+θ does not divide b or divides a, b, c",
        rings=[RING_DEGREE4],
    ),
    CorpusCase(
        id="z-sqrt-minus5", kind=CaseKind.REGULAR_SWEEP,
        provenance="Z[√-5]: smoothness via P = (2, 1+√-5) and the three regular-not-smooth cases mod 2",
        rings=[RING_SQRT_MINUS5],
    ),
    CorpusCase(
        id="example13", kind=CaseKind.EXAMPLE13,
        provenance="(1-θ)X^2 + θXY + (1-θ)Y^2 - 1 over Z[(1+√-7)/2] is regular, not smooth",
        job=_job(RING_SQRT_MINUS7, [1, -1], [0, 1], [1, -1]), expected=Expected(smooth=False, regular=True),
    ),
    CorpusCase(
        id="degree4-ramification", kind=CaseKind.RAMIFICATION,
        provenance="2B = (1+θ)^4·B for θ = (√2+√6)/2",
        rings=[RING_DEGREE4],
    ),
    CorpusCase(
        id="ideal-invariants", kind=CaseKind.IDEAL_INVARIANTS,
        provenance="P·P^-1 = B and the product of P^e is 2B in every corpus ring",
        rings=CORPUS_RINGS,
    ),
    CorpusCase(
        id="example14", kind=CaseKind.EXAMPLE14,
        provenance="(p+1)X^p + p^2·Y^p - 1 is regular but not smooth over Z for every prime p",
        primes=EXAMPLE14_PRIMES,
    ),
    CorpusCase(
        id="non-maximal", kind=CaseKind.NON_MAXIMAL,
        provenance="Z[√-3] fails Dedekind's criterion at 2 and must be rejected",
        rings=[RING_NOT_MAXIMAL],
    ),
    CorpusCase(
        id="oracle-agreement", kind=CaseKind.ORACLE_AGREEMENT,
        provenance="point-search oracles agree with the closed-form verdicts on random inputs",
        rings=CORPUS_RINGS,
    ),
]


class CorpusRepository:

    _by_id: Dict[str, CorpusCase] = {case.id: case for case in CASES}

    @staticmethod
    def list_cases() -> List[CorpusCase]:
        return list(CASES)

    @staticmethod
    def case_ids() -> List[str]:
        return [case.id for case in CASES]

    @classmethod
    def get_case(cls, case_id: str) -> CorpusCase:
        case = cls._by_id.get(case_id)
        if case is None:
            logger.warning("Unknown corpus case", extra={"case_id": case_id})
            raise CaseNotFound(case_id)
        return case

    @staticmethod
    def sweep_rule(case_id: str) -> SweepRule:
        try:
            return SWEEP_RULES[case_id]
        except KeyError as e:
            raise CaseNotFound(case_id) from e
