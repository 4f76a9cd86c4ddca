import itertools
import logging
from typing import List, Optional

from app.database.corpus import CorpusRepository
from app.models.ideal_lattice import (
    IdealLattice,
    NonMaximalOrderError,
    fractional_mul,
    ideal_equal,
    ideal_from_elems,
    is_generated_by,
    prime_inverse,
    primes_above_2,
)
from app.models.number_ring import NumberRing
from app.schemas.corpus import CaseKind, CaseResult, CorpusCase
from app.schemas.job import JobConfig
from app.services.conic_analyzer import ConicAnalyzer, ConicInput
from app.services.oracle import Example14Verifier, PointOracle

logger = logging.getLogger(__name__)


def conic_from_job(job: JobConfig) -> ConicInput:
    return ConicInput.from_coords(NumberRing(job.min_poly), job.a, job.b, job.c)


class ReproductionService:

    def __init__(self, repository: Optional[CorpusRepository] = None):
        self.repo = repository or CorpusRepository()

    def run(self, case_id: str, prime: Optional[int] = None) -> CaseResult:
        case = self.repo.get_case(case_id)
        handler = {
            CaseKind.SINGLE: self._single,
            CaseKind.SMOOTH_SWEEP: self._sweep,
            CaseKind.REGULAR_SWEEP: self._sweep,
            CaseKind.EXAMPLE13: self._example13,
            CaseKind.RAMIFICATION: self._ramification,
            CaseKind.IDEAL_INVARIANTS: self._ideal_invariants,
            CaseKind.EXAMPLE14: lambda c: self._example14(c, prime),
            CaseKind.NON_MAXIMAL: self._non_maximal,
            CaseKind.ORACLE_AGREEMENT: self._oracle_agreement,
        }[case.kind]
        result = handler(case)
        if result.passed:
            logger.info("Corpus case passed", extra={"case_id": case_id, "checked": result.checked})
        else:
            logger.warning(
                "Corpus case failed", extra={"case_id": case_id, "failures": result.failures[:5]}
            )
        return result

    def run_many(self, case_ids: List[str], prime: Optional[int] = None) -> List[CaseResult]:
        return [self.run(case_id, prime) for case_id in case_ids]

    def _single(self, case: CorpusCase) -> CaseResult:
        conic = conic_from_job(case.job)
        report = ConicAnalyzer(conic.ring).analyze(conic)
        failures = []
        if report.smooth != case.expected.smooth:
            failures.append(f"smooth: expected {case.expected.smooth}, got {report.smooth}")
        if case.expected.regular is not None and report.regular != case.expected.regular:
            failures.append(f"regular: expected {case.expected.regular}, got {report.regular}")
        return CaseResult(id=case.id, passed=not failures, checked=1, failures=failures)

    def _sweep(self, case: CorpusCase) -> CaseResult:
        ring = NumberRing(case.rings[0])
        analyzer = ConicAnalyzer(ring)
        rule = self.repo.sweep_rule(case.id)
        check_regular = case.kind == CaseKind.REGULAR_SWEEP

        residues = [ring.element(v) for v in itertools.product(range(case.residue_bound), repeat=ring.n)]
        failures, checked = [], 0
        for a, b, c in itertools.product(residues, repeat=3):
            conic = ConicInput(ring, a, b, c)
            expected = rule(ring, a, b, c)
            smooth = analyzer.is_smooth(conic)
            checked += 1
            if smooth != expected.smooth:
                failures.append(f"({conic}): smooth expected {expected.smooth}, got {smooth}")
            if check_regular:
                regular = analyzer.is_regular(conic)
                if regular != expected.regular:
                    failures.append(f"({conic}): regular expected {expected.regular}, got {regular}")
        return CaseResult(id=case.id, passed=not failures, checked=checked, failures=failures)

    def _example13(self, case: CorpusCase) -> CaseResult:
        conic = conic_from_job(case.job)
        ring = conic.ring
        report = ConicAnalyzer(ring).analyze(conic)
        theta = ring.theta()
        facts = {"smooth is false": not report.smooth, "regular is true": report.regular}

        facts["gamma is {θB}"] = len(report.gamma) == 1 and ideal_equal(
            report.gamma[0].prime.ideal, ideal_from_elems([theta])
        )
        if report.gamma:
            entry = report.gamma[0]
            p2 = entry.prime.square
            a, b, c, d, e = conic.a, conic.b, conic.c, entry.d, entry.e
            facts["d = e = 1"] = d == ring.one() and e == ring.one()
            facts["b - 2de = θ - 2 = θ^2 in P^2"] = b - 2 * d * e == theta * theta and p2.contains(b - 2 * d * e)
            facts["cd^2 - ae^2 = 0"] = (c * d * d - a * e * e).is_zero()
            facts["a - d^2 = -θ not in P^2"] = a - d * d == -theta and not p2.contains(a - d * d)
        failures = [name for name, ok in facts.items() if not ok]
        return CaseResult(id=case.id, passed=not failures, checked=len(facts), failures=failures)

    def _ramification(self, case: CorpusCase) -> CaseResult:
        ring = NumberRing(case.rings[0])
        primes = primes_above_2(ring)
        one_plus_theta = 1 + ring.theta()
        two_b = ideal_from_elems([ring.from_int(2)])
        facts = {
            "single prime above 2": len(primes) == 1,
            "(1+θ)^4·B = 2B": ideal_equal(ideal_from_elems([one_plus_theta ** 4]), two_b),
        }
        if primes:
            prime = primes[0]
            facts["ramification 4"] = prime.ramification == 4
            facts["residue degree 1"] = prime.residue_degree == 1
            facts["(2, 1+θ)·B = (1+θ)·B"] = is_generated_by(prime.ideal, one_plus_theta)
        failures = [name for name, ok in facts.items() if not ok]
        return CaseResult(id=case.id, passed=not failures, checked=len(facts), failures=failures)

    def _ideal_invariants(self, case: CorpusCase) -> CaseResult:
        failures, checked = [], 0
        for min_poly in case.rings:
            ring = NumberRing(min_poly)
            primes = primes_above_2(ring)
            product = IdealLattice.unit(ring)
            for prime in primes:
                checked += 1
                if not fractional_mul(prime.ideal, prime_inverse(prime)).is_unit():
                    failures.append(f"{ring!r}: P·P^-1 != B for P = {prime}")
                product = product * prime.ideal ** prime.ramification
            checked += 1
            if not ideal_equal(product, ideal_from_elems([ring.from_int(2)])):
                failures.append(f"{ring!r}: product of P^e is not 2B")
        return CaseResult(id=case.id, passed=not failures, checked=checked, failures=failures)

    def _example14(self, case: CorpusCase, prime: Optional[int]) -> CaseResult:
        verifier = Example14Verifier()
        primes = [prime] if prime is not None else case.primes
        failures = []
        for p in primes:
            result = verifier.verify(p)
            if not result.passed:
                failures.append(
                    f"p={p}: not_smooth={result.not_smooth} regular={result.regular} identity_ok={result.identity_ok}"
                )
        return CaseResult(id=case.id, passed=not failures, checked=len(primes), failures=failures)

    def _non_maximal(self, case: CorpusCase) -> CaseResult:
        failures = []
        for min_poly in case.rings:
            try:
                primes_above_2(NumberRing(min_poly))
                failures.append(f"{min_poly} was accepted")
            except NonMaximalOrderError as e:
                if "order not maximal at 2" not in str(e):
                    failures.append(f"{min_poly} rejected with unexpected message: {e}")
        return CaseResult(id=case.id, passed=not failures, checked=len(case.rings), failures=failures)

    def _oracle_agreement(self, case: CorpusCase) -> CaseResult:
        failures, checked = [], 0
        for min_poly in case.rings:
            report = PointOracle(NumberRing(min_poly)).agreement_sweep()
            checked += report.samples
            failures.extend(
                f"{min_poly} a={d.a} b={d.b} c={d.c}: {d.check} analyzer={d.analyzer} oracle={d.oracle}"
                for d in report.disagreements
            )
        return CaseResult(id=case.id, passed=not failures, checked=checked, failures=failures)
