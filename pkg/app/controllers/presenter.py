from typing import List

from app.models.bivar_poly import BivarPoly
from app.models.ideal_lattice import PrimeAbove2
from app.models.number_ring import RingElement
from app.schemas.corpus import CaseResult
from app.schemas.report import (
    AnalysisReportOut,
    Cor8Out,
    PrimeOut,
    PrimeReportOut,
    SingularLocusOut,
)
from app.services.conic_analyzer import AnalysisReport, PrimeReport, SingularLocus
from app.utils.int_codec import IntCodec


def encode_elem(x: RingElement) -> list:
    return [IntCodec.encode(c) for c in x.coords]


def encode_poly(p: BivarPoly) -> list:
    return [[i, j, encode_elem(c)] for i, j, c in p.to_triples()]


def prime_out(prime: PrimeAbove2) -> PrimeOut:
    return PrimeOut(
        gens=[encode_elem(g) for g in prime.generators],
        residue_degree=prime.residue_degree,
        ramification=prime.ramification,
    )


def prime_report_out(entry: PrimeReport) -> PrimeReportOut:
    return PrimeReportOut(
        prime=prime_out(entry.prime),
        d=encode_elem(entry.d),
        e=encode_elem(entry.e),
        case=entry.case.value,
        F_P=encode_poly(entry.f_p),
        cor8=[Cor8Out(name=c.name, element=encode_elem(c.element), in_P2=c.in_p2) for c in entry.conditions],
        regular_at_P=entry.regular_at_p,
        H_factor=[encode_poly(h) for h in entry.h_factor_generators],
    )


def locus_out(locus: SingularLocus) -> SingularLocusOut:
    return SingularLocusOut(
        unit_ideal=locus.unit_ideal,
        H=[] if locus.unit_ideal else [encode_poly(h) for h in locus.h_generators],
    )


def report_out(report: AnalysisReport) -> AnalysisReportOut:
    return AnalysisReportOut(
        smooth=report.smooth,
        regular=report.regular,
        singular_locus_empty=report.singular_locus_empty,
        gamma=[prime_report_out(entry) for entry in report.gamma],
        singular_locus=locus_out(report.singular_locus),
    )


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def render_prime(entry: PrimeReport) -> List[str]:
    lines = [
        f"  P = {entry.prime}  (residue degree {entry.prime.residue_degree}, ramification {entry.prime.ramification})",
        f"    d = {entry.d}, e = {entry.e}, case {entry.case.value}",
        f"    F_P = {entry.f_p}",
    ]
    for cond in entry.conditions:
        lines.append(
            f"    [{'ok' if cond.holds else 'FAIL'}] {cond.name}: {cond.element} in P^2 -> {_yes_no(cond.in_p2)}"
        )
    lines.append(f"    regular at P: {_yes_no(entry.regular_at_p)}")
    return lines


def render_locus(locus: SingularLocus) -> List[str]:
    if locus.unit_ideal:
        return ["singular locus: empty (H = A)"]
    lines = [f"singular locus: V(H), non-regular above {', '.join(str(r.prime) for r in locus.non_regular)}"]
    lines.extend(f"  h = {h}" for h in locus.h_generators)
    return lines


def render_report(report: AnalysisReport) -> str:
    lines = [
        f"ring: {report.conic.ring}",
        f"conic: {report.conic.g} = 0",
        f"smooth: {_yes_no(report.smooth)}",
        f"regular: {_yes_no(report.regular)}",
    ]
    if report.gamma:
        lines.append("gamma:")
        for entry in report.gamma:
            lines.extend(render_prime(entry))
    else:
        lines.append("gamma: empty")
    lines.extend(render_locus(report.singular_locus))
    return "\n".join(lines)


def render_table(results: List[CaseResult]) -> str:
    width = max([len(r.id) for r in results] + [4])
    lines = [f"{'case'.ljust(width)}  result  checked"]
    for r in results:
        lines.append(f"{r.id.ljust(width)}  {'PASS' if r.passed else 'FAIL':6}  {r.checked}")
        lines.extend(f"{' ' * width}    - {f}" for f in r.failures[:10])
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} cases passed")
    return "\n".join(lines)
