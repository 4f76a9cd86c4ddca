from typing import List, Literal, Union

from pydantic import BaseModel, Field

Coords = List[Union[int, str]]
Term = List[Union[int, str, Coords]]


class PrimeOut(BaseModel):

    gens: List[Coords] = Field(..., description="Two generators (2, β) in power-basis coordinates")
    residue_degree: int
    ramification: int


class Cor8Out(BaseModel):

    name: str
    element: Coords
    in_P2: bool


class PrimeReportOut(BaseModel):

    prime: PrimeOut
    d: Coords
    e: Coords
    case: Literal["a∉P", "a∈P"]
    F_P: List[Term] = Field(..., description="[i, j, coefficient] triples")
    cor8: List[Cor8Out]
    regular_at_P: bool
    H_factor: List[List[Term]]


class SingularLocusOut(BaseModel):

    unit_ideal: bool
    H: List[List[Term]] = Field(default_factory=list, description="Generators of H, each as [i, j, coefficient] triples")


class AnalysisReportOut(BaseModel):

    smooth: bool
    regular: bool
    singular_locus_empty: bool
    gamma: List[PrimeReportOut]
    singular_locus: SingularLocusOut


class VerdictPair(BaseModel):

    analyzer: bool
    oracle: bool


class OracleAgreementOut(BaseModel):

    degree_bound: int
    smooth: VerdictPair
    regular: VerdictPair
    agreed: bool


class Example14Out(BaseModel):

    p: int
    not_smooth: bool
    regular: bool
    identity_ok: bool
    passed: bool
