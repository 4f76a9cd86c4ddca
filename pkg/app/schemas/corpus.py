from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from app.schemas.job import JobConfig


class CaseKind(str, Enum):
    SINGLE = "single"
    SMOOTH_SWEEP = "smooth-sweep"
    REGULAR_SWEEP = "regular-sweep"
    EXAMPLE13 = "example13"
    RAMIFICATION = "ramification"
    IDEAL_INVARIANTS = "ideal-invariants"
    EXAMPLE14 = "example14"
    NON_MAXIMAL = "non-maximal"
    ORACLE_AGREEMENT = "oracle-agreement"


class Expected(BaseModel):

    smooth: bool
    regular: Optional[bool] = Field(None, description="Unset when the source only states smoothness")


class CorpusCase(BaseModel):

    id: str = Field(..., description="Identifier accepted by `reproduce`")
    kind: CaseKind
    provenance: str = Field(..., description="Where the expected verdicts come from")
    job: Optional[JobConfig] = None
    expected: Optional[Expected] = None
    rings: List[List[int]] = Field(default_factory=list, description="Minimal polynomials for sweeps and ring-level checks")
    residue_bound: int = Field(2, ge=2, description="Sweep coordinates run over range(residue_bound)")
    primes: List[int] = Field(default_factory=list)


class CaseResult(BaseModel):

    id: str
    passed: bool
    checked: int = 0
    failures: List[str] = Field(default_factory=list)
