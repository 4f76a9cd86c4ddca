from app.schemas.corpus import CaseKind, CaseResult, CorpusCase, Expected
from app.schemas.job import JobConfig
from app.schemas.report import (
    AnalysisReportOut,
    Example14Out,
    OracleAgreementOut,
    PrimeReportOut,
    SingularLocusOut,
)

__all__ = [
    "CaseKind",
    "CaseResult",
    "CorpusCase",
    "Expected",
    "JobConfig",
    "AnalysisReportOut",
    "Example14Out",
    "OracleAgreementOut",
    "PrimeReportOut",
    "SingularLocusOut",
]
