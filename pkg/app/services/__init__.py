from app.services.conic_analyzer import ConicAnalyzer, ConicInput, NotInGammaError
from app.services.oracle import Example14Verifier, NotPrimeError, OracleConfig, PointOracle, SearchTooLargeError
from app.services.reproduction_service import ReproductionService

__all__ = [
    "ConicAnalyzer",
    "ConicInput",
    "NotInGammaError",
    "Example14Verifier",
    "NotPrimeError",
    "OracleConfig",
    "PointOracle",
    "SearchTooLargeError",
    "ReproductionService",
]
