import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from app.controllers.presenter import render_locus, render_report, report_out
from app.models.base import AlgebraError
from app.schemas.job import JobConfig
from app.schemas.report import OracleAgreementOut, VerdictPair
from app.services.conic_analyzer import ConicAnalyzer
from app.services.oracle import OracleConfig, PointOracle
from app.services.reproduction_service import conic_from_job

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (AlgebraError, ValidationError, json.JSONDecodeError, OSError)


def load_job(path: str) -> JobConfig:
    return JobConfig.model_validate(json.loads(Path(path).read_text()))


def _input_error(path: str, e: Exception) -> Dict[str, Any]:
    logger.warning("Rejected input", extra={"path": path, "error": str(e)})
    return {"exit_code": EXIT_INPUT_ERROR, "body": f"error: {e}"}


class ConicController:

    @staticmethod
    def analyze(path: str, as_json: bool = False) -> Dict[str, Any]:
        try:
            conic = conic_from_job(load_job(path))
            report = ConicAnalyzer(conic.ring).analyze(conic)
            body = report_out(report).model_dump_json(indent=2) if as_json else render_report(report)
            return {"exit_code": EXIT_OK, "body": body}
        except INPUT_ERRORS as e:
            return _input_error(path, e)
        except Exception:
            logger.exception("Unexpected error in analyze", extra={"path": path})
            raise

    @staticmethod
    def smooth(path: str) -> Dict[str, Any]:
        try:
            conic = conic_from_job(load_job(path))
            verdict = ConicAnalyzer(conic.ring).is_smooth(conic)
            return {"exit_code": EXIT_OK, "body": f"smooth: {json.dumps(verdict)}"}
        except INPUT_ERRORS as e:
            return _input_error(path, e)
        except Exception:
            logger.exception("Unexpected error in smooth", extra={"path": path})
            raise

    @staticmethod
    def regular(path: str) -> Dict[str, Any]:
        try:
            conic = conic_from_job(load_job(path))
            verdict = ConicAnalyzer(conic.ring).is_regular(conic)
            return {"exit_code": EXIT_OK, "body": f"regular: {json.dumps(verdict)}"}
        except INPUT_ERRORS as e:
            return _input_error(path, e)
        except Exception:
            logger.exception("Unexpected error in regular", extra={"path": path})
            raise

    @staticmethod
    def singular_locus(path: str, as_json: bool = False) -> Dict[str, Any]:
        try:
            conic = conic_from_job(load_job(path))
            report = ConicAnalyzer(conic.ring).analyze(conic)
            out = report_out(report)
            if as_json:
                body = json.dumps(
                    {
                        "singular_locus": out.singular_locus.model_dump(),
                        "non_regular": [
                            entry.model_dump() for entry in out.gamma if not entry.regular_at_P
                        ],
                    },
                    indent=2,
                )
            else:
                body = "\n".join(render_locus(report.singular_locus))
            return {"exit_code": EXIT_OK, "body": body}
        except INPUT_ERRORS as e:
            return _input_error(path, e)
        except Exception:
            logger.exception("Unexpected error in singular_locus", extra={"path": path})
            raise

    @staticmethod
    def oracle(path: str, degree_bound: Optional[int] = None) -> Dict[str, Any]:
        try:
            job = load_job(path)
            conic = conic_from_job(job)
            bound = degree_bound or job.oracle_degree_bound
            config = OracleConfig(degree_bound=bound) if bound else OracleConfig()
            analyzer = ConicAnalyzer(conic.ring)
            oracle = PointOracle(conic.ring, config)

            smooth = VerdictPair(analyzer=analyzer.is_smooth(conic), oracle=oracle.smooth_oracle(conic))
            regular = VerdictPair(analyzer=analyzer.is_regular(conic), oracle=oracle.regular_oracle(conic))
            agreed = smooth.analyzer == smooth.oracle and regular.analyzer == regular.oracle
            out = OracleAgreementOut(
                degree_bound=config.degree_bound, smooth=smooth, regular=regular, agreed=agreed
            )
            if not agreed:
                logger.warning(
                    "Oracle disagreement",
                    extra={"path": path, "smooth": smooth.model_dump(), "regular": regular.model_dump()},
                )
            return {
                "exit_code": EXIT_OK if agreed else EXIT_MISMATCH,
                "body": out.model_dump_json(indent=2),
            }
        except INPUT_ERRORS as e:
            return _input_error(path, e)
        except Exception:
            logger.exception("Unexpected error in oracle", extra={"path": path})
            raise
