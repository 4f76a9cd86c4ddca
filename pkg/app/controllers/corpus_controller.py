import logging
from typing import Any, Dict, Optional

from app.controllers.conic_controller import EXIT_INPUT_ERROR, EXIT_MISMATCH, EXIT_OK
from app.controllers.presenter import render_table
from app.database.corpus import CaseNotFound, CorpusRepository
from app.models.base import AlgebraError
from app.schemas.corpus import CaseResult
from app.schemas.report import Example14Out
from app.services.oracle import Example14Verifier
from app.services.reproduction_service import ReproductionService
from app.tasks.corpus_tasks import run_corpus_case

logger = logging.getLogger(__name__)


class CorpusController:

    @staticmethod
    def reproduce(case_id: str, prime: Optional[int] = None, parallel: bool = False) -> Dict[str, Any]:
        try:
            cases = CorpusRepository.list_cases() if case_id == "all" else [CorpusRepository.get_case(case_id)]
            ids = [case.id for case in cases]
            if parallel:
                pending = [run_corpus_case.delay(cid, prime) for cid in ids]
                results = [CaseResult.model_validate(job.get()) for job in pending]
            else:
                results = ReproductionService().run_many(ids, prime)

            all_passed = all(r.passed for r in results)
            logger.info(
                "Reproduction finished",
                extra={"case_id": case_id, "cases": len(results), "passed": all_passed},
            )
            return {"exit_code": EXIT_OK if all_passed else EXIT_MISMATCH, "body": render_table(results)}

        except CaseNotFound:
            known = ", ".join(CorpusRepository.case_ids())
            return {"exit_code": EXIT_INPUT_ERROR, "body": f"error: unknown case '{case_id}'; known: all, {known}"}
        except AlgebraError as e:
            logger.warning("Rejected reproduction input", extra={"case_id": case_id, "error": str(e)})
            return {"exit_code": EXIT_INPUT_ERROR, "body": f"error: {e}"}
        except Exception:
            logger.exception("Unexpected error in reproduce", extra={"case_id": case_id})
            raise

    @staticmethod
    def example14(prime: int) -> Dict[str, Any]:
        try:
            result = Example14Verifier().verify(prime)
            out = Example14Out(
                p=result.p,
                not_smooth=result.not_smooth,
                regular=result.regular,
                identity_ok=result.identity_ok,
                passed=result.passed,
            )
            return {"exit_code": EXIT_OK if result.passed else EXIT_MISMATCH, "body": out.model_dump_json(indent=2)}
        except AlgebraError as e:
            logger.warning("Rejected prime", extra={"p": prime, "error": str(e)})
            return {"exit_code": EXIT_INPUT_ERROR, "body": f"error: {e}"}
        except Exception:
            logger.exception("Unexpected error in example14", extra={"p": prime})
            raise
