import logging
from typing import Optional

from app.celery_app import celery_app
from app.services.reproduction_service import ReproductionService

logger = logging.getLogger(__name__)


@celery_app.task(bind=True, name="app.tasks.corpus_tasks.run_corpus_case")
def run_corpus_case(self, case_id: str, prime: Optional[int] = None) -> dict:
    logger.info("Running corpus case", extra={"case_id": case_id, "task_id": self.request.id})
    try:
        return ReproductionService().run(case_id, prime).model_dump()
    except Exception:
        logger.exception("Corpus case raised", extra={"case_id": case_id})
        raise
