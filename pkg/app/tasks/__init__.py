"""
Celery tasks for running corpus cases off the CLI process
"""

from .corpus_tasks import run_corpus_case

__all__ = ["run_corpus_case"]
