from app.database.corpus import CaseNotFound, CorpusRepository

__all__ = [
    "CaseNotFound",
    "CorpusRepository",
]
