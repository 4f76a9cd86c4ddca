from app.controllers.conic_controller import ConicController
from app.controllers.corpus_controller import CorpusController

__all__ = [
    "ConicController",
    "CorpusController",
]
