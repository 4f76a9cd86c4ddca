import pytest

from app.database.corpus import CASES, CaseNotFound, CorpusRepository
from app.schemas.corpus import CaseKind
from app.services.reproduction_service import ReproductionService
from app.tasks.corpus_tasks import run_corpus_case

FAST_CASES = [case.id for case in CASES if case.kind != CaseKind.ORACLE_AGREEMENT]


def test_ids_are_unique():
    ids = CorpusRepository.case_ids()
    assert len(ids) == len(set(ids))


def test_expected_identifiers_present():
    ids = set(CorpusRepository.case_ids())
    for required in (
        "roberts-smooth", "roberts-mod4", "sqrt7-smooth", "degree4-smooth", "degree4-ramification",
        "z-sqrt-minus5", "example13", "example14", "non-maximal", "oracle-agreement",
    ):
        assert required in ids


def test_unknown_case():
    with pytest.raises(CaseNotFound):
        CorpusRepository.get_case("no-such-case")


@pytest.mark.parametrize("case_id", FAST_CASES)
def test_case_passes(case_id):
    result = ReproductionService().run(case_id)
    assert result.passed, result.failures[:5]
    assert result.checked > 0


@pytest.mark.parametrize("case_id, checked", [("roberts-mod4", 64), ("roberts-smooth", 64), ("z-sqrt-minus5", 64)])
def test_sweep_sizes(case_id, checked):
    assert ReproductionService().run(case_id).checked == checked


def test_example14_single_prime():
    result = ReproductionService().run("example14", prime=7)
    assert result.passed and result.checked == 1


def test_oracle_agreement_case():
    result = ReproductionService().run("oracle-agreement")
    assert result.passed, result.failures[:5]
    assert result.checked == 4 * 200


def test_corpus_task_runs_eagerly():
    payload = run_corpus_case.delay("cor9-case1").get()
    assert payload["id"] == "cor9-case1"
    assert payload["passed"] is True
