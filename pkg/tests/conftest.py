import json

import pytest

from app.database.corpus import RING_DEGREE4, RING_SQRT_MINUS5, RING_SQRT_MINUS7, RING_Z
from app.models.number_ring import NumberRing
from app.services.conic_analyzer import ConicInput


@pytest.fixture
def ring_z() -> NumberRing:
    return NumberRing(RING_Z)


@pytest.fixture
def ring_sqrt_minus5() -> NumberRing:
    return NumberRing(RING_SQRT_MINUS5)


@pytest.fixture
def ring_sqrt_minus7() -> NumberRing:
    return NumberRing(RING_SQRT_MINUS7)


@pytest.fixture
def ring_degree4() -> NumberRing:
    return NumberRing(RING_DEGREE4)


@pytest.fixture(params=[RING_Z, RING_SQRT_MINUS5, RING_SQRT_MINUS7, RING_DEGREE4], ids=["Z", "sqrt-5", "sqrt-7", "deg4"])
def corpus_ring(request) -> NumberRing:
    return NumberRing(request.param)


@pytest.fixture
def conic():
    def build(ring: NumberRing, a, b, c) -> ConicInput:
        wrap = lambda v: [v] if isinstance(v, int) else v
        return ConicInput.from_coords(ring, wrap(a), wrap(b), wrap(c))

    return build


@pytest.fixture
def job_file(tmp_path):
    def write(min_poly, a, b, c, **extra) -> str:
        path = tmp_path / "job.json"
        path.write_text(json.dumps({"min_poly": min_poly, "a": a, "b": b, "c": c, **extra}))
        return str(path)

    return write
