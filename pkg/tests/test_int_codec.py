import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from app.schemas.job import JobConfig
from app.utils.int_codec import JSON_SAFE_INT, IntCodec


def test_encode_keeps_safe_ints():
    assert IntCodec.encode(0) == 0
    assert IntCodec.encode(-JSON_SAFE_INT) == -JSON_SAFE_INT
    assert IntCodec.encode(JSON_SAFE_INT + 1) == str(JSON_SAFE_INT + 1)


@given(st.integers())
def test_decode_inverts_encode(n):
    assert IntCodec.decode(IntCodec.encode(n)) == n


@pytest.mark.parametrize("value", [True, "1.5", "", "0x10", 2.0, None])
def test_decode_rejects(value):
    with pytest.raises(ValueError):
        IntCodec.decode(value)


def test_decode_signed_strings():
    assert IntCodec.decode(" -42 ") == -42
    assert IntCodec.decode("+7") == 7


def test_job_accepts_string_coordinates():
    job = JobConfig(min_poly=["5", 0, 1], a=[str(10 ** 30), 0], b=[0, "1"], c=[1, 0])
    assert job.min_poly == [5, 0, 1]
    assert job.a[0] == 10 ** 30


@pytest.mark.parametrize(
    "payload",
    [
        {"min_poly": [5, 0, 2], "a": [1, 0], "b": [0, 0], "c": [1, 0]},
        {"min_poly": [5, 0, 1], "a": [1, 0, 0], "b": [0, 0], "c": [1, 0]},
        {"min_poly": [1], "a": [], "b": [], "c": []},
        {"min_poly": [0, 1], "a": [1], "b": [0], "c": [1], "oracle_degree_bound": 0},
        {"min_poly": [0, 1], "a": [1], "b": [0]},
    ],
)
def test_job_rejects(payload):
    with pytest.raises(ValidationError):
        JobConfig.model_validate(payload)


def test_job_degree_cap():
    min_poly = [1] + [0] * 20 + [1]
    with pytest.raises(ValidationError):
        JobConfig(min_poly=min_poly, a=[0] * 21, b=[0] * 21, c=[0] * 21)
