import pytest
from pydantic import ValidationError
from sympy import primerange

from app.models.base import AlgebraError
from app.models.ideal_lattice import primes_above_2
from app.models.number_ring import NumberRing
from app.services.conic_analyzer import ConicInput
from app.services.oracle import Example14Verifier, NotPrimeError, OracleConfig, PointOracle, SearchTooLargeError

# 2 stays prime, with residue field GF(16)
INERT_DEGREE4 = [1, 1, 0, 0, 1]


def test_config_defaults_and_bounds():
    assert OracleConfig().degree_bound == 2
    assert OracleConfig(degree_bound=3).degree_bound == 3
    with pytest.raises(ValidationError):
        OracleConfig(degree_bound=0)


def test_points_cover_each_extension(ring_z):
    oracle = PointOracle(ring_z, OracleConfig(degree_bound=2))
    (prime,) = oracle.primes
    points = list(oracle.points(prime))
    assert len(points) == 4 + 16
    assert {p.field.k for p in points} == {1, 2}


@pytest.mark.parametrize("abc, smooth", [((1, 0, 1), False), ((1, 1, 1), True), ((2, 2, 2), True)])
def test_smooth_oracle_over_z(ring_z, conic, abc, smooth):
    assert PointOracle(ring_z).smooth_oracle(conic(ring_z, *abc)) is smooth


@pytest.mark.parametrize("abc, regular", [((1, 0, 1), False), ((3, 2, 3), True), ((1, 1, 1), True), ((0, 0, 3), True)])
def test_regular_oracle_over_z(ring_z, conic, abc, regular):
    assert PointOracle(ring_z).regular_oracle(conic(ring_z, *abc)) is regular


def test_regular_oracle_non_principal_prime(ring_sqrt_minus5, conic):
    oracle = PointOracle(ring_sqrt_minus5)
    case1 = conic(ring_sqrt_minus5, [0, 1], [0, 0], [0, 1])
    assert not oracle.smooth_oracle(case1)
    assert oracle.regular_oracle(case1)


def test_regular_oracle_example13(ring_sqrt_minus7, conic):
    oracle = PointOracle(ring_sqrt_minus7)
    example = conic(ring_sqrt_minus7, [1, -1], [0, 1], [1, -1])
    assert not oracle.smooth_oracle(example)
    assert oracle.regular_oracle(example)


def test_smooth_oracle_monotone_in_degree_bound(ring_sqrt_minus7, conic):
    inputs = [
        conic(ring_sqrt_minus7, [1, 0], [0, 0], [1, 0]),
        conic(ring_sqrt_minus7, [1, -1], [0, 1], [1, -1]),
        conic(ring_sqrt_minus7, [1, 0], [1, 0], [1, 0]),
    ]
    for conic_input in inputs:
        verdicts = [
            PointOracle(ring_sqrt_minus7, OracleConfig(degree_bound=m)).smooth_oracle(conic_input)
            for m in (1, 2, 3)
        ]
        assert verdicts == [verdicts[0]] * 3


def test_excluded_fiber_is_empty(corpus_ring):
    oracle = PointOracle(corpus_ring)
    for prime in oracle.primes:
        a, b = prime.generators
        excluded = ConicInput(corpus_ring, a, b, 2 * a + b)
        assert oracle.excluded_fiber_empty(excluded, prime)


def test_fiber_with_points_is_not_empty(ring_z, conic):
    (prime,) = primes_above_2(ring_z)
    assert not PointOracle(ring_z).excluded_fiber_empty(conic(ring_z, 1, 0, 1), prime)


def test_agreement_sweep(corpus_ring):
    report = PointOracle(corpus_ring).agreement_sweep(samples=200, seed=20240101)
    assert report.samples == 200
    assert report.agreed, report.disagreements[:3]


def test_agreement_sweep_small_coefficients(corpus_ring):
    report = PointOracle(corpus_ring).agreement_sweep(samples=200, seed=7, coeff_range=2)
    assert report.agreed, report.disagreements[:3]


@pytest.mark.parametrize("p", list(primerange(2, 51)))
def test_example14(p):
    result = Example14Verifier().verify(p)
    assert (result.not_smooth, result.regular, result.identity_ok) == (True, True, True)
    assert result.passed


def test_example14_polynomial():
    g = Example14Verifier().polynomial(2)
    assert str(g) == "3*X^2 + 4*Y^2 - 1"


@pytest.mark.parametrize("p", [1, 4, 9, 15])
def test_example14_rejects_non_primes(p):
    with pytest.raises(NotPrimeError):
        Example14Verifier().verify(p)


def test_example14_prime_bound():
    with pytest.raises(AlgebraError):
        Example14Verifier(max_prime=10).verify(11)


def test_search_over_large_field_refused():
    ring = NumberRing(INERT_DEGREE4)
    with pytest.raises(SearchTooLargeError):
        PointOracle(ring)
    with pytest.raises(SearchTooLargeError):
        PointOracle(ring, OracleConfig(degree_bound=1, max_field_order=8))


def test_search_within_field_cap():
    oracle = PointOracle(NumberRing(INERT_DEGREE4), OracleConfig(degree_bound=1))
    (prime,) = oracle.primes
    assert prime.residue_degree == 4
    assert len(list(oracle.points(prime))) == 16 * 16
