import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.models.base import DegreeCapError
from app.models.gf2_poly import (
    ZERO_DEGREE,
    FqField,
    Gf2Poly,
    NotIrreducibleError,
    embedding,
    extension,
    fq_inv,
    fq_sqrt,
    gf2_factor,
    gf2_mul,
    is_irreducible,
    smallest_irreducible,
)

X = Gf2Poly.x()
ONE = Gf2Poly.one()
GF2 = FqField(Gf2Poly(0b11))
GF4 = FqField(Gf2Poly(0b111))  # x^2 + x + 1
GF8 = FqField(Gf2Poly(0b1011))  # x^3 + x + 1
GF256 = FqField(smallest_irreducible(8))

small_polys = st.integers(min_value=0, max_value=(1 << 12) - 1).map(Gf2Poly)
gf8_elements = st.integers(min_value=0, max_value=7).map(GF8)
gf256_elements = st.integers(min_value=0, max_value=255).map(GF256)


def test_mul_examples():
    assert gf2_mul(X + ONE, X + ONE) == Gf2Poly(0b101)
    assert gf2_mul(X, Gf2Poly.zero()).is_zero()
    assert gf2_mul(Gf2Poly(0b111), X + ONE) == Gf2Poly(0b1001)


def test_zero_degree_sentinel():
    assert Gf2Poly.zero().degree == ZERO_DEGREE
    assert Gf2Poly.zero().degree < 0
    assert ONE.degree == 0


def test_from_coeffs_reduces_mod_2():
    assert Gf2Poly.from_coeffs([5, 0, 1]) == Gf2Poly(0b101)
    assert Gf2Poly.from_coeffs([2, -1, 1]) == Gf2Poly(0b110)


@pytest.mark.parametrize(
    "poly, expected",
    [
        (Gf2Poly(0b101), [(Gf2Poly(0b11), 2)]),
        (Gf2Poly(0b110), [(Gf2Poly(0b10), 1), (Gf2Poly(0b11), 1)]),
        (Gf2Poly(0b10001), [(Gf2Poly(0b11), 4)]),
    ],
)
def test_factor_examples(poly, expected):
    assert gf2_factor(poly) == expected


@given(small_polys)
def test_factor_product_is_input(p):
    if p.degree < 1:
        return
    product = ONE
    for factor, k in gf2_factor(p):
        assert is_irreducible(factor)
        for _ in range(k):
            product = product * factor
    assert product == p


@given(small_polys, small_polys)
def test_mul_degree_is_additive(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@given(small_polys, small_polys.filter(lambda q: not q.is_zero()))
def test_divmod_reconstructs(p, q):
    quotient, remainder = divmod(p, q)
    assert quotient * q + remainder == p
    assert remainder.degree < q.degree


def test_degree_cap():
    with pytest.raises(DegreeCapError):
        Gf2Poly(1 << 100)


def test_field_requires_irreducible_modulus():
    with pytest.raises(NotIrreducibleError):
        FqField(Gf2Poly(0b101))


def test_field_elements_reduced():
    assert GF8(0b1000) == GF8(0b011)
    assert len(list(GF8.elements())) == 8


@given(gf8_elements)
def test_sqrt_is_inverse_frobenius(z):
    root = fq_sqrt(z)
    assert root * root == z


@given(gf8_elements.filter(lambda z: not z.is_zero()))
def test_inverse(z):
    assert z * fq_inv(z) == GF8.one()


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        fq_inv(GF8.zero())


def test_characteristic_two():
    z = GF8.gen()
    assert z + z == GF8.zero()
    assert -z == z


def test_embedding_is_homomorphism():
    gf2 = FqField(Gf2Poly(0b11))
    gf4 = extension(gf2, 2)
    assert gf4.k == 2
    phi = embedding(gf2, gf4)
    for u in gf2.elements():
        for v in gf2.elements():
            assert phi(u * v) == phi(u) * phi(v)
            assert phi(u + v) == phi(u) + phi(v)


def test_extension_of_degree_one_is_identity():
    assert extension(GF8, 1) is GF8
    assert extension(GF8, 2).k == 6


def test_factor_every_small_polynomial():
    # all polynomials of degree 1 through 8
    for bits in range(2, 1 << 9):
        p = Gf2Poly(bits)
        product = ONE
        for factor, k in gf2_factor(p):
            assert is_irreducible(factor)
            for _ in range(k):
                product = product * factor
        assert product == p


def test_sqrt_and_inv_small_fields():
    assert fq_sqrt(GF2.zero()) == GF2.zero()
    assert fq_sqrt(GF2.one()) == GF2.one()
    assert fq_inv(GF2.one()) == GF2.one()

    x_bar = GF4.gen()
    assert fq_sqrt(x_bar) == x_bar + GF4.one()
    assert fq_inv(x_bar) == x_bar + GF4.one()


@pytest.mark.parametrize("k", range(1, 9))
def test_sqrt_of_square_every_element(k):
    field = FqField(smallest_irreducible(k))
    for z in field.elements():
        assert fq_sqrt(z * z) == z
        root = fq_sqrt(z)
        assert root * root == z


@pytest.mark.parametrize("k", range(1, 5))
def test_sqrt_is_multiplicative_every_pair(k):
    field = FqField(smallest_irreducible(k))
    for u in field.elements():
        for v in field.elements():
            assert fq_sqrt(u * v) == fq_sqrt(u) * fq_sqrt(v)


@given(gf256_elements, gf256_elements)
def test_sqrt_is_multiplicative_gf256(u, v):
    assert fq_sqrt(u * v) == fq_sqrt(u) * fq_sqrt(v)
