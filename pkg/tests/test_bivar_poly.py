import random

import pytest

from app.models.base import FieldMismatchError, RingMismatchError
from app.models.bivar_poly import BivarPoly, Variable, poly_derivative, poly_eval, poly_reduce_mod_P
from app.models.gf2_poly import FqField, Gf2Poly, extension
from app.models.ideal_lattice import primes_above_2
from app.services.conic_analyzer import ConicAnalyzer, ConicInput

GF2 = FqField(Gf2Poly(0b11))


def _gf2_poly(terms):
    return BivarPoly(GF2, {m: GF2(c) for m, c in terms.items()})


def test_eval_examples():
    line = _gf2_poly({(1, 0): 1, (0, 1): 1, (0, 0): 1})
    assert poly_eval(line, GF2(0), GF2(1)).is_zero()
    squares = _gf2_poly({(2, 0): 1, (0, 2): 1, (0, 0): 1})
    assert poly_eval(squares, GF2(1), GF2(1)) == GF2.one()
    assert poly_eval(squares, GF2(1), GF2(0)).is_zero()


def test_eval_over_extension():
    gf4 = extension(GF2, 2)
    squares = _gf2_poly({(2, 0): 1, (0, 2): 1, (0, 0): 1})
    w = gf4.gen()
    # (w + (w + 1) + 1)^2 = 0
    assert poly_eval(squares, w, w + 1).is_zero()


def test_eval_rejects_mixed_fields():
    gf4 = extension(GF2, 2)
    p = _gf2_poly({(0, 0): 1})
    with pytest.raises(FieldMismatchError):
        poly_eval(p, GF2(1), gf4.one())


def test_eval_needs_field_coefficients(ring_z):
    with pytest.raises(FieldMismatchError):
        poly_eval(BivarPoly.x(ring_z), GF2(1), GF2(1))


def test_no_zero_coefficients(ring_z):
    p = BivarPoly(ring_z, {(1, 0): 0, (0, 1): 3})
    assert list(p.terms) == [(0, 1)]
    assert (p - p).is_zero()


def test_coefficient_ring_checked(ring_z, ring_sqrt_minus5):
    with pytest.raises(RingMismatchError):
        BivarPoly(ring_z, {(0, 0): ring_sqrt_minus5.one()})


def test_derivatives(ring_sqrt_minus5):
    a, b, c = (ring_sqrt_minus5.element(v) for v in ([1, 2], [3, -1], [0, 5]))
    f = BivarPoly(ring_sqrt_minus5, {(2, 0): a, (1, 1): b, (0, 2): c})
    x, y = BivarPoly.x(ring_sqrt_minus5), BivarPoly.y(ring_sqrt_minus5)
    assert poly_derivative(f, Variable.X) == 2 * a * x + b * y
    assert poly_derivative(BivarPoly.constant(ring_sqrt_minus5, 7), Variable.Y).is_zero()


def test_derivative_vanishes_in_characteristic_two():
    squares = _gf2_poly({(2, 0): 1, (0, 2): 1, (0, 0): 1})
    assert poly_derivative(squares, Variable.X).is_zero()
    assert poly_derivative(squares, Variable.Y).is_zero()


def test_euler_identity(corpus_ring):
    rng = random.Random(3)
    x, y = BivarPoly.x(corpus_ring), BivarPoly.y(corpus_ring)
    for _ in range(25):
        a, b, c = (corpus_ring.element([rng.randint(-9, 9) for _ in range(corpus_ring.n)]) for _ in range(3))
        f = BivarPoly(corpus_ring, {(2, 0): a, (1, 1): b, (0, 2): c})
        assert x * poly_derivative(f, Variable.X) + y * poly_derivative(f, Variable.Y) == 2 * f


def test_reduce_mod_p_over_z(ring_z, conic):
    (prime,) = primes_above_2(ring_z)
    g_bar = poly_reduce_mod_P(conic(ring_z, 1, 0, 1).g, prime)
    field = prime.residue_field
    assert g_bar == BivarPoly(field, {(2, 0): 1, (0, 2): 1, (0, 0): 1})


def test_reduce_mod_p_example13(ring_sqrt_minus7, conic):
    prime = primes_above_2(ring_sqrt_minus7)[0]
    g_bar = poly_reduce_mod_P(conic(ring_sqrt_minus7, [1, -1], [0, 1], [1, -1]).g, prime)
    assert g_bar == BivarPoly(prime.residue_field, {(2, 0): 1, (0, 2): 1, (0, 0): 1})


def test_reduce_zero(ring_z):
    (prime,) = primes_above_2(ring_z)
    assert poly_reduce_mod_P(BivarPoly(ring_z), prime).is_zero()


def test_reduced_conic_is_square_of_line(corpus_ring):
    rng = random.Random(5)
    analyzer = ConicAnalyzer(corpus_ring)
    for _ in range(40):
        a, b, c = ([rng.randint(-9, 9) for _ in range(corpus_ring.n)] for _ in range(3))
        conic_input = ConicInput.from_coords(corpus_ring, a, b, c)
        for prime in analyzer.compute_gamma(conic_input):
            d, e = analyzer.compute_de(prime, conic_input.a, conic_input.c)
            line = BivarPoly(corpus_ring, {(1, 0): d, (0, 1): e, (0, 0): 1})
            total = poly_reduce_mod_P(conic_input.g, prime) + poly_reduce_mod_P(line * line, prime)
            assert total.is_zero()


def test_eval_is_multiplicative():
    gf4 = extension(GF2, 2)
    rng = random.Random(9)
    for _ in range(30):
        p = _gf2_poly({(rng.randint(0, 3), rng.randint(0, 3)): 1, (0, 0): rng.randint(0, 1)})
        q = _gf2_poly({(rng.randint(0, 3), rng.randint(0, 3)): 1, (1, 1): 1})
        u, v = gf4(rng.randint(0, 3)), gf4(rng.randint(0, 3))
        assert poly_eval(p * q, u, v) == poly_eval(p, u, v) * poly_eval(q, u, v)


def test_substitute(ring_z):
    x, y = BivarPoly.x(ring_z), BivarPoly.y(ring_z)
    p = x * x + 3 * y
    assert p.substitute(x + 1, y) == x * x + 2 * x + 1 + 3 * y


def test_text_form(ring_z):
    x, y = BivarPoly.x(ring_z), BivarPoly.y(ring_z)
    assert str(4 * y * y + 4 * y + 2) == "4*Y^2 + 4*Y + 2"
    assert str(x * x - 1) == "X^2 - 1"
