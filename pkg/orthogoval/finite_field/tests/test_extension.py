import galois
import numpy as np
import pytest

import orthogoval as og


def test_extension_of_gf2():
    ext = og.cubic_extension(og.ff_make(2, 1))
    assert ext.modulus == (1, 1, 0, 1)
    assert ext.order == 8
    y_plus_one = ext.from_digits([1, 1, 0])
    assert not ext.in_base(y_plus_one)


def test_extension_of_gf3():
    ext = og.cubic_extension(og.ff_make(3, 1))
    assert ext.modulus == (1, 2, 0, 1)


@pytest.mark.parametrize("q, modulus", [(2, [1, 0, 1, 1]), (3, [1, 0, 2, 1])])
def test_multiplication_matches_galois(q, modulus):
    ext = og.cubic_extension(og.ff_make(q, 1))
    GF = galois.GF(q**3, irreducible_poly=galois.Poly(modulus, field=galois.GF(q)))
    xs = ext.elements
    for a in range(ext.order):
        expected = (GF(a) * GF(xs)).view(np.ndarray)
        assert np.array_equal(ext.mul(a, xs), expected)


def test_relative_extension_matches_polynomial_product():
    base = og.ff_make(2, 2)
    ext = og.cubic_extension(base)
    GF = base.galois_field
    g = galois.Poly(ext.modulus[::-1], field=GF)

    def poly(x):
        return galois.Poly(ext.digits(x)[::-1].tolist(), field=GF)

    for a in range(0, ext.order, 5):
        for b in range(1, ext.order, 7):
            r = (poly(a) * poly(b)) % g
            digits = [int(c) for c in r.coeffs[::-1]]
            digits += [0] * (3 - len(digits))
            assert ext.mul(a, b) == ext.from_digits(digits)


def test_base_field_fixed_by_frobenius():
    ext = og.cubic_extension(og.ff_make(2, 2))
    base = np.arange(4)
    assert np.array_equal(ext.frobenius(ext.embed(base)), base)


def test_frobenius_order_three():
    ext = og.cubic_extension(og.ff_make(3, 1))
    xs = ext.elements
    once = ext.frobenius(xs)
    assert not np.array_equal(once, xs)
    assert np.array_equal(ext.frobenius(ext.frobenius(once)), xs)
    assert np.array_equal(once, ext.pow(xs, 3))


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1), (2, 3), (5, 1)])
def test_norm_and_inverse(p, n):
    ext = og.cubic_extension(og.ff_make(p, n))
    xs = ext.elements[1:]
    assert np.all(ext.in_base(ext.norm(xs)))
    assert np.all(ext.mul(xs, ext.inv(xs)) == 1)
    with pytest.raises(og.FieldError):
        ext.inv(0)


def test_inverse3():
    ext = og.cubic_extension(og.ff_make(2, 2))
    rng = np.random.default_rng(7)
    identity = np.eye(3, dtype=np.int64)
    checked = 0
    while checked < 20:
        m = rng.integers(0, ext.order, size=(3, 3))
        if ext.det3(m) == 0:
            continue
        inv = ext.inverse3(m)
        product = np.stack([ext.matvec(m, inv[:, j]) for j in range(3)], axis=1)
        assert np.array_equal(product, identity)
        checked += 1


def test_singular_matrix():
    ext = og.cubic_extension(og.ff_make(2, 1))
    m = np.array([[1, 2, 3], [1, 2, 3], [4, 5, 6]])
    assert ext.det3(m) == 0
    with pytest.raises(og.FieldError):
        ext.inverse3(m)
