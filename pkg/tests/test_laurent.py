import pytest
from hypothesis import given

from verlinde import ALPHA, CoefficientOverflowError, LaurentPoly, laurent_add, laurent_mul, weyl_involution
from verlinde.laurent import INT64_MAX, from_json, is_weyl_symmetric, to_json, to_text

from _strategies import laurent_polys

A = ALPHA
A_INV = LaurentPoly({-1: 1})


def L(**kw):
    return LaurentPoly(kw)


def test_add_examples():
    assert laurent_add(A, A_INV) == LaurentPoly({1: 1, -1: 1})
    assert laurent_add(A, -A) == LaurentPoly.zero()
    assert laurent_add(A, -A).terms == {}
    assert laurent_add(2 + A, 3 - A) == LaurentPoly({0: 5})


def test_mul_examples():
    assert laurent_mul(A, A_INV) == LaurentPoly.one()
    assert laurent_mul(A + A_INV, A + A_INV) == LaurentPoly({2: 1, 0: 2, -2: 1})
    p = LaurentPoly({-3: 4, 0: -1, 5: 2})
    assert laurent_mul(p, LaurentPoly.one()) == p


def test_weyl_examples():
    assert weyl_involution(A) == A_INV
    assert weyl_involution(A + A_INV) == A + A_INV
    assert weyl_involution(LaurentPoly({2: 3, -1: -1})) == LaurentPoly({-2: 3, 1: -1})


def test_canonical_form_drops_zeros():
    p = LaurentPoly([(3, 1), (3, -1), (0, 0), (-2, 7)])
    assert dict(p.terms) == {-2: 7}
    assert list(LaurentPoly({5: 1, -5: 1, 0: 1}).terms) == [-5, 0, 5]


def test_equality_is_structural():
    assert LaurentPoly({1: 2, -1: 3}) == LaurentPoly([(-1, 3), (1, 2)])
    assert hash(LaurentPoly({1: 2, -1: 3})) == hash(LaurentPoly([(-1, 3), (1, 2)]))
    assert LaurentPoly({1: 2}) != LaurentPoly({1: 3})


def test_overflow_is_an_error():
    big = LaurentPoly({0: INT64_MAX})
    with pytest.raises(CoefficientOverflowError):
        laurent_add(big, LaurentPoly.one())
    with pytest.raises(CoefficientOverflowError):
        laurent_mul(big, LaurentPoly({0: 2}))
    with pytest.raises(CoefficientOverflowError):
        LaurentPoly({0: 2**64})


def test_dense_product_guards_overflow():
    # many terms trigger the numpy path; the bound check must route to exact ints
    p = LaurentPoly({e: 2**40 for e in range(40)})
    with pytest.raises(CoefficientOverflowError):
        laurent_mul(p, p)


def test_dense_and_sparse_products_agree():
    p = LaurentPoly({e: (e * 7) % 11 - 5 for e in range(-30, 30)})
    q = LaurentPoly({e: (e * 3) % 7 - 3 for e in range(-20, 25)})
    expected: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            expected[e1 + e2] = expected.get(e1 + e2, 0) + c1 * c2
    assert laurent_mul(p, q) == LaurentPoly(expected)


def test_negative_power_of_monomial():
    assert A ** -3 == LaurentPoly({-3: 1})
    assert (-A) ** -2 == LaurentPoly({-2: 1})
    with pytest.raises(ValueError):
        (A + 1) ** -1


def test_text_and_json_rendering():
    p = LaurentPoly({2: 3, -1: -1, 0: 2})
    assert to_text(p) == "-1*a^-1 + 2*a^0 + 3*a^2"
    assert to_text(LaurentPoly.zero()) == "0"
    assert to_json(p) == [[-1, -1], [0, 2], [2, 3]]
    assert from_json(to_json(p)) == p


@given(laurent_polys, laurent_polys)
def test_commutativity(p, q):
    assert laurent_add(p, q) == laurent_add(q, p)
    assert laurent_mul(p, q) == laurent_mul(q, p)


@given(laurent_polys, laurent_polys, laurent_polys)
def test_associativity(p, q, r):
    assert laurent_add(laurent_add(p, q), r) == laurent_add(p, laurent_add(q, r))
    assert laurent_mul(laurent_mul(p, q), r) == laurent_mul(p, laurent_mul(q, r))


@given(laurent_polys, laurent_polys, laurent_polys)
def test_distributivity(p, q, r):
    assert laurent_mul(p, laurent_add(q, r)) == laurent_add(laurent_mul(p, q), laurent_mul(p, r))


@given(laurent_polys, laurent_polys)
def test_weyl_is_ring_homomorphism(p, q):
    w = weyl_involution
    assert w(laurent_mul(p, q)) == laurent_mul(w(p), w(q))
    assert w(laurent_add(p, q)) == laurent_add(w(p), w(q))


@given(laurent_polys)
def test_weyl_is_involution(p):
    assert weyl_involution(weyl_involution(p)) == p
    assert is_weyl_symmetric(laurent_add(p, weyl_involution(p)))
