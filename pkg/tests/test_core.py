from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncgrade.core import (
    Alphabet,
    MonomialOrder,
    NcPoly,
    as_scalar,
    compare,
    poly_add,
    poly_mul,
    poly_scale,
    substitute,
    word_degree,
    words_of_degree,
)

AB = Alphabet.from_names(["u", "d"])
XY = Alphabet.from_names(["x", "y"])
UD_ORDER = MonomialOrder.from_names(AB, ["u", "d"])
XY_ORDER = MonomialOrder.from_names(XY, ["x", "y"])

words = st.lists(st.integers(0, 1), max_size=8).map(tuple)
short_words = st.lists(st.integers(0, 1), max_size=4).map(tuple)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(st.lists(st.integers(0, 1), max_size=3).map(tuple), coeffs, max_size=4).map(
    lambda d: NcPoly(XY, d))


def _no_zero_coeffs(p: NcPoly) -> bool:
    return all(c != 0 for _, c in p.items())


# ---- scalars and words


def test_as_scalar_accepts_exact_values():
    assert as_scalar(3) == 3
    assert as_scalar("-2/6") == Fraction(-1, 3)
    assert as_scalar(Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("bad", [0.5, True, "x"])
def test_as_scalar_rejects_inexact(bad):
    with pytest.raises((TypeError, ValueError)):
        as_scalar(bad)


def test_word_degree():
    assert word_degree((), AB) == 0
    assert word_degree(AB.word("udu"), AB) == 3
    assert word_degree(AB.word("uu" + "du" * 3 + "d"), AB) == 9


def test_weighted_degree():
    ab = Alphabet.from_names(["a", "t"], [1, 2])
    assert ab.degree(ab.word("tat")) == 5
    assert [len(words_of_degree(ab, n)) for n in range(5)] == [1, 1, 2, 3, 5]


def test_words_of_degree_counts():
    assert [len(words_of_degree(XY, n)) for n in range(6)] == [1, 2, 4, 8, 16, 32]


def test_format_word_compresses_repeats():
    assert AB.format_word(AB.word("uududududd")) == "u^2(du)^3d^2"
    assert AB.format_word(()) == "1"
    assert XY.format_word(XY.word("yyy")) == "y^3"


# ---- monomial order


def test_compare_examples():
    assert compare(XY_ORDER, XY.word("yyy"), XY.word("xyx")) == 1
    assert compare(XY_ORDER, XY.word("xyx"), XY.word("xyx")) == 0
    assert compare(UD_ORDER, AB.word("duu"), AB.word("uud")) == 1
    assert compare(XY_ORDER, XY.word("yy"), XY.word("xxx")) == -1


@settings(max_examples=200)
@given(words, words, words)
def test_order_is_total_and_transitive(a, b, c):
    ab, ba = compare(XY_ORDER, a, b), compare(XY_ORDER, b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab <= 0 and compare(XY_ORDER, b, c) <= 0:
        assert compare(XY_ORDER, a, c) <= 0


@settings(max_examples=200)
@given(short_words, short_words, words, words)
def test_order_is_multiplicative(a, b, v, w):
    if compare(XY_ORDER, v, w) < 0:
        assert compare(XY_ORDER, a + v + b, a + w + b) < 0


# ---- polynomial arithmetic


def test_poly_examples():
    p = NcPoly.from_terms(XY, [(2, "xy"), ("-1/3", "yy")])
    assert not poly_add(p, poly_scale(-1, p))
    x, y = NcPoly.from_terms(XY, [(1, "x")]), NcPoly.from_terms(XY, [(1, "y")])
    assert poly_mul(x, y) == NcPoly.from_terms(XY, [(1, "xy")])
    s = NcPoly.from_terms(AB, [(1, "u"), (1, "d")])
    cube = s * s * s
    assert len(cube) == 8 and all(c == 1 for _, c in cube.items())
    assert cube.is_homogeneous() and cube.degree() == 3


def test_inhomogeneous_degree_raises():
    p = NcPoly.from_terms(XY, [(1, "x"), (1, "xy")])
    assert not p.is_homogeneous()
    with pytest.raises(ValueError):
        p.degree()


def test_mixed_alphabets_rejected():
    with pytest.raises(ValueError):
        NcPoly.from_terms(XY, [(1, "x")]) + NcPoly.from_terms(AB, [(1, "u")])


@settings(max_examples=150)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p
    for z in (p * q, p + q, p - q, p * r - r):
        assert _no_zero_coeffs(z)


@settings(max_examples=150)
@given(polys, coeffs)
def test_scaling_keeps_support_clean(p, c):
    s = poly_scale(c, p)
    assert _no_zero_coeffs(s)
    if c == 0:
        assert not s


# ---- substitution

images_st = st.tuples(coeffs, coeffs, coeffs, coeffs).map(lambda t: {
    "x": NcPoly(AB, {(0,): t[0], (1,): t[1]}),
    "y": NcPoly(AB, {(0,): t[2], (1,): t[3]}),
})


@settings(max_examples=150)
@given(polys, polys, images_st)
def test_substitute_is_multiplicative(p, q, images):
    assert substitute(p * q, images) == substitute(p, images) * substitute(q, images)
    assert substitute(p + q, images) == substitute(p, images) + substitute(q, images)


def test_substitute_identity_and_example():
    p = NcPoly.from_terms(XY, [(1, "xxx"), (-1, "yxy")])
    ident = {"x": NcPoly.from_terms(XY, [(1, "x")]), "y": NcPoly.from_terms(XY, [(1, "y")])}
    assert substitute(p, ident) == p
    # u^2 d - 3 d u^2 under u -> x, d -> y - x
    rel = NcPoly.from_terms(AB, [(1, "uud"), (-3, "duu")])
    img = substitute(rel, {"u": NcPoly.from_terms(XY, [(1, "x")]),
                           "d": NcPoly.from_terms(XY, [(1, "y"), (-1, "x")])})
    assert img == NcPoly.from_terms(XY, [(1, "xxy"), (-3, "yxx"), (2, "xxx")])


def test_substitute_rejects_wrong_degree():
    p = NcPoly.from_terms(XY, [(1, "xy")])
    with pytest.raises(ValueError):
        substitute(p, {"x": NcPoly.from_terms(XY, [(1, "xx")]), "y": NcPoly.from_terms(XY, [(1, "y")])})


def test_leading_term():
    p = NcPoly.from_terms(XY, [(1, "xyx"), (-1, "yyy")])
    assert XY_ORDER.leading(p) == (XY.word("yyy"), -1)
