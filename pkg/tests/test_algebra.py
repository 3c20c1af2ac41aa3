import pytest
from hypothesis import given, settings, strategies as st

from ncgrade.algebra import (
    DOWNUP_DENOMINATOR,
    algebra_F,
    algebra_H,
    downup,
    free_algebra,
    hilbert_matches_closed_form,
    is_invertible_substitution,
    left_subword_check,
    linear_images,
    linearly_independent,
    normal_basis,
    oracle_dims,
    pattern_basis_F,
    relation_image,
    series_expand,
    substituted_dims,
)
from ncgrade.core import NcPoly

H_N = [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36]
PAIRS = [(0, 1), (0, -1), (2, -1), (-2, -1), (1, 1), (0, 5)]
ALL = [downup(a, b) for a, b in PAIRS] + [algebra_F(), algebra_H()]


def test_builtin_relations():
    D = downup(0, 1)
    ab = D.alphabet
    assert set(D.relations) == {NcPoly.from_terms(ab, [(1, "uud"), (-1, "duu")]),
                                NcPoly.from_terms(ab, [(1, "udd"), (-1, "ddu")])}
    F = algebra_F()
    assert set(F.relations) == {NcPoly.from_terms(F.alphabet, [(1, "xxx"), (-1, "yxy")]),
                                NcPoly.from_terms(F.alphabet, [(1, "yyy"), (-1, "xyx")])}


def test_beta_zero_rejected():
    with pytest.raises(ValueError):
        downup(0, 0)
    with pytest.raises(ValueError):
        downup(3, "0/7")


def test_series_expansion():
    assert series_expand([1], DOWNUP_DENOMINATOR, 10) == H_N
    assert series_expand([1], [1, -1], 4) == [1] * 5
    assert hilbert_matches_closed_form([1, 1, 1, 1], [1], [1, -1], 3)
    assert not hilbert_matches_closed_form([1, 1, 2, 1], [1], [1, -1], 3)


@pytest.mark.parametrize("p", ALL, ids=lambda p: p.label)
def test_hilbert_series_both_routes(p):
    assert normal_basis(p, None, 10).dims() == H_N
    assert oracle_dims(p, 10) == H_N


@pytest.mark.parametrize("p", ALL, ids=lambda p: p.label)
def test_naive_and_incremental_oracles_agree(p):
    assert oracle_dims(p, 5, method="naive") == oracle_dims(p, 5) == H_N[:6]


def test_free_algebra_dims():
    assert oracle_dims(free_algebra(["a", "b"]), 3) == [1, 2, 4, 8]
    assert normal_basis(free_algebra(["a", "b"]), None, 3).dims() == [1, 2, 4, 8]


def test_degree_zero_row_is_unit():
    for p in ALL:
        assert normal_basis(p, None, 0).rows[0] == ((),)


def test_alpha_zero_basis_shape():
    D = downup(0, 1)
    ab = D.alphabet
    basis = normal_basis(D, None, 10)
    for n in range(11):
        expected = {ab.word("u" * i + "du" * j + "d" * k)
                    for i in range(n + 1) for j in range(n // 2 + 1) for k in range(n + 1)
                    if i + 2 * j + k == n}
        assert set(basis.rows[n]) == expected
    assert ab.word("uud") in basis.rows[3] and ab.word("duu") not in basis.rows[3]


def test_pattern_basis_matches_normal_words():
    F = algebra_F()
    pattern = pattern_basis_F(10)
    normal = normal_basis(F, None, 10)
    assert pattern.dims() == H_N
    for n in range(11):
        assert set(pattern.rows[n]) == set(normal.rows[n])
    assert set(pattern.rows[2]) == {F.alphabet.word(w) for w in ("xx", "xy", "yx", "yy")}


@pytest.mark.parametrize("s,N", [(1, 4), (1, 8), (2, 8)])
def test_left_subword_property(s, N):
    res = left_subword_check(s, N)
    assert res.ok and not res.violations and res.checked > 0


def test_linear_independence_in_H():
    H = algebra_H()
    ab = H.alphabet
    for n in range(1, 5):
        assert linearly_independent([NcPoly.from_terms(ab, [(1, "xy" * n)]),
                                     NcPoly.from_terms(ab, [(1, "yx" * n)])], H)
    for n in range(0, 5):
        assert linearly_independent([NcPoly.from_terms(ab, [(1, "y" + "xy" * n)]),
                                     NcPoly.from_terms(ab, [(1, "x" + "yx" * n)])], H)
    p = NcPoly.from_terms(ab, [(1, "xyx"), (2, "yyx")])
    assert not linearly_independent([p, 2 * p], H)
    # y^4 = x^4 in F
    F = algebra_F()
    fx = NcPoly.from_terms(F.alphabet, [(1, "yyyy")])
    gx = NcPoly.from_terms(F.alphabet, [(1, "xxxx")])
    assert not linearly_independent([fx, gx], F)


def test_relation_images():
    F, D = algebra_F(), downup(0, -1)
    sub = linear_images(D.alphabet, {"x": [(1, "u"), (1, "d")], "y": [(1, "u"), (-1, "d")]})
    assert all(not r for r in relation_image(F, sub, D))
    ident = linear_images(F.alphabet, {"x": [(1, "x")], "y": [(1, "y")]})
    assert all(not r for r in relation_image(F, ident, F))
    H, D2 = algebra_H(), downup(-2, -1)
    sub = linear_images(H.alphabet, {"u": [(1, "x"), (-1, "y")], "d": [(1, "x"), (1, "y")]})
    assert all(not r for r in relation_image(D2, sub, H))
    # a non-isomorphism leaves nonzero residues
    wrong = linear_images(D2.alphabet, {"x": [(1, "u")], "y": [(1, "d")]})
    assert any(relation_image(F, wrong, D2))


def test_relation_image_requires_invertible_map():
    F, D = algebra_F(), downup(0, -1)
    sub = linear_images(D.alphabet, {"x": [(1, "u")], "y": [(2, "u")]})
    assert not is_invertible_substitution(sub, F.alphabet, D.alphabet)
    with pytest.raises(ValueError):
        relation_image(F, sub, D)


small = st.integers(-3, 3)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ALL), small, small, small, small)
def test_invertible_substitution_preserves_dims(p, a, b, c, d):
    if a * d - b * c == 0:
        a, b, c, d = 1, b, 0, 1
    assert substituted_dims(p, [[a, b], [c, d]], 6) == H_N[:7]


def test_singular_substitution_rejected():
    with pytest.raises(ValueError):
        substituted_dims(algebra_F(), [[1, 1], [1, 1]], 4)
