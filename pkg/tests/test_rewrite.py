from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncgrade.algebra import algebra_F, algebra_H, downup
from ncgrade.core import MonomialOrder, NcPoly, words_of_degree
from ncgrade.linalg import Echelon
from ncgrade.rewrite import (
    ReductionSystem,
    ambiguity_difference,
    complete,
    find_ambiguities,
    is_confluent_up_to,
    make_rule,
    reduce,
)

F = algebra_F()
XY = F.alphabet
X_LT_Y = MonomialOrder.from_names(XY, ["x", "y"])
F_SYS = complete(F.relations, X_LT_Y, 8)
H = algebra_H()
H_SYS = complete(H.relations, H.default_order(), 8)

FIVE = {"yyy": "xyx", "yxy": "xxx", "yyxxx": "xyxxy", "yxxyx": "xxxyy", "yxxxx": "xxxxy"}


def W(s):
    return XY.word(s)


def P(*pairs):
    return NcPoly.from_terms(XY, pairs)


def test_make_rule_orients_by_leading_word():
    r = make_rule(P((1, "yyy"), (-1, "xyx")), X_LT_Y)
    assert r.lhs == W("yyy") and r.rhs == P((1, "xyx"))
    mono = make_rule(P((3, "xy")), X_LT_Y)
    assert mono.lhs == W("xy") and not mono.rhs
    D = downup(2, -1)
    ab = D.alphabet
    rule = make_rule(D.relations[0], MonomialOrder.from_names(ab, ["u", "d"]))
    assert rule.lhs == ab.word("duu")
    assert rule.rhs == NcPoly.from_terms(ab, [(-1, "uud"), (2, "udu")])


def test_make_rule_rejects_bad_relations():
    with pytest.raises(ValueError):
        make_rule(NcPoly.zero(XY), X_LT_Y)
    with pytest.raises(ValueError):
        make_rule(P((1, "x"), (1, "yy")), X_LT_Y)


def test_completion_of_F_gives_five_rules():
    assert len(F_SYS.rules) == 5
    assert {XY.format_word(r.lhs): r for r in F_SYS.rules}.keys() == \
        {XY.format_word(W(k)) for k in FIVE}
    for lhs, rhs in FIVE.items():
        rule = next(r for r in F_SYS.rules if r.lhs == W(lhs))
        assert rule.rhs == P((1, rhs))
    assert is_confluent_up_to(F_SYS, 8)
    assert F_SYS.confluence_bound == 8


def test_completion_is_deterministic_and_stable():
    again = complete(F.relations, X_LT_Y, 8)
    assert [r.format() for r in again.rules] == [r.format() for r in F_SYS.rules]
    redo = complete(F_SYS.relations(), X_LT_Y, 8)
    assert {(r.lhs, r.rhs) for r in redo.rules} == {(r.lhs, r.rhs) for r in F_SYS.rules}


def test_reduce_examples():
    assert reduce(P((1, "yxy")), F_SYS) == P((1, "xxx"))
    assert reduce(P((1, "yyyy")), F_SYS) == P((1, "xxxx"))
    w = P((1, "xyxx"))
    assert reduce(w, F_SYS) == w
    for a, b in [("yyyy", "xxxx"), ("yxyx", "xxxx"), ("xyxy", "yyyy")]:
        assert not F_SYS.reduce(P((1, a), (-1, b)))


def test_overlap_ambiguities_listed():
    two = complete(F.relations, X_LT_Y, 3)
    words = {XY.format_word(a.word) for a in find_ambiguities(two, 5)}
    assert XY.format_word(W("yyyxy")) in words
    assert XY.format_word(W("yxyyy")) in words
    amb = next(a for a in find_ambiguities(two, 5) if a.word == W("yxyyy"))
    diff = ambiguity_difference(two, amb)
    assert diff and XY.format_word(X_LT_Y.leading(diff)[0]) in {"yx^2yx", "x^3y^2"}
    assert not is_confluent_up_to(two, 5)


def test_no_self_overlap_gives_no_ambiguities():
    sys = ReductionSystem(X_LT_Y, (make_rule(P((1, "yx"), (-1, "xx")), X_LT_Y),))
    assert find_ambiguities(sys, 2) == []
    assert is_confluent_up_to(ReductionSystem(X_LT_Y), 6)


def test_downup_completion_is_two_rules():
    D = downup(0, 5)
    ab = D.alphabet
    sys = complete(D.relations, MonomialOrder.from_names(ab, ["u", "d"]), 8)
    got = {ab.format_word(r.lhs): r.rhs for r in sys.rules}
    assert got == {"du^2": NcPoly.from_terms(ab, [("1/5", "uud")]),
                   "d^2u": NcPoly.from_terms(ab, [("1/5", "udd")])}
    assert is_confluent_up_to(sys, 8)


@pytest.mark.parametrize("alpha,beta", [(0, 1), (2, -1), (-2, -1), (1, 1), (3, "1/2")])
def test_downup_rule_count_bounded(alpha, beta):
    D = downup(alpha, beta)
    sys = complete(D.relations, D.default_order(), 9)
    assert len(sys.rules) == 2
    assert is_confluent_up_to(sys, 9)


def test_complete_rejects_bad_input():
    with pytest.raises(ValueError):
        complete(F.relations, X_LT_Y, 2)
    with pytest.raises(ValueError):
        complete([P((1, "x"), (1, "yy"))], X_LT_Y, 4)
    with pytest.raises(ValueError):
        complete([NcPoly.zero(XY)], X_LT_Y, 4)


def test_H_system_confluent():
    assert is_confluent_up_to(H_SYS, 8)
    for r in H_SYS.rules:
        assert all(H_SYS.order.compare(w, r.lhs) < 0 for w in r.rhs.words())


# ---- properties over random polynomials

SYSTEMS = [F_SYS, H_SYS]
coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@st.composite
def homogeneous(draw, n=None):
    n = draw(st.integers(0, 7)) if n is None else n
    pool = words_of_degree(XY, n)
    chosen = draw(st.lists(st.sampled_from(pool), max_size=5))
    return NcPoly(XY, {w: draw(coeffs) for w in chosen})


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SYSTEMS), homogeneous())
def test_reduce_terminates_in_normal_words_and_is_idempotent(sys, p):
    r = sys.reduce(p)
    assert all(sys.is_normal(w) for w in r.words())
    assert sys.reduce(r) == r


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SYSTEMS), st.integers(0, 7).flatmap(lambda n: st.tuples(homogeneous(n), homogeneous(n))),
       coeffs, coeffs)
def test_reduce_is_linear(sys, pq, a, b):
    p, q = pq
    assert sys.reduce(a * p + b * q) == a * sys.reduce(p) + b * sys.reduce(q)


def _ideal_span(relations, n):
    ech = Echelon()
    for r in relations:
        k = n - r.degree()
        for i in range(k + 1):
            for left in words_of_degree(XY, i):
                for right in words_of_degree(XY, k - i):
                    ech.add((NcPoly.monomial(XY, left) * r * NcPoly.monomial(XY, right)).terms)
    return ech


IDEALS = {(id(sys), n): _ideal_span(rels, n) for sys, rels in ((F_SYS, F.relations), (H_SYS, H.relations))
          for n in range(3, 7)}


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(SYSTEMS), st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), homogeneous(n))))
def test_reduction_is_sound(sys, np_):
    n, p = np_
    assert IDEALS[(id(sys), n)].contains((p - sys.reduce(p)).terms)


def test_fraction_coefficients_are_exact():
    r = H_SYS.reduce(P((Fraction(1, 3), "yyy")))
    assert all(isinstance(c, Fraction) for _, c in r.items())
