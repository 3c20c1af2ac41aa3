import pytest

from ncgrade.algebra import (
    DownUpParams,
    algebra_F,
    algebra_H,
    downup,
    hilbert_matches_closed_form,
    normal_basis,
    poly_from_factors,
)
from ncgrade.grading import Grading, cyclic, dihedral, direct_product, graded_decompose, quaternion8
from ncgrade.invariants import (
    fixed_ring_basis,
    hdet_codeterminant,
    is_minimal,
    longest_element,
    minimal_generators,
    occupied_degrees,
    reconstruction_holds,
    verify_component,
)

D01 = downup(0, 1)
AB = D01.alphabet
D8 = dihedral(8)
BASIS12 = normal_basis(D01, None, 12)
SWAPPED = Grading.from_names(D01, D8, {"u": "r", "d": "rho"})
STATED = Grading.from_names(D01, D8, {"u": "rho", "d": "r"})

COMPONENTS = [("e", [""]), ("rho", ["u"]), ("rho^2", ["uu"]), ("rho^3", ["uuu", "dud"]),
              ("r", ["d", "udu"]), ("rho r", ["ud", "uudu"]), ("rho^2 r", ["uud", "uuudu"]),
              ("rho^3 r", ["uuud", "du"])]


def _swap(w):
    return w.translate(str.maketrans("ud", "du"))


def _words(rep):
    return {AB.format_word(g.words()[0]) for _, g in rep.generators}


def test_trivial_group_fixes_everything():
    gb = graded_decompose(BASIS12, Grading(cyclic(1), (0, 0)))
    assert fixed_ring_basis(gb).rows == BASIS12.rows
    rep = minimal_generators(fixed_ring_basis(gb), N=8)
    assert rep.count == 2 and rep.degrees == [1, 1] and not rep.obstruction_flag


def test_swapped_assignment_generators():
    fixed = fixed_ring_basis(graded_decompose(BASIS12, SWAPPED))
    assert {AB.format_word(w) for w in fixed.rows[4]} == {"u^4", "d^4", "(du)^2", "(ud)^2"}
    rep = minimal_generators(fixed)
    assert rep.degrees == [2, 4, 4, 4]
    assert _words(rep) == {"u^2", "d^4", "(du)^2", "(ud)^2"}
    assert rep.obstruction_flag
    assert reconstruction_holds(rep, fixed) == []
    assert is_minimal(rep, fixed)


def test_stated_assignment_generators():
    fixed = fixed_ring_basis(graded_decompose(BASIS12, STATED))
    rep = minimal_generators(fixed)
    assert _words(rep) == {"d^2", "u^4", "(du)^2", "(ud)^2"}
    assert rep.degrees == [2, 4, 4, 4] and rep.obstruction_flag


@pytest.mark.parametrize("gr", [STATED, SWAPPED])
def test_fixed_ring_hilbert_is_hypersurface(gr):
    fixed = fixed_ring_basis(graded_decompose(BASIS12, gr))
    num = poly_from_factors([1, 0, 0, 0, 0, 0, 0, 0, -1])
    den = poly_from_factors([1, 0, -1], [1, 0, 0, 0, -1], [1, 0, 0, 0, -1], [1, 0, 0, 0, -1])
    assert hilbert_matches_closed_form(fixed.dims(), num, den, 12)
    assert fixed.dims() == [1, 0, 1, 0, 4, 0, 4, 0, 9, 0, 9, 0, 16]


def test_F_even_subring():
    F = algebra_F()
    gb = graded_decompose(normal_basis(F, None, 6), Grading(cyclic(2), (1, 1)))
    assert fixed_ring_basis(gb).dims() == [1, 0, 4, 0, 9, 0, 16]


def test_quaternion_fixed_ring():
    basis = normal_basis(D01, None, 16)
    gr = Grading.from_names(D01, quaternion8(), {"u": "i", "d": "j"})
    fixed = fixed_ring_basis(graded_decompose(basis, gr))
    rep = minimal_generators(fixed)
    assert rep.count >= 4 and rep.obstruction_flag
    assert reconstruction_holds(rep, fixed) == []


@pytest.mark.parametrize("gr,swap", [(SWAPPED, True), (STATED, False)])
def test_component_certificates(gr, swap):
    gb = graded_decompose(normal_basis(D01, None, 9), gr)
    for elem, gens in COMPONENTS:
        words = [AB.word(_swap(w) if swap else w) for w in gens]
        cert = verify_component(gb, D8.element(elem), words)
        assert cert.spans and not cert.failed_degrees, elem
        assert cert.verified_to == 9
    e = verify_component(gb, D8.identity, [()])
    assert e.free_rank_one


def test_certificate_detects_missing_generator():
    gb = graded_decompose(normal_basis(D01, None, 9), STATED)
    cert = verify_component(gb, D8.element("rho^3"), [AB.word("uuu")])
    assert not cert.spans and cert.failed_degrees[0] == 3
    with pytest.raises(ValueError):
        verify_component(gb, D8.element("rho"), [AB.word("d")])


def test_longest_element():
    for n in (2, 3, 4, 5):
        G = dihedral(2 * n)
        g1, g2 = G.element("r"), G.element("rho r")
        m = longest_element(G, g1, g2)
        if n % 2:
            assert m == G.mul(*([g1, g2] * ((n - 1) // 2)), g1)
        else:
            assert m == G.power(G.mul(g1, g2), n // 2) == G.power(G.mul(g2, g1), n // 2)
    G = dihedral(4)
    assert G.is_central(longest_element(G, G.element("r"), G.element("rho r")))
    with pytest.raises(ValueError):
        longest_element(D8, D8.element("rho"), D8.element("r"))
    with pytest.raises(ValueError):
        longest_element(D8, D8.element("r"), D8.element("rho^2 r"))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_longest_component_of_H_not_free(n):
    H = algebra_H()
    G = dihedral(2 * n)
    gr = Grading(G, (G.element("r"), G.element("rho r")))
    gb = graded_decompose(normal_basis(H, None, n + 1), gr)
    m = longest_element(G, *gr.assignment)
    assert occupied_degrees(gb, m)[0] == n
    low = gb.component(n, m)
    assert len(low) >= 2
    for w in low:
        assert not verify_component(gb, m, [w]).free_rank_one


def test_hdet():
    assert D8.name(hdet_codeterminant(DownUpParams(0, 1), STATED)) == "rho^2"
    assert D8.name(hdet_codeterminant(DownUpParams(0, 1), SWAPPED)) == "rho^2"
    assert hdet_codeterminant(DownUpParams(0, 1), Grading(D8, (0, 0))) == D8.identity
    V = direct_product(cyclic(2), cyclic(2))
    gr = Grading.from_names(D01, V, {"u": "(1,0)", "d": "(0,1)"})
    assert hdet_codeterminant(DownUpParams(0, 1), gr) == V.identity
    # independent of the parameters as long as the grading stays admissible
    for beta in (1, 3, "-1/2"):
        assert hdet_codeterminant(DownUpParams(0, beta), STATED) == D8.element("rho^2")
    with pytest.raises(ValueError):
        hdet_codeterminant(DownUpParams(1, 1), STATED)
