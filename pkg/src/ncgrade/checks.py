"""Named verification checks.

Each check takes a config dict, runs its computations up to a degree bound
and returns a :class:`CheckReport`. Every failed requirement is recorded
in ``details["failures"]`` so a failing report always names what broke.
All statements are "verified up to degree N"; none claims more.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import (
    DOWNUP_DENOMINATOR,
    DownUpParams,
    Presentation,
    algebra_F,
    algebra_H,
    completed_system,
    downup,
    hilbert_matches_closed_form,
    left_subword_check,
    linear_images,
    linearly_independent,
    normal_basis,
    oracle_dims,
    pattern_basis_F,
    poly_from_factors,
    relation_image,
    series_expand,
)
from .config import (
    ConfigError,
    parse_group,
    parse_grading,
    parse_order,
    parse_presentation,
    poly_json,
    resolve_max_degree,
    rule_json,
    scalar,
    word_json,
)
from .core import Alphabet, NcPoly, substitute
from .grading import (
    Grading,
    dihedral,
    g_degree,
    graded_decompose,
    is_admissible_grading,
    is_inner_faithful,
)
from .invariants import (
    OBSTRUCTION_ASSUMPTION,
    fixed_ring_basis,
    hdet_codeterminant,
    longest_element,
    minimal_generators,
    occupied_degrees,
    reconstruction_holds,
    verify_component,
)
from .linalg import Echelon, solve_combination
from .rewrite import is_confluent_up_to, unresolved_ambiguities

BOUNDED = "all statements are verified up to the stated degree bound only"


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict
    assumptions: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self, with_time: bool = True) -> dict:
        out = {"name": self.name, "pass": self.passed, "details": self.details,
               "assumptions": self.assumptions}
        if with_time:
            out["wall_time"] = round(self.wall_time, 4)
        return out


class _Ledger:
    """Collects requirement outcomes for one check."""

    def __init__(self):
        self.failures: list[str] = []
        self.details: dict = {}
        self.assumptions: list[str] = [BOUNDED]

    def require(self, label: str, ok: bool, detail=None) -> bool:
        if not ok:
            msg = label if detail is None else f"{label}: {detail}"
            self.failures.append(msg)
        return ok

    def result(self):
        self.details["failures"] = self.failures
        return not self.failures, self.details, self.assumptions


CHECKS: dict[str, Callable[[dict], tuple]] = {}


def check(name: str):
    def deco(fn):
        CHECKS[name] = fn
        return fn
    return deco


def run_check(name: str, cfg: dict | None = None) -> CheckReport:
    cfg = dict(cfg or {})
    fn = CHECKS.get(name)
    if fn is None:
        raise ConfigError(f"unknown check {name!r}; known checks: {sorted(CHECKS)}")
    t0 = time.perf_counter()
    try:
        passed, details, assumptions = fn(cfg)
    except ConfigError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"{name}: {exc}") from exc
    expect = cfg.get("expect")
    if expect:
        if not isinstance(expect, dict):
            raise ConfigError("expect must be an object of detail keys to values")
        for key, want in sorted(expect.items()):
            got = details.get(key)
            if got != want:
                passed = False
                details.setdefault("failures", []).append(
                    f"expected {key} = {want!r}, computed {got!r}")
    return CheckReport(name, passed, details, assumptions, time.perf_counter() - t0)


# ---------------------------------------------------------------- helpers


def _xy() -> Alphabet:
    return algebra_F().alphabet


def _P(ab: Alphabet, *pairs) -> NcPoly:
    return NcPoly.from_terms(ab, pairs)


def _same_span(a: list[NcPoly], b: list[NcPoly]) -> bool:
    ea, eb, both = Echelon(), Echelon(), Echelon()
    ea.extend(p.terms for p in a)
    eb.extend(p.terms for p in b)
    both.extend(p.terms for p in a + b)
    return ea.rank == eb.rank == both.rank


def _in_span(p: NcPoly, basis: list[NcPoly]) -> bool:
    return solve_combination(p.terms, [q.terms for q in basis]) is not None


def _reference_presentations() -> list[Presentation]:
    pairs = [(0, 1), (0, -1), (2, -1), (-2, -1), (1, 1), (0, 5)]
    return [downup(a, b) for a, b in pairs] + [algebra_F(), algebra_H()]


def _presentations_from(cfg: dict) -> list[Presentation]:
    if "presentations" in cfg:
        return [parse_presentation(s) for s in cfg["presentations"]]
    if "presentation" in cfg:
        return [parse_presentation(cfg["presentation"])]
    return _reference_presentations()


def _degree(cfg: dict, default: int, minimum: int = 0) -> int:
    return resolve_max_degree(cfg.get("max_degree"), default, minimum)


def _samples(cfg: dict, default: list[tuple], width: int) -> list[tuple[Fraction, ...]]:
    raw = cfg.get("samples", default)
    out = []
    for s in raw:
        s = s if isinstance(s, (list, tuple)) else [s]
        if len(s) != width:
            raise ConfigError(f"each sample needs {width} value(s), got {s!r}")
        out.append(tuple(scalar(v) for v in s))
    return out


def _fmt(q) -> str:
    return str(q)


# ---------------------------------------------------------------- F rewriting

FIVE_RULES = [("yyy", [(1, "xyx")]), ("yxy", [(1, "xxx")]), ("yyxxx", [(1, "xyxxy")]),
              ("yxxyx", [(1, "xxxyy")]), ("yxxxx", [(1, "xxxxy")])]


@check("lemma-1.6-completion")
def _completion_F(cfg):
    led = _Ledger()
    N = _degree(cfg, 8, 3)
    F = algebra_F()
    ab = F.alphabet
    order = parse_order(F, cfg.get("order", ["x", "y"]))
    sys = completed_system(F, order, N)
    omit = cfg.get("omit_rules", [])
    if omit:
        sys = sys.with_rules([r for i, r in enumerate(sys.rules) if i not in set(omit)])
        led.details["omitted_rules"] = sorted(omit)
    rules = [(tuple(r.lhs), r.rhs) for r in sys.rules]
    expected = {ab.word(l): NcPoly.from_terms(ab, rhs) for l, rhs in FIVE_RULES}
    led.details["rules"] = [rule_json(r, order) for r in sys.rules]
    led.details["rule_count"] = len(rules)
    led.details["lhs"] = [ab.format_word(l) for l, _ in rules]
    led.require("rule set equals the five expected rules", dict(rules) == expected,
                [r.format(order) for r in sys.rules])
    confluent = is_confluent_up_to(sys, N)
    led.details["confluent_up_to"] = N if confluent else None
    bad = unresolved_ambiguities(sys, N)
    led.details["unresolved"] = [{"word": word_json(ab, a.word), "difference": poly_json(d, order)}
                                 for a, d in bad[:5]]
    led.require(f"all ambiguities of degree <= {N} resolve", confluent)
    consequences = {"y^4 - x^4": _P(ab, (1, "yyyy"), (-1, "xxxx")),
                    "yxyx - x^4": _P(ab, (1, "yxyx"), (-1, "xxxx")),
                    "xyxy - y^4": _P(ab, (1, "xyxy"), (-1, "yyyy"))}
    led.details["consequences_reduce_to_zero"] = {}
    for label, p in consequences.items():
        z = not sys.reduce(p)
        led.details["consequences_reduce_to_zero"][label] = z
        led.require(f"{label} reduces to 0", z)
    return led.result()


@check("lemma-1.6-basis")
def _normal_words_F(cfg):
    led = _Ledger()
    N = _degree(cfg, 10, 0)
    F = algebra_F()
    pattern = pattern_basis_F(N)
    normal = normal_basis(F, None, N)
    expected = [int(c) for c in series_expand([1], DOWNUP_DENOMINATOR, N)]
    led.details["pattern_dims"] = pattern.dims()
    led.details["normal_dims"] = normal.dims()
    led.details["closed_form_dims"] = expected
    for n in range(N + 1):
        if set(pattern.rows[n]) != set(normal.rows[n]):
            extra = sorted(set(pattern.rows[n]) - set(normal.rows[n]))
            missing = sorted(set(normal.rows[n]) - set(pattern.rows[n]))
            led.require(f"degree {n} word sets coincide", False,
                        {"pattern_only": [F.alphabet.format_word(w) for w in extra],
                         "normal_only": [F.alphabet.format_word(w) for w in missing]})
    led.require("pattern counts match closed form", pattern.dims() == expected)
    return led.result()


@check("lemma-1.7")
def _left_subwords_F(cfg):
    led = _Ledger()
    N = _degree(cfg, 8, 4)
    ss = cfg.get("s", [1, 2])
    F = algebra_F()
    sys = completed_system(F, None, N)
    led.details["runs"] = []
    for s in ss:
        res = left_subword_check(int(s), N, sys)
        led.details["runs"].append({"s": s, "checked_factorizations": res.checked,
                                    "violations": [[F.alphabet.format_word(x) for x in v]
                                                   for v in res.violations[:10]]})
        led.require(f"left-subword property for s={s}", res.ok, res.violations[:3])
    return led.result()


# ---------------------------------------------------------------- H / isomorphisms


@check("lemma-1.9-independence")
def _independence_H(cfg):
    led = _Ledger()
    n_max = int(cfg.get("n_max", 4))
    N = _degree(cfg, 2 * n_max + 1, 3)
    H = algebra_H()
    ab = H.alphabet
    sys = completed_system(H, None, N)
    rows = []
    for n in range(0, n_max + 1):
        if n >= 1 and 2 * n <= N:
            a, b = _P(ab, (1, "xy" * n)), _P(ab, (1, "yx" * n))
            ok = linearly_independent([a, b], H, system=sys)
            rows.append({"pair": f"(xy)^{n}, (yx)^{n}", "independent": ok})
            led.require(f"(xy)^{n}, (yx)^{n} independent", ok)
        if 2 * n + 1 <= N:
            a, b = _P(ab, (1, "y" + "xy" * n)), _P(ab, (1, "x" + "yx" * n))
            ok = linearly_independent([a, b], H, system=sys)
            rows.append({"pair": f"y(xy)^{n}, x(yx)^{n}", "independent": ok})
            led.require(f"y(xy)^{n}, x(yx)^{n} independent", ok)
    led.details["pairs"] = rows
    # H is D(-2,-1) under u = x - y, d = x + y
    D = downup(-2, -1)
    img = relation_image(D, linear_images(ab, {"u": [(1, "x"), (-1, "y")], "d": [(1, "x"), (1, "y")]}), H)
    led.details["downup_relations_in_H"] = [poly_json(p) for p in img]
    led.require("D(-2,-1) relations vanish in H under u=x-y, d=x+y", all(not p for p in img))
    return led.result()


@check("lemma-1.5-iso")
def _iso_F(cfg):
    led = _Ledger()
    F = algebra_F()
    D = downup(0, -1)
    img = relation_image(F, linear_images(D.alphabet, {"x": [(1, "u"), (1, "d")],
                                                        "y": [(1, "u"), (-1, "d")]}), D)
    led.details["F_relations_in_D(0,-1)"] = [poly_json(p) for p in img]
    led.require("F relations vanish in D(0,-1) under x=u+d, y=u-d", all(not p for p in img))
    back = relation_image(D, linear_images(F.alphabet, {"u": [("1/2", "x"), ("1/2", "y")],
                                                         "d": [("1/2", "x"), ("-1/2", "y")]}), F)
    led.require("D(0,-1) relations vanish in F under the inverse map", all(not p for p in back))
    return led.result()


# ---------------------------------------------------------------- dimensions


@check("oracle-equivalence")
def _oracle_equivalence(cfg):
    led = _Ledger()
    pres = _presentations_from(cfg)
    N = _degree(cfg, 8, max(p.max_relation_degree() for p in pres))
    led.details["max_degree"] = N
    led.details["algebras"] = {}
    for p in pres:
        rewriting = normal_basis(p, parse_order(p, cfg.get("order")), N).dims()
        linear = oracle_dims(p, N)
        led.details["algebras"][p.label] = {"rewriting": rewriting, "linear_algebra": linear}
        led.require(f"{p.label}: rewriting dims equal linear-algebra dims", rewriting == linear,
                    {"rewriting": rewriting, "linear_algebra": linear})
    return led.result()


@check("hilbert")
def _hilbert(cfg):
    led = _Ledger()
    pres = _presentations_from(cfg)
    N = _degree(cfg, 10, max(p.max_relation_degree() for p in pres))
    num = [int(c) for c in cfg.get("numerator", [1])]
    den = [int(c) for c in cfg.get("denominator", DOWNUP_DENOMINATOR)]
    if not den or den[0] == 0:
        raise ConfigError("denominator needs a nonzero constant term")
    expected = series_expand(num, den, N)
    led.details["closed_form"] = {"numerator": num, "denominator": den,
                                  "coefficients": [_fmt(c) for c in expected]}
    led.details["algebras"] = {}
    for p in pres:
        rewriting = normal_basis(p, parse_order(p, cfg.get("order")), N).dims()
        linear = oracle_dims(p, N)
        led.details["algebras"][p.label] = {"rewriting": rewriting, "linear_algebra": linear}
        want = led.details["closed_form"]["coefficients"]
        led.require(f"{p.label}: rewriting dims match closed form",
                    hilbert_matches_closed_form(rewriting, num, den, N),
                    {"computed": rewriting, "expected": want})
        led.require(f"{p.label}: linear-algebra dims match closed form",
                    hilbert_matches_closed_form(linear, num, den, N),
                    {"computed": linear, "expected": want})
    return led.result()


# ---------------------------------------------------------------- D(0,1) graded by D8

STATED = {"u": "rho", "d": "r"}
SWAPPED = {"u": "r", "d": "rho"}
LISTED_FIXED_GENERATORS = ["dudu", "udud", "dddd", "uu"]
# hypersurface in weights 4, 4, 4, 2 cut out in degree 8
HYPERSURFACE = (poly_from_factors([1, 0, 0, 0, 0, 0, 0, 0, -1]),
                poly_from_factors([1, 0, -1], [1, 0, 0, 0, -1], [1, 0, 0, 0, -1], [1, 0, 0, 0, -1]))


def _swap_ud(word: str) -> str:
    return word.translate(str.maketrans("ud", "du"))


def _example_setup(cfg, N):
    D = parse_presentation(cfg.get("presentation", {"builtin": "downup", "alpha": "0", "beta": "1"}))
    G = parse_group(cfg.get("group", {"builtin": "dihedral", "n": 4}))
    basis = normal_basis(D, parse_order(D, cfg.get("order")), N)
    return D, G, basis


# part -> (element name, module generators) with deg u = rho, deg d = r
DIHEDRAL_COMPONENTS = [
    ("e", [""]),
    ("rho", ["u"]),
    ("rho^2", ["uu"]),
    ("rho^3", ["uuu", "dud"]),
    ("r", ["d", "udu"]),
    ("rho r", ["ud", "uudu"]),
    ("rho^2 r", ["uud", "uuudu"]),
    ("rho^3 r", ["uuud", "du"]),
]



def _certificates(led: _Ledger, label: str, gb, G, ab, swap: bool, N: int) -> list[dict]:
    certs = []
    for elem, gens in DIHEDRAL_COMPONENTS:
        words = [ab.word(_swap_ud(w) if swap else w) for w in gens]
        names = [ab.format_word(w) for w in words]
        try:
            cert = verify_component(gb, G.element(elem), words, N)
        except ValueError as exc:
            led.require(f"{label}: A_{elem} module generators {names} lie in the component", False, str(exc))
            continue
        certs.append({"component": elem, "module_generators": names, "spans": cert.spans,
                      "free_rank_one": cert.free_rank_one, "failed_degrees": cert.failed_degrees,
                      "dims": cert.dims})
        led.require(f"{label}: A_{elem} generated over the fixed ring by {names} to degree {N}",
                    cert.spans, cert.failed_degrees)
        if elem in ("e", "rho", "rho^2"):
            led.require(f"{label}: A_{elem} free of rank one", cert.free_rank_one)
    return certs


@check("example-2.1")
def _dihedral_fixed_ring(cfg):
    led = _Ledger()
    N = _degree(cfg, 12, 4)
    D, G, basis = _example_setup(cfg, N)
    ab = D.alphabet
    params = DownUpParams(-D.relations[0].coeff(ab.word("udu")), -D.relations[0].coeff(ab.word("duu")))
    listed_set = {ab.word(w) for w in LISTED_FIXED_GENERATORS}
    led.assumptions.append(OBSTRUCTION_ASSUMPTION)
    led.assumptions.append("codeterminant computed by the formula (deg u)^2 (deg d)^2")
    assignments = {"stated": cfg.get("grading", STATED), "swapped": cfg.get("swapped_grading", SWAPPED)}
    for label, mapping in assignments.items():
        gr = parse_grading(D, G, mapping)
        info: dict = {"assignment": dict(mapping)}
        info["admissible"] = is_admissible_grading(D, gr)
        info["inner_faithful"] = is_inner_faithful(gr)
        led.require(f"{label}: grading admissible", info["admissible"])
        led.require(f"{label}: grading inner faithful", info["inner_faithful"])
        if not info["admissible"]:
            led.details[label] = info
            continue
        h = hdet_codeterminant(params, gr)
        info["hdet"] = G.name(h)
        info["hdet_trivial"] = h == G.identity
        led.require(f"{label}: codeterminant is rho^2", info["hdet"] == "rho^2", info["hdet"])
        gb = graded_decompose(basis, gr)
        fixed = fixed_ring_basis(gb)
        info["fixed_dims"] = fixed.dims()
        rep = minimal_generators(fixed, basis.system, N)
        info["generators"] = [{"degree": d, "poly": poly_json(g, basis.system.order),
                               "display": g.format(basis.system.order)} for d, g in rep.generators]
        info["generator_degrees"] = rep.degrees
        info["obstruction_flag"] = rep.obstruction_flag
        gen_words = {g.words()[0] for _, g in rep.generators if len(g) == 1}
        info["matches_listed_generators"] = gen_words == listed_set
        info["d^2_fixed"] = ab.word("dd") in fixed.rows[2]
        info["u^2_fixed"] = ab.word("uu") in fixed.rows[2]
        hm = hilbert_matches_closed_form(fixed.dims(), *HYPERSURFACE, N)
        info["hypersurface_hilbert_match"] = hm
        led.require(f"{label}: fixed-ring dims match (1-t^8)/((1-t^2)(1-t^4)^3)", hm, fixed.dims())
        led.require(f"{label}: more than three generators (obstruction)", rep.obstruction_flag,
                    rep.degrees)
        led.require(f"{label}: generators reconstruct the fixed ring",
                    not reconstruction_holds(rep, fixed, basis.system))
        if label == "swapped":
            info["component_certificates"] = _certificates(led, label, gb, G, ab, True, min(N, 9))
        led.details[label] = info
    sw, st = led.details.get("swapped", {}), led.details.get("stated", {})
    led.require("swapped assignment gives generator degrees [2, 4, 4, 4]",
                sw.get("generator_degrees") == [2, 4, 4, 4], sw.get("generator_degrees"))
    led.require("swapped assignment reproduces the listed generators (du)^2, (ud)^2, d^4, u^2",
                sw.get("matches_listed_generators") is True)
    discrepancy = bool(st.get("d^2_fixed")) and not st.get("u^2_fixed")
    led.details["discrepancy"] = {
        "stated_assignment_fixes_d^2": st.get("d^2_fixed"),
        "stated_assignment_fixes_u^2": st.get("u^2_fixed"),
        "stated_reproduces_listed_generators": st.get("matches_listed_generators"),
        "swapped_reproduces_listed_generators": sw.get("matches_listed_generators"),
        "note": ("with deg u = rho, deg d = r the degree-2 fixed element is d^2, not u^2; "
                 "the listed generators (du)^2, (ud)^2, d^4, u^2 arise from deg u = r, deg d = rho"),
    }
    led.require("stated assignment exhibits the documented discrepancy (d^2 fixed, u^2 not)",
                discrepancy)
    return led.result()


@check("lemma-2.2")
def _dihedral_components(cfg):
    led = _Ledger()
    N = _degree(cfg, 9, 4)
    D, G, basis = _example_setup(cfg, N)
    ab = D.alphabet
    led.details["max_degree"] = N
    for label, mapping, swap in (("stated", STATED, False), ("swapped", SWAPPED, True)):
        gr = parse_grading(D, G, mapping)
        gb = graded_decompose(basis, gr)
        certs = _certificates(led, label, gb, G, ab, swap, N)
        led.details[label] = certs
        total = sum(len(gb.component(n, g)) for n in range(N + 1) for g in range(G.size))
        led.require(f"{label}: components partition the basis", total == sum(basis.dims()))
    return led.result()


# ---------------------------------------------------------------- D(0,1) graded by Q8


@check("prop-1.4-q8")
def _quaternion_fixed_ring(cfg):
    led = _Ledger()
    N = _degree(cfg, 16, 4)
    D = parse_presentation(cfg.get("presentation", {"builtin": "downup", "alpha": "0", "beta": "1"}))
    G = parse_group(cfg.get("group", {"builtin": "quaternion8"}))
    gr = parse_grading(D, G, cfg.get("grading", {"u": "i", "d": "j"}))
    led.assumptions.append(OBSTRUCTION_ASSUMPTION)
    a, b = gr.assignment
    led.details["admissible"] = is_admissible_grading(D, gr)
    led.details["inner_faithful"] = is_inner_faithful(gr)
    led.details["nonabelian"] = not G.is_abelian()
    led.details["squares_central"] = G.is_central(G.mul(a, a)) and G.is_central(G.mul(b, b))
    for k in ("admissible", "inner_faithful", "nonabelian", "squares_central"):
        led.require(k.replace("_", " "), led.details[k])
    if not led.details["admissible"]:
        return led.result()
    orders = {"u": G.order_of(a), "d": G.order_of(b), "du": G.order_of(G.mul(b, a)),
              "ud": G.order_of(G.mul(a, b))}
    led.details["orders"] = orders
    basis = normal_basis(D, parse_order(D, cfg.get("order")), N)
    gb = graded_decompose(basis, gr)
    fixed = fixed_ring_basis(gb)
    ab = D.alphabet
    witnesses = {"u^i": "u" * orders["u"], "d^j": "d" * orders["d"],
                 "(du)^k": "du" * orders["du"], "(ud)^l": "ud" * orders["ud"]}
    led.details["witnesses_fixed"] = {}
    for label, w in witnesses.items():
        word = ab.word(w)
        if len(word) <= N:
            fixed_ok = g_degree(word, gr) == G.identity
            led.details["witnesses_fixed"][label] = fixed_ok
            led.require(f"{label} lies in the fixed ring", fixed_ok)
    rep = minimal_generators(fixed, basis.system, N)
    led.details["fixed_dims"] = fixed.dims()
    led.details["generator_degrees"] = rep.degrees
    led.details["generators"] = [g.format(basis.system.order) for _, g in rep.generators]
    led.details["generator_count"] = rep.count
    led.details["obstruction_flag"] = rep.obstruction_flag
    led.require("at least four minimal generators", rep.count >= 4, rep.count)
    led.require("obstruction flag raised", rep.obstruction_flag)
    return led.result()


# ---------------------------------------------------------------- dihedral gradings of H


@check("prop-1.10")
def _longest_component_H(cfg):
    led = _Ledger()
    ns = [int(n) for n in cfg.get("n", [3, 4, 5])]
    N = _degree(cfg, max(ns) + 1, max(ns))
    H = algebra_H()
    ab = H.alphabet
    basis = normal_basis(H, None, N)
    sys = basis.system
    led.details["groups"] = []
    for n in ns:
        G = dihedral(2 * n)
        g1, g2 = G.element("r"), G.element("rho r")
        gr = Grading(G, (g1, g2))
        info: dict = {"group": G.label, "deg x": G.name(g1), "deg y": G.name(g2)}
        info["admissible"] = is_admissible_grading(H, gr)
        info["inner_faithful"] = is_inner_faithful(gr)
        info["squares_equal"] = G.mul(g1, g1) == G.mul(g2, g2)
        led.require(f"D{2 * n}: admissible", info["admissible"])
        led.require(f"D{2 * n}: inner faithful", info["inner_faithful"])
        m = longest_element(G, g1, g2)
        info["longest"] = G.name(m)
        gb = graded_decompose(basis, gr)
        occ = occupied_degrees(gb, m)
        low = occ[0] if occ else None
        info["min_degree"] = low
        info["dim_at_min_degree"] = len(gb.component(low, m)) if low is not None else 0
        led.require(f"D{2 * n}: smallest occupied degree of A_m is {n}", low == n, low)
        led.require(f"D{2 * n}: dim A_m at degree {n} is at least 2", info["dim_at_min_degree"] >= 2,
                    info["dim_at_min_degree"])
        if n % 2:
            k = (n - 1) // 2
            wit = [_P(ab, (1, "xy" * k + "x")), _P(ab, (1, "yx" * k + "y"))]
        else:
            wit = [_P(ab, (1, "xy" * (n // 2))), _P(ab, (1, "yx" * (n // 2)))]
        info["witnesses"] = [w.format() for w in wit]
        in_m = all(g_degree(w.words()[0], gr) == m for w in wit)
        indep = linearly_independent(wit, H, system=sys)
        led.require(f"D{2 * n}: witnesses lie in A_m", in_m)
        led.require(f"D{2 * n}: witnesses linearly independent", indep)
        # no single homogeneous generator of degree n makes A_m free of rank one over A_e
        candidates = list(gb.component(n, m)) if low == n else []
        free_any = False
        for w in candidates:
            cert = verify_component(gb, m, [w], N, sys)
            free_any = free_any or cert.free_rank_one
        info["free_rank_one"] = free_any
        info["contradiction"] = not free_any
        led.require(f"D{2 * n}: A_m is not free of rank one on a degree-{n} generator", not free_any)
        led.details["groups"].append(info)
    return led.result()


# ---------------------------------------------------------------- changes of variables


def _subst_downup(alpha, beta, u_img, d_img):
    ab = _xy()
    D = downup(alpha, beta)
    images = {"u": _P(ab, *u_img), "d": _P(ab, *d_img)}
    return [substitute(r, images) for r in D.relations]


def _F_relations():
    return list(algebra_F().relations)


def _H_relations():
    return list(algebra_H().relations)


def _symmetric_family(al):
    ab = _xy()
    return [_P(ab, (al, "xxy"), (-2 - al, "xyx"), (al, "yxx"), (2 - al, "yyy")),
            _P(ab, (2 - al, "xxx"), (al, "xyy"), (-2 - al, "yxy"), (al, "yyx"))]


@check("prop-1.12-case-2a")
def _change_of_variables_2a(cfg):
    led = _Ledger()
    ab = _xy()
    rows = []
    for (be,) in _samples(cfg, [[2], [3], [5], [7], [-1]], 1):
        f1, f2 = _subst_downup(0, be, [(1, "x")], [(1, "y"), (-1, "x")])
        e1 = _P(ab, (1, "xxy"), (-be, "yxx"), (be - 1, "xxx"))
        lhs2 = _P(ab, (1, "xyy"), (-be, "yyx"), (1 - be, "xxx"))
        rhs2 = _P(ab, (1, "xxy"), (1 - be, "xyx"), (-be, "yxx"))
        e3 = _P(ab, (1, "xyy"), (-be, "yyx"), (be - 1, "xyx"))
        r = {"beta": _fmt(be), "first_relation": f1 == e1, "second_relation": f2 == lhs2 - rhs2,
             "combined": f1 + f2 == e3, "first_relation_poly": f1.format()}
        rows.append(r)
        led.require(f"beta={be}: first relation expansion", r["first_relation"], f1.format())
        led.require(f"beta={be}: second relation expansion", r["second_relation"], f2.format())
        led.require(f"beta={be}: sum gives xy^2 - beta y^2x + (beta-1)xyx", r["combined"])
        # x^2y and x^3 both occur, so homogeneity would force deg x = deg y
        if be != 1:
            led.require(f"beta={be}: x^2y and x^3 both present", bool(f1.coeff(ab.word("xxy")))
                        and bool(f1.coeff(ab.word("xxx"))))
    led.details["samples"] = rows
    return led.result()


@check("prop-1.12-case-2b")
def _change_of_variables_2b(cfg):
    led = _Ledger()
    ab = _xy()
    rows = []
    for be, a in _samples(cfg, [[3, 5], [-2, 7], [2, -3], ["1/2", 4], [5, "-1/3"]], 2):
        f1, f2 = _subst_downup(0, be, [(1, "x"), (-1, "y")], [(1, "x"), (-a, "y")])
        d1 = _P(ab, (1 - be, "xxx"), (-a + be, "xxy"), (-1 + be, "xyx"), (-1 + a * be, "yxx"),
                (a - be, "xyy"), (a - a * be, "yxy"), (1 - a * be, "yyx"), (-a + a * be, "yyy"))
        d2 = _P(ab, (1 - be, "xxx"), (-a + be, "xxy"), (-a + a * be, "xyx"), (-1 + a * be, "yxx"),
                (a * a - a * be, "xyy"), (a - a * be, "yxy"), (a - a * a * be, "yyx"),
                (-a * a + a * a * be, "yyy"))
        p1 = _P(ab, (1 - be, "xxx"), (-a + be, "xxy"), (-1 + a * be, "yxx"), (a * (1 - be), "yxy"))
        p2 = _P(ab, (1 - be, "xyx"), (-a + be, "xyy"), (-1 + a * be, "yyx"), (a * (1 - be), "yyy"))
        r = {"beta": _fmt(be), "a": _fmt(a), "expansions": f1 == d1 and f2 == d2,
             "combinations_in_span": _in_span(p1, [f1, f2]) and _in_span(p2, [f1, f2])}
        rows.append(r)
        led.require(f"beta={be}, a={a}: expansions", r["expansions"], [f1.format(), f2.format()])
        led.require(f"beta={be}, a={a}: reduced pair lies in the relation span",
                    r["combinations_in_span"])
    led.details["samples"] = rows
    f1, f2 = _subst_downup(0, -1, [(1, "x"), (-1, "y")], [(1, "x"), (1, "y")])
    special = _same_span([f1, f2], _F_relations())
    led.details["beta=a=-1_gives_F"] = special
    led.require("beta = a = -1 yields x^3 - yxy, y^3 - xyx", special, [f1.format(), f2.format()])
    return led.result()


@check("prop-1.12-case-3a")
def _change_of_variables_3a(cfg):
    led = _Ledger()
    ab = _xy()
    rows = []
    for al, be in _samples(cfg, [[3, 2], [1, 1], [-2, 5], ["1/2", -3], [4, "-1/2"]], 2):
        f1, f2 = _subst_downup(al, be, [(1, "x")], [(1, "y"), (-1, "x")])
        d1 = _P(ab, (1, "xxy"), (-al, "xyx"), (-be, "yxx"), (-1 + al + be, "xxx"))
        d2 = _P(ab, (1 - al - be, "xxx"), (-1 + al, "xxy"), (-1 + be, "xyx"), (al + be, "yxx"),
                (1, "xyy"), (-al, "yxy"), (-be, "yyx"))
        s = _P(ab, (al, "xxy"), (-1 - al + be, "xyx"), (al, "yxx"), (1, "xyy"), (-al, "yxy"), (-be, "yyx"))
        r = {"alpha": _fmt(al), "beta": _fmt(be), "expansions": f1 == d1 and f2 == d2,
             "sum": f1 + f2 == s}
        rows.append(r)
        led.require(f"alpha={al}, beta={be}: expansions", r["expansions"], [f1.format(), f2.format()])
        led.require(f"alpha={al}, beta={be}: sum of relations", r["sum"])
    led.details["samples"] = rows
    f1, f2 = _subst_downup(2, -1, [(1, "x")], [(1, "y"), (-1, "x")])
    special = _same_span([f1, f2], _symmetric_family(Fraction(2)))
    led.details["(2,-1)_gives_symmetric_family"] = special
    led.require("(alpha, beta) = (2, -1) yields the symmetric-family relations at alpha = 2", special)
    return led.result()


@check("prop-1.12-case-3b")
def _change_of_variables_3b(cfg):
    led = _Ledger()
    ab = _xy()
    rows = []
    default = [[3, 2, 5], [1, 1, -2], [-2, 5, 3], ["1/2", "1/2", 4], [2, -1, 3], [3, -2, "1/3"]]
    for al, be, a in _samples(cfg, default, 3):
        f1, f2 = _subst_downup(al, be, [(1, "x"), (-1, "y")], [(1, "x"), (-a, "y")])
        c = 1 - al - be
        d1 = _P(ab, (c, "xxx"), (-a + al + be, "xxy"), (-1 + a * al + be, "xyx"), (-1 + al + a * be, "yxx"),
                (a - a * al - be, "xyy"), (a - al - a * be, "yxy"), (1 - a * al - a * be, "yyx"),
                (a * (-1 + al + be), "yyy"))
        d2 = _P(ab, (c, "xxx"), (-a + a * al + be, "xxy"), (-a + al + a * be, "xyx"),
                (-1 + a * al + a * be, "yxx"), (a * (a - al - be), "xyy"), (a * (1 - a * al - be), "yxy"),
                (a * (1 - al - a * be), "yyx"), (a * a * (-1 + al + be), "yyy"))
        r = {"alpha": _fmt(al), "beta": _fmt(be), "a": _fmt(a), "expansions": f1 == d1 and f2 == d2}
        led.require(f"({al},{be},{a}): expansions", r["expansions"], [f1.format(), f2.format()])
        if c == 0:
            pair = [_P(ab, (1, "xxy"), (-al, "xyx"), (-be, "yxx"), (-be, "xyy"), (-al, "yxy"), (1, "yyx")),
                    _P(ab, (be, "xxy"), (al, "xyx"), (-1, "yxx"), (-a, "xyy"), (a * al, "yxy"),
                       (a * be, "yyx"))]
            pair2 = [_P(ab, (1 + be, "xxy"), (-1 - be, "yxx"), (-be - a, "xyy"), (al * (a - 1), "yxy"),
                        (1 + a * be, "yyx")),
                     _P(ab, (a + be, "xxy"), (al * (1 - a), "xyx"), (-a * be - 1, "yxx"),
                        (-a * be - a, "xyy"), (a + a * be, "yyx"))]
            r["branch"] = "alpha+beta=1"
            r["divided_pair_same_span"] = _same_span([f1, f2], pair)
            r["equivalent_pair_same_span"] = _same_span([f1, f2], pair2)
            led.require(f"({al},{be},{a}): divided pair spans the relations", r["divided_pair_same_span"])
            led.require(f"({al},{be},{a}): equivalent pair spans the relations",
                        r["equivalent_pair_same_span"])
            if be == -1:
                abelian = [_P(ab, (1, "xyy"), (-2, "yxy"), (1, "yyx")),
                           _P(ab, (1, "xxy"), (-2, "xyx"), (1, "yxx"))]
                r["beta=-1_pair"] = _same_span([f1, f2], abelian)
                led.require(f"({al},{be},{a}): xy^2-2yxy+y^2x, x^2y-2xyx+yx^2", r["beta=-1_pair"])
        else:
            long_pair = [
                _P(ab, (al * (1 - a), "xxy"), ((a - 1) * (1 + al - be), "xyx"), (al * (1 - a), "yxx"),
                   ((1 - a) * (a - be), "xyy"), (al * (a * a - 1), "yxy"), ((1 - a) * (1 - a * be), "yyx"),
                   (a * (1 - a) * (-1 + al + be), "yyy")),
                _P(ab, ((1 - a) * c, "xxx"), ((a - 1) * (a - be), "xxy"), (al * (1 - a * a), "xyx"),
                   ((1 - a) * (-1 + a * be), "yxx"), (a * al * (a - 1), "xyy"),
                   (a * (1 - a) * (1 + al - be), "yxy"), (a * al * (a - 1), "yyx")),
            ]
            short_pair = [
                _P(ab, (al, "xxy"), (-(1 + al - be), "xyx"), (al, "yxx"), (a - be, "xyy"),
                   (-al * (a + 1), "yxy"), (1 - a * be, "yyx"), (a * (-1 + al + be), "yyy")),
                _P(ab, (c, "xxx"), (-(a - be), "xxy"), (al * (1 + a), "xyx"), (-1 + a * be, "yxx"),
                   (-a * al, "xyy"), (a * (1 + al - be), "yxy"), (-a * al, "yyx")),
            ]
            r["branch"] = "alpha+beta!=1"
            r["long_pair_same_span"] = _same_span([f1, f2], long_pair)
            r["short_pair_same_span"] = _same_span([f1, f2], short_pair)
            led.require(f"({al},{be},{a}): intermediate pair spans the relations", r["long_pair_same_span"])
            led.require(f"({al},{be},{a}): simplified pair spans the relations", r["short_pair_same_span"])
        rows.append(r)
    led.details["samples"] = rows
    family = []
    for (al,) in _samples({"samples": cfg.get("alpha_samples", [[3], [5], ["1/2"], [-3], [7]])},
                          [], 1):
        f1, f2 = _subst_downup(al, -1, [(1, "x"), (-1, "y")], [(1, "x"), (1, "y")])
        ok = _same_span([f1, f2], _symmetric_family(al))
        family.append({"alpha": _fmt(al), "matches": ok})
        led.require(f"a = beta = -1, alpha = {al}: symmetric-family relations", ok)
    led.details["a=beta=-1"] = family
    f1, f2 = _subst_downup(-2, -1, [(1, "x"), (-1, "y")], [(1, "x"), (1, "y")])
    special = _same_span([f1, f2], _H_relations())
    led.details["alpha=-2_gives_H"] = special
    led.require("alpha = -2, beta = a = -1 yields the relations of H", special,
                [f1.format(), f2.format()])
    return led.result()



def available_checks() -> list[str]:
    return sorted(CHECKS)

