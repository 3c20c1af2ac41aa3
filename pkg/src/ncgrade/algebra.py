"""Finitely presented graded algebras.

Built-in families: the down-up algebras D(alpha, beta), the algebra F with
relations x^3 = yxy, y^3 = xyx, and the algebra H with relations
x^2y + yx^2 - 2y^3 = 0, -2x^3 + xy^2 + y^2x = 0.

Dimensions are available two independent ways: normal words of a
completed reduction system (:func:`normal_basis`) and plain linear algebra
on the truncated two-sided ideal (:func:`oracle_dims`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .core import (
    Alphabet,
    MonomialOrder,
    NcPoly,
    ScalarLike,
    Word,
    as_scalar,
    substitute,
    words_of_degree,
)
from .linalg import Echelon, rank
from .rewrite import ReductionSystem, complete


@dataclass(frozen=True)
class DownUpParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        object.__setattr__(self, "beta", as_scalar(self.beta))
        if self.beta == 0:
            raise ValueError("down-up algebras need beta != 0")


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: tuple[NcPoly, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            if r.alphabet != self.alphabet:
                raise ValueError("relation over a different alphabet")
            if not r:
                raise ValueError("zero relation in presentation")
            if not r.is_homogeneous():
                raise ValueError(f"relation {r.format()} is not homogeneous")

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    def default_order(self) -> MonomialOrder:
        names = self.alphabet.names
        if names == ["u", "d"]:
            return MonomialOrder.from_names(self.alphabet, ["u", "d"])
        return MonomialOrder.default(self.alphabet)

    def poly(self, pairs) -> NcPoly:
        return NcPoly.from_terms(self.alphabet, pairs)


def downup(alpha: ScalarLike | DownUpParams, beta: ScalarLike | None = None) -> Presentation:
    params = alpha if isinstance(alpha, DownUpParams) else DownUpParams(alpha, beta)
    a, b = params.alpha, params.beta
    ab = Alphabet.from_names(["u", "d"])
    r1 = NcPoly.from_terms(ab, [(1, "uud"), (-a, "udu"), (-b, "duu")])
    r2 = NcPoly.from_terms(ab, [(1, "udd"), (-a, "dud"), (-b, "ddu")])
    return Presentation(ab, (r1, r2), f"D({a},{b})")


def algebra_F() -> Presentation:
    ab = Alphabet.from_names(["x", "y"])
    r1 = NcPoly.from_terms(ab, [(1, "xxx"), (-1, "yxy")])
    r2 = NcPoly.from_terms(ab, [(1, "yyy"), (-1, "xyx")])
    return Presentation(ab, (r1, r2), "F")


def algebra_H() -> Presentation:
    ab = Alphabet.from_names(["x", "y"])
    r1 = NcPoly.from_terms(ab, [(1, "xxy"), (1, "yxx"), (-2, "yyy")])
    r2 = NcPoly.from_terms(ab, [(-2, "xxx"), (1, "xyy"), (1, "yyx")])
    return Presentation(ab, (r1, r2), "H")


def free_algebra(names: Sequence[str], weights: Sequence[int] | None = None) -> Presentation:
    return Presentation(Alphabet.from_names(names, weights), (), "free")


# ---------------------------------------------------------------- bases


@dataclass(frozen=True)
class BasisTable:
    """Normal words of degree 0..N, each row sorted ascending in ``system.order``."""

    presentation: Presentation
    system: ReductionSystem
    rows: tuple[tuple[Word, ...], ...]

    @property
    def max_degree(self) -> int:
        return len(self.rows) - 1

    def dims(self) -> list[int]:
        return [len(r) for r in self.rows]

    def __getitem__(self, n: int) -> tuple[Word, ...]:
        return self.rows[n]


def normal_words(system: ReductionSystem, N: int) -> list[list[Word]]:
    """Words of degree <= N containing no lhs, built by right extension.

    A word is normal iff its longest proper prefix is normal and no lhs is a
    suffix of it, so each row is grown from earlier rows.
    """
    ab = system.alphabet
    weights = ab.weights
    lhs = set(system.lhs_set())
    lengths = sorted({len(w) for w in lhs})
    rows: list[list[Word]] = [[()]]
    for n in range(1, N + 1):
        row = []
        for i, wt in enumerate(weights):
            if wt > n:
                continue
            for w in rows[n - wt]:
                cand = w + (i,)
                if not any(L <= len(cand) and cand[-L:] in lhs for L in lengths):
                    row.append(cand)
        rows.append(system.order.sorted(row))
    return rows


def completed_system(p: Presentation, order: MonomialOrder | None, N: int) -> ReductionSystem:
    order = order or p.default_order()
    bound = max(N, p.max_relation_degree())
    return complete(p.relations, order, bound)


def normal_basis(p: Presentation, order: MonomialOrder | None, N: int) -> BasisTable:
    if N < 0:
        raise ValueError("N must be non-negative")
    sys = completed_system(p, order, N)
    rows = normal_words(sys, N)
    return BasisTable(p, sys, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------- oracle


def oracle_dims(p: Presentation, N: int, method: str = "incremental") -> list[int]:
    """dim A_n for n <= N by exact row reduction, without rewriting.

    ``method="naive"`` builds, for each n, the full span of all products
    w1*r*w2 of degree n inside the free words of degree n and subtracts
    its rank. ``method="incremental"`` computes the same numbers using
    I_n = sum_x I_{n-wt(x)} x + sum_r V^{n-deg r} r, which lets each
    degree be reduced inside (A_{n-1} (x) V) instead of the whole free
    degree-n space.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if method == "naive":
        return _oracle_naive(p, N)
    if method != "incremental":
        raise ValueError(f"unknown oracle method {method!r}")
    return _oracle_incremental(p, N)[0]


def _oracle_naive(p: Presentation, N: int) -> list[int]:
    ab = p.alphabet
    dims = []
    for n in range(N + 1):
        ech = Echelon()
        for r in p.relations:
            d = r.degree()
            for k in range(0, n - d + 1):
                for w1 in words_of_degree(ab, k):
                    for w2 in words_of_degree(ab, n - d - k):
                        ech.add({w1 + m + w2: c for m, c in r.items()})
        dims.append(len(words_of_degree(ab, n)) - ech.rank)
    return dims


def _oracle_incremental(p: Presentation, N: int):
    ab = p.alphabet
    weights = ab.weights
    # nf[n] maps each free word of degree n to its coordinates on standard words
    nf: list[dict[Word, dict]] = [{(): {(): Fraction(1)}}]
    dims = [1]

    def lifted(w: Word, n: int) -> dict:
        # coordinates of w in (+)_x A_{n-wt(x)} x, before relations of degree n
        head, last = w[:-1], w[-1]
        return {s + (last,): c for s, c in nf[n - weights[last]][head].items()}

    for n in range(1, N + 1):
        ambient = sum(dims[n - wt] for wt in weights if wt <= n)
        ech = Echelon()
        for r in p.relations:
            d = r.degree()
            if d > n:
                continue
            for w1 in words_of_degree(ab, n - d):
                vec: dict = {}
                for m, c in r.items():
                    for k, v in lifted(w1 + m, n).items():
                        vec[k] = vec.get(k, 0) + c * v
                ech.add(vec)
        dims.append(ambient - ech.rank)
        nf.append({w: ech.reduce(lifted(w, n)) for w in words_of_degree(ab, n)})
    return dims, nf


# ---------------------------------------------------------------- series


def series_expand(numerator: Sequence[int], denominator: Sequence[int], N: int) -> list[Fraction]:
    """Power-series coefficients of numerator/denominator through t^N."""
    if not denominator or denominator[0] == 0:
        raise ValueError("denominator needs a nonzero constant term")
    den = [Fraction(c) for c in denominator]
    num = [Fraction(c) for c in numerator]
    out: list[Fraction] = []
    for n in range(N + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / den[0])
    return out


def poly_from_factors(*factors: Sequence[int]) -> list[int]:
    """Multiply integer polynomials given as coefficient lists."""
    out = [1]
    for f in factors:
        prod = [0] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                prod[i + j] += a * b
        out = prod
    return out


# ((1-t)^2 (1-t^2))^-1
DOWNUP_DENOMINATOR = poly_from_factors([1, -1], [1, -1], [1, 0, -1])


def hilbert_matches_closed_form(coeffs: Sequence[int], numerator: Sequence[int],
                                denominator: Sequence[int], N: int) -> bool:
    if len(coeffs) < N + 1:
        return False
    expected = series_expand(numerator, denominator, N)
    return all(Fraction(coeffs[n]) == expected[n] for n in range(N + 1))


@dataclass(frozen=True)
class HilbertSeries:
    coeffs: tuple[int, ...]
    numerator: tuple[int, ...] | None = None
    denominator: tuple[int, ...] | None = None

    def matches(self) -> bool:
        if self.numerator is None or self.denominator is None:
            raise ValueError("no closed form attached")
        return hilbert_matches_closed_form(self.coeffs, self.numerator, self.denominator,
                                           len(self.coeffs) - 1)


# ---------------------------------------------------------------- F words

_AB_FREE = [(0, 0), (1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2)]
_AB_AFTER_J = [(1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2)]
_AB_AFTER_EK = [(1, 0), (2, 0), (2, 1), (2, 2)]


def pattern_words_F(N: int) -> list[list[Word]]:
    """Words x^i (yx^3)^j (yx^2)^e (y^2x^2)^k y^a x^b of degree <= N, with
    (a, b) restricted according to which middle blocks occur."""
    x, y = 0, 1
    rows: list[set[Word]] = [set() for _ in range(N + 1)]
    for j in range(N // 4 + 1):
        for e in (0, 1):
            for k in range(N // 4 + 1):
                if e + k > 0:
                    allowed = _AB_AFTER_EK
                elif j > 0:
                    allowed = _AB_AFTER_J
                else:
                    allowed = _AB_FREE
                middle = (y, x, x, x) * j + (y, x, x) * e + (y, y, x, x) * k
                for a, b in allowed:
                    tail = (y,) * a + (x,) * b
                    base = len(middle) + len(tail)
                    for i in range(0, N - base + 1):
                        rows[i + base].add((x,) * i + middle + tail)
    return [sorted(r) for r in rows]


def pattern_basis_F(N: int, order: MonomialOrder | None = None) -> BasisTable:
    F = algebra_F()
    order = order or F.default_order()
    sys = completed_system(F, order, N)
    rows = [order.sorted(r) for r in pattern_words_F(N)]
    return BasisTable(F, sys, tuple(tuple(r) for r in rows))


@dataclass
class LeftSubwordResult:
    ok: bool
    checked: int = 0
    violations: list = field(default_factory=list)  # (f, a, b) triples


def left_subword_check(s: int, N: int, system: ReductionSystem | None = None) -> LeftSubwordResult:
    """Check in F: if f is a subword of (y^2x^2)^s of degree <= N and the
    normal form of a*b is exactly f, then a is a prefix of f."""
    if s < 1:
        raise ValueError("s must be at least 1")
    F = algebra_F()
    sys = system or completed_system(F, None, N)
    ab = F.alphabet
    base = ab.word("yyxx") * s
    targets = {base[i:j] for i in range(len(base)) for j in range(i + 1, len(base) + 1)
               if j - i <= N}
    by_degree: dict[int, set[Word]] = {}
    for f in targets:
        by_degree.setdefault(len(f), set()).add(f)
    res = LeftSubwordResult(True)
    for n, fs in sorted(by_degree.items()):
        for w in words_of_degree(ab, n):
            nf = sys.normal_form_word(w)
            if len(nf) != 1:
                continue
            (f, c), = nf.items()
            if c != 1 or f not in fs:
                continue
            for cut in range(n + 1):
                res.checked += 1
                a, b = w[:cut], w[cut:]
                if f[:cut] != a:
                    res.ok = False
                    res.violations.append((f, a, b))
    return res


# ---------------------------------------------------------------- maps


def linearly_independent(polys: Sequence[NcPoly], p: Presentation,
                         order: MonomialOrder | None = None, N: int | None = None,
                         system: ReductionSystem | None = None) -> bool:
    if N is None:
        N = max((max(q.degrees(), default=0) for q in polys), default=0)
    sys = system or completed_system(p, order, N)
    ech = Echelon(key=sys.order.key)
    return all(ech.add(sys.reduce(q).terms) for q in polys)


def degree_one_matrix(images: Mapping[str, NcPoly], source: Alphabet, target: Alphabet):
    """Coefficient matrix of the weight-1 generator images on target letters."""
    rows = []
    for sym in source:
        if sym.weight != 1:
            continue
        img = images.get(sym.name)
        if img is None:
            img = NcPoly.monomial(target, (target.index(sym.name),))
        rows.append([img.coeff((j,)) for j in range(len(target))])
    return rows


def is_invertible_substitution(images: Mapping[str, NcPoly], source: Alphabet, target: Alphabet) -> bool:
    m = degree_one_matrix(images, source, target)
    n_target = sum(1 for s in target if s.weight == 1)
    if len(m) != n_target or len(source) != len(target):
        return False
    ech = Echelon()
    return all(ech.add({j: v for j, v in enumerate(row)}) for row in m)


def relation_image(p: Presentation, sub: Mapping[str, NcPoly], target: Presentation,
                   order: MonomialOrder | None = None, N: int | None = None) -> list[NcPoly]:
    """Normal forms in ``target`` of the relations of ``p`` pushed through
    ``sub``. An all-zero result certifies that ``sub`` defines an algebra
    map p -> target."""
    if not is_invertible_substitution(sub, p.alphabet, target.alphabet):
        raise ValueError("substitution is not an invertible change of degree-one generators")
    N = N if N is not None else max(p.max_relation_degree(), target.max_relation_degree())
    sys = completed_system(target, order, N)
    return [sys.reduce(substitute(r, sub)) for r in p.relations]


def linear_images(target: Alphabet, spec: Mapping[str, Sequence[tuple[ScalarLike, str]]]) -> dict[str, NcPoly]:
    """``linear_images(ab, {"x": [(1, "u"), (1, "d")]})`` -> {"x": u + d}."""
    return {g: NcPoly.from_terms(target, terms) for g, terms in spec.items()}


def substituted_dims(p: Presentation, matrix: Sequence[Sequence[ScalarLike]], N: int) -> list[int]:
    """oracle_dims of the presentation obtained by an invertible linear change
    of the (weight-one) generators. ``matrix[i][j]`` is the coefficient of
    letter j in the new image of generator i."""
    ab = p.alphabet
    if any(w != 1 for w in ab.weights) or len(matrix) != len(ab) or \
            rank([{j: as_scalar(c) for j, c in enumerate(row)} for row in matrix]) != len(ab):
        raise ValueError("substitution matrix must be square, invertible and act on weight-one generators")
    images = {sym.name: NcPoly(ab, {(j,): matrix[i][j] for j in range(len(ab))})
              for i, sym in enumerate(ab)}
    rels = tuple(substitute(r, images) for r in p.relations)
    return oracle_dims(Presentation(ab, rels, p.label + "'"), N)


__all__ = [
    "BasisTable", "DownUpParams", "HilbertSeries", "LeftSubwordResult", "Presentation",
    "algebra_F", "algebra_H", "completed_system", "downup", "free_algebra",
    "hilbert_matches_closed_form", "left_subword_check", "linearly_independent",
    "normal_basis", "normal_words", "oracle_dims", "pattern_basis_F", "pattern_words_F",
    "relation_image", "series_expand", "DOWNUP_DENOMINATOR", "poly_from_factors",
    "substituted_dims", "linear_images", "is_invertible_substitution",
]
