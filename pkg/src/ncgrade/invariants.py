"""Fixed subrings of group gradings and their structure.

Everything here is truncated at a degree bound N. In particular the
generator-count obstruction only says that no generating set of size <= 3
exists among elements of degree <= N; combined with the fact that an AS
regular algebra of global dimension three needs at most three generators,
a count above three is evidence (never proof beyond N) of non-regularity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BasisTable, DownUpParams, downup
from .core import NcPoly, Word
from .grading import (
    FiniteGroup,
    GradedBasis,
    Grading,
    g_degree,
    is_admissible_grading,
)
from .linalg import Echelon
from .rewrite import ReductionSystem

AS_REGULAR_GENERATOR_LIMIT = 3
OBSTRUCTION_ASSUMPTION = (
    "noetherian connected graded AS regular algebras of global dimension three are generated "
    "by two or three elements, and a regular fixed subring here would have global dimension "
    f"three; threshold {AS_REGULAR_GENERATOR_LIMIT} is assumed, counts are verified up to the degree bound"
)


def fixed_ring_basis(gb: GradedBasis) -> BasisTable:
    e = gb.grading.group.identity
    rows = tuple(gb.component(n, e) for n in range(gb.basis.max_degree + 1))
    return BasisTable(gb.basis.presentation, gb.basis.system, rows)


@dataclass
class GeneratorReport:
    generators: list[tuple[int, NcPoly]]
    complete_to: int
    obstruction_flag: bool
    span_dims: list[int] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=lambda: [OBSTRUCTION_ASSUMPTION])

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.generators]

    @property
    def count(self) -> int:
        return len(self.generators)


def minimal_generators(fixed: BasisTable, sys: ReductionSystem | None = None, N: int | None = None) -> GeneratorReport:
    """Greedy minimal homogeneous generators of the subalgebra spanned by
    ``fixed``: degree by degree, extend the span of products of earlier
    generators by the smallest normal words still missing."""
    sys = sys or fixed.system
    N = fixed.max_degree if N is None else N
    if N > fixed.max_degree:
        raise ValueError(f"basis only known to degree {fixed.max_degree}")
    key = sys.order.key
    one = NcPoly.one(sys.alphabet)
    spans = [Echelon(key)]
    spans[0].add(one.terms)
    gens: list[tuple[int, NcPoly]] = []
    dims = [1]
    for n in range(1, N + 1):
        ech = Echelon(key)
        for d, g in gens:
            for row in spans[n - d].rows.values():
                ech.add(sys.reduce(NcPoly(sys.alphabet, row) * g).terms)
        for w in sorted(fixed.rows[n], key=key):
            if ech.add({w: 1}):
                gens.append((n, NcPoly.monomial(sys.alphabet, w)))
        spans.append(ech)
        dims.append(ech.rank)
    return GeneratorReport(gens, N, len(gens) > AS_REGULAR_GENERATOR_LIMIT, dims)


def _products_rank(gens: list[tuple[int, NcPoly]], sys: ReductionSystem, n: int) -> int:
    """Rank of all ordered products of generators with total degree n
    (enumerated directly rather than grown degree by degree)."""
    ech = Echelon(sys.order.key)
    one = NcPoly.one(sys.alphabet)

    def walk(prefix: NcPoly, remaining: int):
        if remaining == 0:
            ech.add(sys.reduce(prefix).terms)
            return
        for d, g in gens:
            if d <= remaining:
                walk(sys.reduce(prefix * g), remaining - d)

    walk(one, n)
    return ech.rank


def reconstruction_holds(report: GeneratorReport, fixed: BasisTable, sys: ReductionSystem | None = None) -> list[int]:
    """Degrees n <= complete_to where products of the generators fail to span
    the fixed component; empty list means reconstruction holds."""
    sys = sys or fixed.system
    return [n for n in range(report.complete_to + 1)
            if _products_rank(report.generators, sys, n) != len(fixed.rows[n])]


def is_minimal(report: GeneratorReport, fixed: BasisTable, sys: ReductionSystem | None = None) -> bool:
    """Dropping any generator loses span at that generator's own degree."""
    sys = sys or fixed.system
    for i, (d, _) in enumerate(report.generators):
        rest = report.generators[:i] + report.generators[i + 1:]
        if _products_rank(rest, sys, d) == len(fixed.rows[d]):
            return False
    return True


@dataclass
class ComponentCertificate:
    component: int
    module_generators: list[Word]
    verified_to: int
    free_rank_one: bool
    spans: bool
    failed_degrees: list[int] = field(default_factory=list)
    dims: list[int] = field(default_factory=list)


def verify_component(gb: GradedBasis, g: int, module_gens: list[Word], N: int | None = None,
                     sys: ReductionSystem | None = None) -> ComponentCertificate:
    """Check that A_g = sum_m m * A_e in every degree <= N."""
    sys = sys or gb.basis.system
    N = gb.basis.max_degree if N is None else N
    if N > gb.basis.max_degree:
        raise ValueError(f"basis only known to degree {gb.basis.max_degree}")
    grading = gb.grading
    e = grading.group.identity
    ab = sys.alphabet
    for m in module_gens:
        if g_degree(m, grading) != g:
            raise ValueError(f"module generator {ab.format_word(m)} is not in component "
                             f"{grading.group.name(g)}")
    failed = []
    dims = []
    for n in range(N + 1):
        comp = set(gb.component(n, g))
        dims.append(len(comp))
        ech = Echelon(sys.order.key)
        inside = True
        for m in module_gens:
            dm = ab.degree(m)
            if dm > n:
                continue
            for w in gb.component(n - dm, e):
                v = sys.normal_form_word(m + w)
                if any(k not in comp for k in v):
                    inside = False
                ech.add(v)
        if not inside or ech.rank != len(comp):
            failed.append(n)
    free = False
    if len(module_gens) == 1:
        dm = ab.degree(module_gens[0])
        free = all(len(gb.component(n, g)) == (len(gb.component(n - dm, e)) if n >= dm else 0)
                   for n in range(N + 1))
    return ComponentCertificate(g, list(module_gens), N, free and not failed, not failed, failed, dims)


def longest_element(group: FiniteGroup, g1: int, g2: int) -> int:
    """Longest element of a dihedral group of order 2n for the Coxeter
    generators g1, g2: (g1 g2)^((n-1)/2) g1 for odd n, (g1 g2)^(n/2) for even n."""
    e = group.identity
    for g in (g1, g2):
        if g == e or group.mul(g, g) != e:
            raise ValueError(f"{group.name(g)} is not a reflection")
    if g1 == g2 or len(group.subgroup_generated([g1, g2])) != group.size:
        raise ValueError("g1 and g2 do not generate the group")
    n = group.size // 2
    if n % 2:
        return group.mul(group.power(group.mul(g1, g2), (n - 1) // 2), g1)
    return group.power(group.mul(g1, g2), n // 2)


def occupied_degrees(gb: GradedBasis, g: int) -> list[int]:
    return [n for n in range(gb.basis.max_degree + 1) if gb.component(n, g)]


def hdet_codeterminant(params: DownUpParams, grading: Grading) -> int:
    """(deg u)^2 (deg d)^2 for a grading of D(alpha, beta) in which u and d
    are homogeneous.

    This reproduces the one worked dihedral instance (g1^2 g2^2 with the
    squares central); it is not derived from local cohomology.
    """
    p = downup(params)
    if not is_admissible_grading(p, grading):
        raise ValueError("grading is not admissible for this down-up algebra")
    G = grading.group
    gu, gd = grading.assignment
    return G.mul(gu, gu, gd, gd)

