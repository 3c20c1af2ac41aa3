"""Finite groups as multiplication tables and group gradings of graded
algebras (equivalently, homogeneous coactions of the group).

Group elements are plain ints indexing into a :class:`FiniteGroup`.
The G-degree of a word is the product of its letters' images taken left to
right, so deg(du) = deg(d) * deg(u).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import BasisTable, Presentation
from .core import NcPoly, Word

GroupElement = int


class GroupAxiomError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    identity: int
    names: tuple[str, ...]
    label: str = ""
    inverses: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", tuple(self.names))
        n = len(table)
        if n < 1:
            raise GroupAxiomError("a group needs at least one element")
        if len(self.names) != n or len(set(self.names)) != n:
            raise GroupAxiomError("need one distinct name per element")
        full = set(range(n))
        for row in table:
            if len(row) != n or set(row) != full:
                raise GroupAxiomError("table rows must be permutations of the elements")
        for j in range(n):
            if {table[i][j] for i in range(n)} != full:
                raise GroupAxiomError("table columns must be permutations of the elements")
        e = self.identity
        if not (0 <= e < n) or any(table[e][a] != a or table[a][e] != a for a in range(n)):
            raise GroupAxiomError("identity law fails")
        for a in range(n):
            ta = table[a]
            for b in range(n):
                tab = table[ta[b]]
                tb = table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupAxiomError(
                            f"associativity fails at ({self.names[a]}, {self.names[b]}, {self.names[c]})")
        inv = tuple(table[a].index(e) for a in range(n))
        object.__setattr__(self, "inverses", inv)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def mul(self, *elements: int) -> int:
        out = self.identity
        for g in elements:
            out = self.table[out][g]
        return out

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][g]
        return out

    def order_of(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def element(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r} in {self.label or 'group'}; "
                           f"elements are {list(self.names)}") from None

    def name(self, g: int) -> str:
        return self.names[g]

    def is_abelian(self) -> bool:
        t = self.table
        n = self.size
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def is_central(self, g: int) -> bool:
        return all(self.table[g][h] == self.table[h][g] for h in range(self.size))

    def subgroup_generated(self, gens: Sequence[int]) -> frozenset[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    x = self.table[h][g]
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return frozenset(seen)


def cyclic(n: int) -> FiniteGroup:
    """Z/n with elements named "0", ..., "n-1" (additive notation)."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, 0, [str(a) for a in range(n)], f"C{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order 2n.

    Element ``rho^a r^s`` sits at index ``a + n*s`` and is named "e",
    "rho", "rho^2", ..., "r", "rho r", "rho^2 r", ...; ``r rho r = rho^-1``.
    """
    if order % 2 or order < 4:
        raise ValueError("dihedral groups have even order >= 4")
    n = order // 2

    def name(a, s):
        rot = "" if a == 0 else ("rho" if a == 1 else f"rho^{a}")
        if s == 0:
            return rot or "e"
        return f"{rot} r".strip()

    def idx(a, s):
        return a % n + n * s

    table = [[0] * order for _ in range(order)]
    for a in range(n):
        for s in (0, 1):
            for b in range(n):
                for t in (0, 1):
                    table[idx(a, s)][idx(b, t)] = idx(a + (-b if s else b), (s + t) % 2)
    names = [name(a, s) for s in (0, 1) for a in range(n)]
    return FiniteGroup(table, 0, names, f"D{order}")


def quaternion8() -> FiniteGroup:
    """Q8 with elements "1", "-1", "i", "-i", "j", "-j", "k", "-k"."""
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    axes = ["1", "i", "j", "k"]
    mult = {  # axis product -> (sign, axis)
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, a) for a in axes for s in (1, -1)]
    names = [("" if s == 1 else "-") + a for s, a in elems]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, a1 in elems:
        row = []
        for s2, a2 in elems:
            s, a = mult[(a1, a2)]
            row.append(index[(s1 * s2 * s, a)])
        table.append(row)
    return FiniteGroup(table, 0, names, "Q8")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with elements named "(g,h)"; index of (g, h) is g*|H| + h."""
    m = H.size
    size = G.size * m
    table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(size)]
             for a in range(size)]
    names = [f"({G.names[a]},{H.names[b]})" for a in range(G.size) for b in range(m)]
    return FiniteGroup(table, G.identity * m + H.identity, names, f"{G.label}x{H.label}")


def from_table(table, identity: int = 0, names: Sequence[str] | None = None, label: str = "") -> FiniteGroup:
    names = list(names) if names is not None else [str(i) for i in range(len(table))]
    return FiniteGroup(table, identity, names, label)


# ---------------------------------------------------------------- gradings


@dataclass(frozen=True)
class Grading:
    group: FiniteGroup
    assignment: tuple[int, ...]  # generator index -> element

    @classmethod
    def from_names(cls, presentation_or_alphabet, group: FiniteGroup,
                   mapping: Mapping[str, str | int]) -> "Grading":
        ab = getattr(presentation_or_alphabet, "alphabet", presentation_or_alphabet)
        missing = [n for n in ab.names if n not in mapping]
        if missing:
            raise ValueError(f"grading does not assign generators {missing}")
        extra = [n for n in mapping if n not in ab.names]
        if extra:
            raise ValueError(f"grading assigns unknown generators {extra}")
        assignment = []
        for n in ab.names:
            v = mapping[n]
            assignment.append(group.element(v) if isinstance(v, str) else int(v))
        return cls(group, tuple(assignment))

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for g in self.assignment:
            if not (0 <= g < self.group.size):
                raise ValueError(f"element index {g} out of range")

    def describe(self, alphabet) -> dict[str, str]:
        return {sym.name: self.group.name(g) for sym, g in zip(alphabet, self.assignment)}


def g_degree(w: Word, grading: Grading) -> int:
    G = grading.group
    out = G.identity
    a = grading.assignment
    t = G.table
    for letter in w:
        out = t[out][a[letter]]
    return out


def g_support(p: NcPoly, grading: Grading) -> list[int]:
    """Distinct G-degrees of the terms of ``p``, in order of first appearance."""
    seen: list[int] = []
    for w in p.words():
        g = g_degree(w, grading)
        if g not in seen:
            seen.append(g)
    return seen


def homogeneous_component(p: NcPoly, grading: Grading) -> int | None:
    """Common G-degree of every term of ``p``, or None when ``p`` is not
    G-homogeneous (use :func:`g_support` for the offending degrees)."""
    if not p:
        raise ValueError("zero polynomial has no G-degree")
    support = g_support(p, grading)
    return support[0] if len(support) == 1 else None


def is_admissible_grading(p: Presentation, grading: Grading) -> bool:
    if len(grading.assignment) != len(p.alphabet):
        return False
    return all(homogeneous_component(r, grading) is not None for r in p.relations)


def is_inner_faithful(grading: Grading) -> bool:
    G = grading.group
    return len(G.subgroup_generated(grading.assignment)) == G.size


@dataclass(frozen=True)
class GradedBasis:
    basis: BasisTable
    grading: Grading
    components: dict  # (n, g) -> tuple of words

    def component(self, n: int, g: int) -> tuple[Word, ...]:
        return self.components.get((n, g), ())

    def dims(self, g: int) -> list[int]:
        return [len(self.component(n, g)) for n in range(self.basis.max_degree + 1)]

    def table(self) -> dict[int, list[int]]:
        """element -> dimension sequence over degrees 0..N"""
        return {g: self.dims(g) for g in range(self.grading.group.size)}


def graded_decompose(basis: BasisTable, grading: Grading) -> GradedBasis:
    if not is_admissible_grading(basis.presentation, grading):
        raise ValueError("grading is not admissible: some relation is not G-homogeneous")
    comps: dict[tuple[int, int], list[Word]] = {}
    for n, row in enumerate(basis.rows):
        for w in row:
            comps.setdefault((n, g_degree(w, grading)), []).append(w)
    return GradedBasis(basis, grading, {k: tuple(v) for k, v in comps.items()})
