"""Graded rewriting: rules oriented by a monomial order, normal forms,
overlap/inclusion ambiguities and degree-bounded completion.

Completion works one degree at a time. Because every relation is
homogeneous, rules of degree n only ever touch words of degree >= n, so
once all ambiguities of degree <= n resolve they stay resolved while
higher-degree rules are added. The resulting system is confluent on every
element of degree <= ``confluence_bound``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .core import Alphabet, MonomialOrder, NcPoly, Word


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NcPoly

    def relation(self) -> NcPoly:
        """The polynomial ``lhs - rhs`` this rule encodes."""
        return NcPoly.monomial(self.rhs.alphabet, self.lhs) - self.rhs

    def format(self, order: MonomialOrder | None = None) -> str:
        return f"{self.rhs.alphabet.format_word(self.lhs)} -> {self.rhs.format(order)}"


def make_rule(r: NcPoly, order: MonomialOrder) -> RewriteRule:
    if not r:
        raise ValueError("cannot orient the zero polynomial")
    if not r.is_homogeneous():
        raise ValueError(f"relation {r.format()} is not homogeneous")
    lead, c = order.leading(r)
    rest = {w: -v / c for w, v in r.items() if w != lead}
    return RewriteRule(lead, NcPoly(r.alphabet, rest))


@dataclass(frozen=True)
class Ambiguity:
    word: Word
    first: int   # index of the rule applied at position 0
    second: int  # index of the rule applied at ``offset``
    offset: int
    kind: str    # "overlap" or "inclusion"


@dataclass(frozen=True)
class ReductionSystem:
    order: MonomialOrder
    rules: tuple[RewriteRule, ...] = ()
    confluence_bound: int = 0
    _by_lhs: dict = field(init=False, repr=False, compare=False, hash=False)
    _lengths: tuple = field(init=False, repr=False, compare=False, hash=False)
    _cache: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        by_lhs = {}
        for r in self.rules:
            if not r.lhs:
                raise ValueError("rule with empty left-hand side")
            by_lhs.setdefault(r.lhs, r)
        object.__setattr__(self, "_by_lhs", by_lhs)
        object.__setattr__(self, "_lengths", tuple(sorted({len(r.lhs) for r in self.rules})))
        object.__setattr__(self, "_cache", {})

    @property
    def alphabet(self) -> Alphabet:
        return self.order.alphabet

    def lhs_set(self) -> list[Word]:
        return [r.lhs for r in self.rules]

    def relations(self) -> list[NcPoly]:
        return [r.relation() for r in self.rules]

    def with_rules(self, rules: Iterable[RewriteRule], confluence_bound: int | None = None) -> "ReductionSystem":
        bound = self.confluence_bound if confluence_bound is None else confluence_bound
        return ReductionSystem(self.order, tuple(rules), bound)

    def find(self, w: Word) -> tuple[int, RewriteRule] | None:
        """Leftmost occurrence of any lhs in ``w`` (shortest lhs first)."""
        by_lhs = self._by_lhs
        n = len(w)
        for i in range(n):
            for L in self._lengths:
                if i + L > n:
                    break
                r = by_lhs.get(w[i:i + L])
                if r is not None:
                    return i, r
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None

    def normal_form_word(self, w: Word) -> dict[Word, Fraction]:
        w = tuple(w)
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        key = self.order.key
        result: dict[Word, Fraction] = {}
        work: dict[Word, Fraction] = {w: Fraction(1)}
        while work:
            top = max(work, key=key)
            c = work.pop(top)
            known = self._cache.get(top) if top != w else None
            if known is not None:
                _axpy(result, c, known)
                continue
            hit = self.find(top)
            if hit is None:
                _axpy(result, c, {top: Fraction(1)})
                continue
            i, rule = hit
            pre, post = top[:i], top[i + len(rule.lhs):]
            for t, d in rule.rhs.items():
                _axpy(work, c * d, {pre + t + post: Fraction(1)})
        self._cache[w] = result
        return result

    def reduce(self, p: NcPoly) -> NcPoly:
        if p.alphabet != self.alphabet:
            raise ValueError("polynomial and reduction system use different alphabets")
        out: dict[Word, Fraction] = {}
        for w, c in p.items():
            _axpy(out, c, self.normal_form_word(w))
        return NcPoly._raw(self.alphabet, out)

    def format(self) -> str:
        return "\n".join(r.format(self.order) for r in self.rules)


def _axpy(acc: dict, c: Fraction, vec: dict) -> None:
    for k, v in vec.items():
        nv = acc.get(k, 0) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def reduce(p: NcPoly, sys: ReductionSystem) -> NcPoly:
    return sys.reduce(p)


def find_ambiguities(sys: ReductionSystem, bound: int) -> list[Ambiguity]:
    """Every overlap and inclusion ambiguity whose word has degree <= bound,
    sorted by degree, then word order, then rule indices."""
    alphabet = sys.alphabet
    found = []
    rules = sys.rules
    for i, ri in enumerate(rules):
        a = ri.lhs
        for j, rj in enumerate(rules):
            b = rj.lhs
            # overlap: proper suffix of a equals proper prefix of b
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k:] == b[:k]:
                    w = a + b[k:]
                    if alphabet.degree(w) <= bound:
                        found.append(Ambiguity(w, i, j, len(a) - k, "overlap"))
            # inclusion: b occurs inside a
            if i != j and len(b) <= len(a) and alphabet.degree(a) <= bound:
                for pos in range(len(a) - len(b) + 1):
                    if a[pos:pos + len(b)] == b:
                        found.append(Ambiguity(a, i, j, pos, "inclusion"))
    key = sys.order.key
    found.sort(key=lambda amb: (key(amb.word), amb.first, amb.second, amb.offset))
    return found


def _one_step_pair(sys: ReductionSystem, amb: Ambiguity) -> tuple[NcPoly, NcPoly]:
    ab = sys.alphabet
    ri, rj = sys.rules[amb.first], sys.rules[amb.second]
    w = amb.word
    tail = NcPoly.monomial(ab, w[len(ri.lhs):])
    left = ri.rhs * tail
    pre = NcPoly.monomial(ab, w[:amb.offset])
    post = NcPoly.monomial(ab, w[amb.offset + len(rj.lhs):])
    right = pre * rj.rhs * post
    return left, right


def ambiguity_difference(sys: ReductionSystem, amb: Ambiguity) -> NcPoly:
    """Normal form of the difference of the two reductions of ``amb``."""
    left, right = _one_step_pair(sys, amb)
    return sys.reduce(left - right)


def is_confluent_up_to(sys: ReductionSystem, n: int) -> bool:
    return all(not ambiguity_difference(sys, amb) for amb in find_ambiguities(sys, n))


def unresolved_ambiguities(sys: ReductionSystem, n: int) -> list[tuple[Ambiguity, NcPoly]]:
    out = []
    for amb in find_ambiguities(sys, n):
        d = ambiguity_difference(sys, amb)
        if d:
            out.append((amb, d))
    return out


def _add_rule(sys: ReductionSystem, rule: RewriteRule) -> ReductionSystem:
    """Append ``rule`` and keep the system inter-reduced.

    The new lhs is normal for ``sys``, so only right-hand sides (and any
    lhs strictly containing the new one) can be affected.
    """
    kept: list[RewriteRule] = []
    displaced: list[NcPoly] = []
    for r in sys.rules:
        if _contains(r.lhs, rule.lhs):
            displaced.append(r.relation())
        else:
            kept.append(r)
    current = sys.with_rules(kept + [rule])
    # normalise right-hand sides until stable
    while True:
        new_rules = []
        changed = False
        for r in current.rules:
            # rhs words are below r.lhs in the order, so r never rewrites its own rhs
            rhs = current.reduce(r.rhs)
            if rhs != r.rhs:
                changed = True
            new_rules.append(RewriteRule(r.lhs, rhs))
        current = current.with_rules(new_rules)
        if not changed:
            break
    for p in displaced:
        h = current.reduce(p)
        if h:
            current = _add_rule(current, make_rule(h, current.order))
    return current


def _contains(word: Word, sub: Word) -> bool:
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))


def complete(initial: Iterable[NcPoly], order: MonomialOrder, bound: int) -> ReductionSystem:
    """Degree-bounded completion of homogeneous relations.

    The returned system is inter-reduced and every ambiguity of degree
    <= ``bound`` resolves, so its normal words of degree <= ``bound`` form a
    basis of the quotient algebra in those degrees.
    """
    rels = [p for p in initial]
    alphabet = order.alphabet
    by_degree: dict[int, list[NcPoly]] = {}
    for p in rels:
        if p.alphabet != alphabet:
            raise ValueError("relation and order use different alphabets")
        if not p:
            raise ValueError("zero relation")
        if not p.is_homogeneous():
            raise ValueError(f"relation {p.format()} is not homogeneous")
        d = p.degree()
        if d > bound:
            raise ValueError(f"bound {bound} is below relation degree {d}")
        by_degree.setdefault(d, []).append(p)

    sys = ReductionSystem(order, (), 0)
    for n in range(bound + 1):
        pending = list(by_degree.get(n, []))
        while True:
            for p in pending:
                h = sys.reduce(p)
                if h:
                    sys = _add_rule(sys, make_rule(h, order))
            pending = []
            for amb in find_ambiguities(sys, n):
                if alphabet.degree(amb.word) != n:
                    continue
                d = ambiguity_difference(sys, amb)
                if d:
                    pending.append(d)
            if not pending:
                break
    return sys.with_rules(sys.rules, confluence_bound=bound)
