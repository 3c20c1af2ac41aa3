"""Words over a weighted alphabet, noncommutative polynomials with exact
rational coefficients, and degree-lexicographic monomial orders.

Words are plain tuples of generator indices into an :class:`Alphabet`.
The empty tuple is the unit monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Word = tuple  # tuple[int, ...]
Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused so that nothing inexact leaks in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class GeneratorSymbol:
    name: str
    weight: int = 1

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator name must be nonempty")
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError(f"generator {self.name!r} needs a positive integer weight")


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[GeneratorSymbol, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = [s.name for s in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def from_names(cls, names: Iterable[str], weights: Sequence[int] | None = None) -> "Alphabet":
        names = list(names)
        weights = list(weights) if weights is not None else [1] * len(names)
        return cls(tuple(GeneratorSymbol(n, w) for n, w in zip(names, weights)))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[GeneratorSymbol]:
        return iter(self.symbols)

    @property
    def names(self) -> list[str]:
        return [s.name for s in self.symbols]

    @property
    def weights(self) -> list[int]:
        return [s.weight for s in self.symbols]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}; alphabet is {self.names}") from None

    def word(self, letters: Iterable[str] | str) -> Word:
        """Build a word from generator names.

        A plain string is split into characters, which is convenient for
        single-letter alphabets: ``alphabet.word("dudu")``.
        """
        return tuple(self.index(n) for n in letters)

    def validate(self, w: Word) -> None:
        n = len(self.symbols)
        for i in w:
            if not (isinstance(i, int) and 0 <= i < n):
                raise ValueError(f"letter index {i!r} not valid for alphabet {self.names}")

    def degree(self, w: Word) -> int:
        ws = self.weights
        return sum(ws[i] for i in w)

    def names_of(self, w: Word) -> list[str]:
        return [self.symbols[i].name for i in w]

    def format_word(self, w: Word) -> str:
        """Exponent-compressed display, e.g. ``u^2(du)^3d``; ``1`` for the unit."""
        if not w:
            return "1"
        names = self.names_of(w)
        sep = "" if all(len(n) == 1 for n in self.names) else "*"
        parts = []
        i = 0
        while i < len(names):
            best_p, best_k = 1, 1
            for p in range(1, 5):
                block = names[i:i + p]
                if len(block) < p:
                    break
                k = 1
                while names[i + k * p:i + (k + 1) * p] == block:
                    k += 1
                if k >= 2 and p * k > best_p * best_k:
                    best_p, best_k = p, k
            block = sep.join(names[i:i + best_p])
            if best_k == 1:
                parts.append(block)
            elif best_p == 1:
                parts.append(f"{block}^{best_k}")
            else:
                parts.append(f"({block})^{best_k}")
            i += best_p * best_k
        return sep.join(parts)


def word_degree(w: Word, alphabet: Alphabet) -> int:
    alphabet.validate(w)
    return alphabet.degree(w)


def words_of_degree(alphabet: Alphabet, n: int) -> list[Word]:
    """All words of weighted degree ``n``, in index-lexicographic order."""
    weights = alphabet.weights
    table: list[list[Word]] = [[()]]
    for m in range(1, n + 1):
        row = []
        for i, wt in enumerate(weights):
            if wt <= m:
                row.extend(w + (i,) for w in table[m - wt])
        table.append(sorted(row))
    return table[n] if n >= 0 else []


class NcPoly:
    """Finite linear combination of words with Fraction coefficients.

    Instances are treated as immutable; zero coefficients are never stored.
    """

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, ScalarLike] | None = None):
        self.alphabet = alphabet
        clean: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                alphabet.validate(w)
                c = as_scalar(c)
                if c:
                    clean[w] = clean.get(w, Fraction(0)) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, alphabet: Alphabet, terms: dict) -> "NcPoly":
        # trusted constructor: terms already validated and zero-free
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, alphabet: Alphabet, w: Word, coeff: ScalarLike = 1) -> "NcPoly":
        return cls(alphabet, {tuple(w): coeff})

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls._raw(alphabet, {})

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPoly":
        return cls._raw(alphabet, {(): Fraction(1)})

    @classmethod
    def from_terms(cls, alphabet: Alphabet, pairs: Iterable[tuple[ScalarLike, str | Sequence[str]]]) -> "NcPoly":
        """``NcPoly.from_terms(ab, [(1, "xxx"), (-1, "yxy")])``"""
        acc: dict[Word, Fraction] = {}
        for c, letters in pairs:
            w = alphabet.word(letters)
            acc[w] = acc.get(w, Fraction(0)) + as_scalar(c)
        return cls(alphabet, acc)

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self) -> list[Word]:
        return list(self._terms)

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {self.alphabet.degree(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree() needs a nonzero homogeneous polynomial")
        return degs.pop()

    def _check(self, other: "NcPoly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet.names} vs {other.alphabet.names}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "NcPoly") -> "NcPoly":
        return poly_add(self, other)

    def __neg__(self) -> "NcPoly":
        return poly_scale(-1, self)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return poly_add(self, poly_scale(-1, other))

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return poly_mul(self, other)
        return poly_scale(other, self)

    def __rmul__(self, other):
        return poly_scale(other, self)

    def __pow__(self, k: int) -> "NcPoly":
        out = NcPoly.one(self.alphabet)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self, order: "MonomialOrder | None" = None) -> list[tuple[Word, Fraction]]:
        """Terms from largest to smallest word (deglex on index order by default)."""
        key = order.key if order is not None else (lambda w: (self.alphabet.degree(w), w))
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def format(self, order: "MonomialOrder | None" = None) -> str:
        if not self._terms:
            return "0"
        out = []
        for w, c in self.sorted_terms(order):
            mono = self.alphabet.format_word(w)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if a == 1 and w:
                body = mono
            elif not w:
                body = str(a)
            else:
                body = f"{a}*{mono}" if a.denominator != 1 else f"{a}{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"NcPoly({self.format()})"


def poly_add(p: NcPoly, q: NcPoly) -> NcPoly:
    p._check(q)
    out = dict(p._terms)
    for w, c in q._terms.items():
        v = out.get(w, 0) + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return NcPoly._raw(p.alphabet, out)


def poly_scale(c: ScalarLike, p: NcPoly) -> NcPoly:
    c = as_scalar(c)
    if not c:
        return NcPoly.zero(p.alphabet)
    return NcPoly._raw(p.alphabet, {w: c * v for w, v in p._terms.items()})


def poly_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    p._check(q)
    out: dict[Word, Fraction] = {}
    for w1, c1 in p._terms.items():
        for w2, c2 in q._terms.items():
            w = w1 + w2
            v = out.get(w, 0) + c1 * c2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return NcPoly._raw(p.alphabet, out)


def substitute(p: NcPoly, images: Mapping[str | int, NcPoly]) -> NcPoly:
    """Apply the algebra map sending each generator to its image.

    ``images`` may be keyed by generator name or index; generators that are
    not mentioned must live in the target alphabet under the same name and
    are mapped to themselves. Each image must be homogeneous of the
    generator's weight.
    """
    src = p.alphabet
    mapped: list[NcPoly] = []
    target = None
    for img in images.values():
        target = img.alphabet if target is None else target
        if img.alphabet != target:
            raise ValueError("substitution images live in different alphabets")
    if target is None:
        target = src
    for i, sym in enumerate(src.symbols):
        img = images.get(sym.name, images.get(i))
        if img is None:
            img = NcPoly.monomial(target, (target.index(sym.name),))
        if img and img.degrees() != {sym.weight}:
            raise ValueError(f"image of {sym.name!r} is not homogeneous of degree {sym.weight}")
        mapped.append(img)
    # cache powers of prefixes via per-term products
    out = NcPoly.zero(target)
    for w, c in p._terms.items():
        term = NcPoly.one(target)
        for letter in w:
            term = poly_mul(term, mapped[letter])
            if not term:
                break
        out = poly_add(out, poly_scale(c, term))
    return out


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order: total weighted degree, then left-to-right
    comparison of letters by ``precedence`` (listed smallest first)."""

    alphabet: Alphabet
    precedence: tuple[int, ...]
    _rank: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        prec = tuple(self.precedence)
        if sorted(prec) != list(range(len(self.alphabet))):
            raise ValueError(f"precedence {prec} is not a permutation of the alphabet")
        rank = [0] * len(prec)
        for r, i in enumerate(prec):
            rank[i] = r
        object.__setattr__(self, "precedence", prec)
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def from_names(cls, alphabet: Alphabet, names: Sequence[str]) -> "MonomialOrder":
        """``MonomialOrder.from_names(ab, ["x", "y"])`` means x < y."""
        return cls(alphabet, tuple(alphabet.index(n) for n in names))

    @classmethod
    def default(cls, alphabet: Alphabet) -> "MonomialOrder":
        return cls(alphabet, tuple(range(len(alphabet))))

    def key(self, w: Word) -> tuple:
        rank = self._rank
        return (self.alphabet.degree(w), tuple(rank[i] for i in w))

    def compare(self, w1: Word, w2: Word) -> int:
        """-1, 0 or 1 as ``w1`` is smaller than, equal to, or larger than ``w2``."""
        self.alphabet.validate(w1)
        self.alphabet.validate(w2)
        k1, k2 = self.key(w1), self.key(w2)
        return (k1 > k2) - (k1 < k2)

    def leading(self, p: NcPoly) -> tuple[Word, Fraction]:
        if p.alphabet != self.alphabet:
            raise ValueError("polynomial and order use different alphabets")
        if not p:
            raise ValueError("zero polynomial has no leading term")
        w = max(p.words(), key=self.key)
        return w, p.coeff(w)

    def sorted(self, words: Iterable[Word], reverse: bool = False) -> list[Word]:
        return sorted(words, key=self.key, reverse=reverse)


def compare(order: MonomialOrder, w1: Word, w2: Word) -> int:
    return order.compare(w1, w2)
