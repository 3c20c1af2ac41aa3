"""Exact sparse row reduction over the rationals.

Vectors are dicts mapping hashable coordinate keys to Fractions. The pivot
of a stored vector is its largest key under ``key``; reducing a vector
against the echelon basis clears every pivot coordinate, so the remainder
only involves non-pivot coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping


def _clean(vec: Mapping) -> dict:
    return {k: Fraction(v) for k, v in vec.items() if v}


class Echelon:
    def __init__(self, key: Callable[[Hashable], object] | None = None):
        self.key = key if key is not None else (lambda k: k)
        self.rows: dict[Hashable, dict] = {}  # pivot -> vector normalised to 1 at pivot

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set:
        return set(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = _clean(vec)
        rows, key = self.rows, self.key
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v
            p = max(hits, key=key)
            c = v[p]
            for k, a in rows[p].items():
                nv = v.get(k, 0) - c * a
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; returns False when it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = max(v, key=self.key)
        c = v[p]
        self.rows[p] = {k: a / c for k, a in v.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def extend(self, vecs: Iterable[Mapping]) -> int:
        return sum(self.add(v) for v in vecs)


def rank(vectors: Iterable[Mapping], key: Callable | None = None) -> int:
    e = Echelon(key)
    e.extend(vectors)
    return e.rank


def solve_combination(target: Mapping, vectors: list[Mapping]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum(c[i] * vectors[i]) == target``, or None.

    Works by tracking each echelon row as a combination of the inputs.
    """
    tag = object()
    aug = Echelon(key=lambda k: (0, k) if not (isinstance(k, tuple) and k[:1] == (tag,)) else (-1, k[1]))
    # keys tagged with ``tag`` record provenance and never become pivots
    # because they sort below every ordinary coordinate
    for i, v in enumerate(vectors):
        row = dict(_clean(v))
        row[(tag, i)] = Fraction(1)
        aug_v = aug.reduce(row)
        real = [k for k in aug_v if not (isinstance(k, tuple) and k[:1] == (tag,))]
        if real:
            p = max(real, key=aug.key)
            c = aug_v[p]
            aug.rows[p] = {k: a / c for k, a in aug_v.items()}
    rem = aug.reduce(_clean(target))
    if any(not (isinstance(k, tuple) and k[:1] == (tag,)) for k in rem):
        return None
    coeffs = [Fraction(0)] * len(vectors)
    for k, a in rem.items():
        coeffs[k[1]] = -a
    return coeffs
