"""JSON schemas for presentations, groups, gradings and report payloads.

Rationals travel as "p/q" strings; words as arrays of generator names;
polynomials as arrays of {"coeff": "p/q", "word": [...]}.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import Presentation, algebra_F, algebra_H, downup
from .core import Alphabet, GeneratorSymbol, MonomialOrder, NcPoly, Word, as_scalar
from .grading import FiniteGroup, Grading, cyclic, dihedral, direct_product, from_table, quaternion8
from .rewrite import ReductionSystem, RewriteRule

MAX_DEGREE_ENV = "NCGRADE_MAX_DEGREE"


class ConfigError(ValueError):
    """Malformed or inconsistent configuration (CLI exit code 2)."""


def load_json(path: str | os.PathLike) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path}: {exc}") from exc


def scalar(value) -> Fraction:
    if isinstance(value, float):
        raise ConfigError(f"floats are not accepted, write rationals as \"p/q\" strings: {value!r}")
    try:
        return as_scalar(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad rational {value!r}") from exc


def format_scalar(c: Fraction) -> str:
    return str(c)


# ---------------------------------------------------------------- words / polys


def parse_word(alphabet: Alphabet, names) -> Word:
    if isinstance(names, str):
        names = list(names) if all(len(n) == 1 for n in alphabet.names) else names.split()
    try:
        return alphabet.word(names)
    except KeyError as exc:
        raise ConfigError(str(exc)) from exc


def parse_poly(alphabet: Alphabet, spec) -> NcPoly:
    if not isinstance(spec, list):
        raise ConfigError("a polynomial is a list of {\"coeff\", \"word\"} objects")
    terms: dict[Word, Fraction] = {}
    for t in spec:
        if not isinstance(t, dict) or "word" not in t:
            raise ConfigError(f"bad polynomial term {t!r}")
        w = parse_word(alphabet, t["word"])
        terms[w] = terms.get(w, Fraction(0)) + scalar(t.get("coeff", "1"))
    return NcPoly(alphabet, terms)


def word_json(alphabet: Alphabet, w: Word) -> list[str]:
    return alphabet.names_of(w)


def poly_json(p: NcPoly, order: MonomialOrder | None = None) -> list[dict]:
    return [{"coeff": format_scalar(c), "word": word_json(p.alphabet, w)}
            for w, c in p.sorted_terms(order)]


def rule_json(rule: RewriteRule, order: MonomialOrder | None = None) -> dict:
    return {"lhs": word_json(rule.rhs.alphabet, rule.lhs), "rhs": poly_json(rule.rhs, order)}


def system_json(sys: ReductionSystem) -> dict:
    return {
        "order": [sys.alphabet.names[i] for i in sys.order.precedence],
        "confluence_bound": sys.confluence_bound,
        "rules": [rule_json(r, sys.order) for r in sys.rules],
    }


# ---------------------------------------------------------------- presentations


def parse_presentation(spec) -> Presentation:
    if not isinstance(spec, dict):
        raise ConfigError("presentation must be an object")
    try:
        if "builtin" in spec:
            kind = spec["builtin"]
            if kind == "downup":
                if "alpha" not in spec or "beta" not in spec:
                    raise ConfigError("downup needs alpha and beta")
                return downup(scalar(spec["alpha"]), scalar(spec["beta"]))
            if kind == "F":
                return algebra_F()
            if kind == "H":
                return algebra_H()
            raise ConfigError(f"unknown builtin presentation {kind!r}")
        gens = spec.get("generators")
        if not gens:
            raise ConfigError("presentation needs generators or builtin")
        symbols = []
        for g in gens:
            if isinstance(g, str):
                symbols.append(GeneratorSymbol(g, 1))
            else:
                symbols.append(GeneratorSymbol(g["name"], int(g.get("weight", 1))))
        ab = Alphabet(tuple(symbols))
        rels = [parse_poly(ab, r) for r in spec.get("relations", [])]
        return Presentation(ab, tuple(rels), spec.get("label", "custom"))
    except ConfigError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"invalid presentation: {exc}") from exc


def presentation_json(p: Presentation) -> dict:
    return {
        "label": p.label,
        "generators": [{"name": s.name, "weight": s.weight} for s in p.alphabet],
        "relations": [poly_json(r) for r in p.relations],
    }


def parse_order(p: Presentation, spec) -> MonomialOrder:
    if spec is None:
        return p.default_order()
    try:
        return MonomialOrder.from_names(p.alphabet, list(spec))
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"invalid order {spec!r}: {exc}") from exc


# ---------------------------------------------------------------- groups


def parse_group(spec) -> FiniteGroup:
    if not isinstance(spec, dict):
        raise ConfigError("group must be an object")
    try:
        if "builtin" in spec:
            kind = spec["builtin"]
            if kind == "cyclic":
                return cyclic(int(spec["n"]))
            if kind == "dihedral":
                # "n" is the rotation order; "order" the group order 2n
                order = int(spec["order"]) if "order" in spec else 2 * int(spec["n"])
                return dihedral(order)
            if kind == "quaternion8":
                return quaternion8()
            if kind == "product":
                return direct_product(parse_group(spec["factors"][0]), parse_group(spec["factors"][1]))
            raise ConfigError(f"unknown builtin group {kind!r}")
        if "table" in spec:
            return from_table(spec["table"], int(spec.get("identity", 0)), spec.get("names"),
                              spec.get("label", ""))
        raise ConfigError("group needs builtin or table")
    except ConfigError:
        raise
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise ConfigError(f"invalid group: {exc}") from exc


def parse_grading(p: Presentation, group: FiniteGroup, spec) -> Grading:
    if not isinstance(spec, dict):
        raise ConfigError("grading must map generator names to element names")
    try:
        return Grading.from_names(p, group, spec)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"invalid grading: {exc}") from exc


# ---------------------------------------------------------------- degree caps


def resolve_max_degree(requested: int | None, default: int, minimum: int = 0) -> int:
    """Apply a CLI/config request, then the global environment cap."""
    n = default if requested is None else int(requested)
    cap = os.environ.get(MAX_DEGREE_ENV)
    if cap:
        try:
            n = min(n, int(cap))
        except ValueError as exc:
            raise ConfigError(f"{MAX_DEGREE_ENV} must be an integer, got {cap!r}") from exc
    if n < minimum:
        raise ConfigError(f"degree bound {n} is below the required minimum {minimum}")
    return n


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
