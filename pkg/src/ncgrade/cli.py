"""Command-line entry point.

    ncgrade check <name> [--config f.json] [--max-degree N] [--format text|json]
    ncgrade suite [--config f.json] [--format text|json]
    ncgrade nf|basis|hilbert|complete|fixed-ring|min-gens --config f.json

Exit codes: 0 when everything passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .algebra import (
    DOWNUP_DENOMINATOR,
    completed_system,
    hilbert_matches_closed_form,
    normal_basis,
    oracle_dims,
    series_expand,
)
from .checks import CheckReport, available_checks, run_check
from .config import (
    ConfigError,
    dumps,
    load_json,
    parse_group,
    parse_grading,
    parse_order,
    parse_poly,
    parse_presentation,
    parse_word,
    poly_json,
    resolve_max_degree,
    system_json,
    word_json,
)
from .grading import graded_decompose
from .invariants import fixed_ring_basis, minimal_generators, reconstruction_holds
from .rewrite import complete, is_confluent_up_to

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


# ---------------------------------------------------------------- check / suite


def _report_text(rep: CheckReport) -> str:
    lines = [f"{'PASS' if rep.passed else 'FAIL'} {rep.name} ({rep.wall_time:.2f}s)"]
    lines += [f"  - {f}" for f in rep.details.get("failures", [])]
    return "\n".join(lines)


def _suite_entries(spec) -> list[tuple[str, dict]]:
    if spec is None:
        return [(name, {}) for name in available_checks()]
    if isinstance(spec, dict):
        spec = spec.get("checks")
    if not isinstance(spec, list):
        raise ConfigError('suite config is a list of checks or {"checks": [...]}')
    out = []
    for item in spec:
        if isinstance(item, str):
            out.append((item, {}))
        elif isinstance(item, dict) and "name" in item:
            cfg = {k: v for k, v in item.items() if k != "name"}
            out.append((item["name"], cfg))
        else:
            raise ConfigError(f"bad suite entry {item!r}")
    return out


def run_suite(spec, max_degree: int | None = None) -> tuple[dict, int]:
    """Run the configured checks; returns (aggregate report, exit code).
    Reports are ordered by check name, then by position in the config."""
    entries = _suite_entries(spec)
    for name, _ in entries:
        if name not in available_checks():
            raise ConfigError(f"unknown check {name!r}")
    reports = []
    for idx, (name, cfg) in sorted(enumerate(entries), key=lambda t: (t[1][0], t[0])):
        if max_degree is not None:
            cfg = {**cfg, "max_degree": max_degree}
        reports.append(run_check(name, cfg))
    ok = all(r.passed for r in reports)
    agg = {"pass": ok, "count": len(reports), "failed": [r.name for r in reports if not r.passed],
           "reports": [r.to_json() for r in reports]}
    return agg, EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- direct commands


def _pres_and_order(cfg: dict):
    if "presentation" not in cfg:
        raise ConfigError("config needs a presentation")
    p = parse_presentation(cfg["presentation"])
    return p, parse_order(p, cfg.get("order"))


def _bound(cfg: dict, args, default: int, minimum: int = 0) -> int:
    req = args.max_degree if args.max_degree is not None else cfg.get("max_degree")
    return resolve_max_degree(req, default, minimum)


def cmd_nf(cfg: dict, args) -> tuple[dict, int]:
    p, order = _pres_and_order(cfg)
    if "poly" in cfg:
        f = parse_poly(p.alphabet, cfg["poly"])
    elif "word" in cfg:
        w = parse_word(p.alphabet, cfg["word"])
        f = parse_poly(p.alphabet, [{"coeff": "1", "word": p.alphabet.names_of(w)}])
    else:
        raise ConfigError("nf needs a poly or a word")
    deg = max(f.degrees(), default=0)
    N = _bound(cfg, args, max(deg, p.max_relation_degree()), deg)
    sys_ = completed_system(p, order, N)
    nf = sys_.reduce(f)
    return {"input": poly_json(f, order), "normal_form": poly_json(nf, order),
            "display": nf.format(order), "is_zero": not nf, "confluence_bound": N}, EXIT_OK


def cmd_basis(cfg: dict, args) -> tuple[dict, int]:
    p, order = _pres_and_order(cfg)
    N = _bound(cfg, args, 6, 0)
    b = normal_basis(p, order, N)
    rows = {str(n): [word_json(p.alphabet, w) for w in row] for n, row in enumerate(b.rows)}
    return {"label": p.label, "max_degree": N, "dims": b.dims(), "words": rows}, EXIT_OK


def cmd_hilbert(cfg: dict, args) -> tuple[dict, int]:
    p, order = _pres_and_order(cfg)
    N = _bound(cfg, args, 10, 0)
    rewriting = normal_basis(p, order, N).dims()
    linear = oracle_dims(p, N)
    out = {"label": p.label, "max_degree": N, "rewriting": rewriting, "linear_algebra": linear,
           "agree": rewriting == linear}
    code = EXIT_OK if rewriting == linear else EXIT_FAIL
    if "numerator" in cfg or "denominator" in cfg:
        num = [int(c) for c in cfg.get("numerator", [1])]
        den = [int(c) for c in cfg.get("denominator", DOWNUP_DENOMINATOR)]
        if not den or den[0] == 0:
            raise ConfigError("denominator needs a nonzero constant term")
        match = hilbert_matches_closed_form(rewriting, num, den, N)
        out["closed_form"] = [str(c) for c in series_expand(num, den, N)]
        out["matches_closed_form"] = match
        if not match:
            code = EXIT_FAIL
    return out, code


def cmd_complete(cfg: dict, args) -> tuple[dict, int]:
    p, order = _pres_and_order(cfg)
    N = _bound(cfg, args, 8, p.max_relation_degree())
    try:
        sys_ = complete(p.relations, order, N)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    out = system_json(sys_)
    out["display"] = [r.format(order) for r in sys_.rules]
    out["confluent_up_to_bound"] = is_confluent_up_to(sys_, N)
    return out, EXIT_OK if out["confluent_up_to_bound"] else EXIT_FAIL


def _graded(cfg: dict, args, default: int):
    p, order = _pres_and_order(cfg)
    if "group" not in cfg or "grading" not in cfg:
        raise ConfigError("config needs group and grading")
    G = parse_group(cfg["group"])
    gr = parse_grading(p, G, cfg["grading"])
    N = _bound(cfg, args, default, 0)
    b = normal_basis(p, order, N)
    try:
        gb = graded_decompose(b, gr)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return p, b, gb, N


def cmd_fixed_ring(cfg: dict, args) -> tuple[dict, int]:
    p, b, gb, N = _graded(cfg, args, 8)
    fixed = fixed_ring_basis(gb)
    G = gb.grading.group
    return {"label": p.label, "max_degree": N, "fixed_dims": fixed.dims(),
            "component_dims": {G.name(g): dims for g, dims in gb.table().items()},
            "words": {str(n): [word_json(p.alphabet, w) for w in row] for n, row in enumerate(fixed.rows)}
            }, EXIT_OK


def cmd_min_gens(cfg: dict, args) -> tuple[dict, int]:
    p, b, gb, N = _graded(cfg, args, 8)
    fixed = fixed_ring_basis(gb)
    rep = minimal_generators(fixed, b.system, N)
    order = b.system.order
    return {"label": p.label, "max_degree": N, "fixed_dims": fixed.dims(),
            "generators": [{"degree": d, "poly": poly_json(g, order), "display": g.format(order)}
                           for d, g in rep.generators],
            "degrees": rep.degrees, "count": rep.count, "obstruction_flag": rep.obstruction_flag,
            "reconstruction_failed_degrees": reconstruction_holds(rep, fixed, b.system),
            "assumptions": rep.assumptions}, EXIT_OK


DIRECT = {"nf": cmd_nf, "basis": cmd_basis, "hilbert": cmd_hilbert, "complete": cmd_complete,
          "fixed-ring": cmd_fixed_ring, "min-gens": cmd_min_gens}


# ---------------------------------------------------------------- argparse


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncgrade", description="Exact checks for graded algebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="run one named check")
    c.add_argument("name")
    s = sub.add_parser("suite", help="run a list of checks (default: all)")
    sub.add_parser("list", help="list named checks")
    for p in (c, s):
        p.add_argument("--config")
        p.add_argument("--max-degree", type=int)
        p.add_argument("--format", choices=("text", "json"), default="json")
    for name in DIRECT:
        d = sub.add_parser(name)
        d.add_argument("--config", required=True)
        d.add_argument("--max-degree", type=int)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            print("\n".join(available_checks()))
            return EXIT_OK
        cfg = load_json(args.config) if getattr(args, "config", None) else None
        if args.command == "check":
            if cfg is not None and not isinstance(cfg, dict):
                raise ConfigError("check config must be a JSON object")
            cfg = dict(cfg or {})
            if args.max_degree is not None:
                cfg["max_degree"] = args.max_degree
            rep = run_check(args.name, cfg)
            print(_report_text(rep) if args.format == "text" else dumps(rep.to_json()))
            return EXIT_OK if rep.passed else EXIT_FAIL
        if args.command == "suite":
            agg, code = run_suite(cfg, args.max_degree)
            if args.format == "text":
                for r in agg["reports"]:
                    print(f"{'PASS' if r['pass'] else 'FAIL'} {r['name']}")
                    for f in r["details"].get("failures", []):
                        print(f"  - {f}")
            else:
                print(dumps(agg))
            return code
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a JSON object")
        out, code = DIRECT[args.command](cfg, args)
        print(dumps(out))
        return code
    except ConfigError as exc:
        print(f"ncgrade: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
