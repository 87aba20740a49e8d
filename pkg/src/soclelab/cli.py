"""Command line entry point: ``soclelab validate | compute | suite | gen``.

Exit codes: 0 pass, 1 violation, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .algebra import AlgebraError, Element
from .barnes import (BarnesElement, b_fredholm_witness, b_is_fredholm, b_rho_l, b_rho_r, b_xi_l, b_xi_r,
                     b_zeta_l, b_zeta_r)
from .decompose import order
from .fredholm import (NotFredholm, delta, is_fredholm, is_fredholm_left_ideal, is_semi_minus, is_semi_plus,
                       rho_l, rho_r, xi_l, xi_r, zeta_l, zeta_r)
from .ideals import CharacteristicTooSmall, NotSemiprime, principal_left
from .modules import ChopInconclusive, UnsupportedField, composition_length, ideal_as_module
from .polymodel import p_is_fredholm, p_rho, p_xi, p_zeta
from .specfile import SpecError, dump_spec, generate_family, load_spec, resolve_element
from .suites import SUITES, reports_to_json, reports_to_markdown, run_suites

OPS = ("xi_l", "xi_r", "rho_l", "rho_r", "zeta_l", "zeta_r", "delta", "order", "length",
       "is_fredholm", "is_semi_plus", "is_semi_minus", "witness")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class Inapplicable(ValueError):
    pass


def fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(v)


def _compute_findim(op: str, a: Element):
    f = a.algebra.field
    if op == "witness":
        res = is_fredholm_left_ideal(principal_left(a))
        if not res:
            raise NotFredholm(res.failed)
        return json.dumps([f.fmt(c) for c in res.witness.coords])
    table = {
        "xi_l": xi_l, "xi_r": xi_r, "rho_l": rho_l, "rho_r": rho_r, "zeta_l": zeta_l, "zeta_r": zeta_r,
        "is_fredholm": lambda x: is_fredholm(x), "is_semi_plus": lambda x: is_semi_plus(x),
        "is_semi_minus": lambda x: is_semi_minus(x),
        "delta": lambda x: delta(principal_left(x)),
        "order": lambda x: order(principal_left(x)),
        "length": lambda x: composition_length(ideal_as_module(principal_left(x))),
    }
    return table[op](a)


def _compute_barnes(op: str, a: BarnesElement):
    if op == "witness":
        return json.dumps(b_fredholm_witness(a).to_json())
    table = {
        "xi_l": b_xi_l, "xi_r": b_xi_r, "rho_l": b_rho_l, "rho_r": b_rho_r, "zeta_l": b_zeta_l, "zeta_r": b_zeta_r,
        "is_fredholm": b_is_fredholm, "is_semi_plus": b_is_fredholm, "is_semi_minus": b_is_fredholm,
    }
    if op not in table:
        raise Inapplicable(f"op {op!r} is not available in the barnes model")
    return table[op](a)


def _compute_poly(op: str, e):
    f = e.f
    if op == "witness":
        if not p_is_fredholm(f):
            raise NotFredholm(f"{f} is not a nonzero constant")
        return "0"
    table = {
        "xi_l": p_xi, "xi_r": p_xi, "rho_l": p_rho, "rho_r": p_rho, "zeta_l": p_zeta, "zeta_r": p_zeta,
        "is_fredholm": p_is_fredholm, "is_semi_plus": p_is_fredholm, "is_semi_minus": p_is_fredholm,
    }
    if op not in table:
        raise Inapplicable(f"op {op!r} is not available in the poly model")
    return table[op](f)


def compute(path, op: str, ref: str) -> str:
    ctx = load_spec(path)
    a = resolve_element(ctx, ref)
    fn = {"findim": _compute_findim, "barnes": _compute_barnes, "poly": _compute_poly}[ctx.model]
    return fmt_value(fn(op, a))


# -- subcommands -------------------------------------------------------------

USER_ERRORS = (SpecError, OSError, Inapplicable, NotSemiprime, NotFredholm, AlgebraError, UnsupportedField,
               CharacteristicTooSmall, ChopInconclusive, KeyError, ValueError)


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def cmd_validate(args) -> int:
    ctx = load_spec(args.file)
    dim = ctx.algebra.dim if ctx.algebra is not None else "n/a"
    print(f"ok: model {ctx.model}, field {ctx.field}, dim {dim}, {len(ctx.elements)} named elements")
    return EXIT_OK


def cmd_compute(args) -> int:
    print(compute(args.file, args.op, args.element))
    return EXIT_OK


def cmd_suite(args) -> int:
    t0 = time.perf_counter()
    reports = run_suites(args.name, args.seed, args.threads)
    wall = time.perf_counter() - t0
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(reports_to_json(reports, args.seed))
    out.with_suffix(".md").write_text(reports_to_markdown(reports, args.seed))
    # wall time lives beside the report so the report itself stays byte-stable
    out.with_suffix(".timing.json").write_text(json.dumps({"wall_seconds": round(wall, 3)}) + "\n")
    for r in reports:
        print(f"{r.suite}: {r.verdict} ({r.cases_run} cases, {len(r.skipped)} skipped, "
              f"{len(r.violations)} violations)")
    failed = any(r.verdict == "fail" for r in reports)
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_gen(args) -> int:
    factors = [int(x) for x in args.factors.split(",")] if args.factors else None
    doc = generate_family(args.family, n=args.n, p=args.p, group=args.group, factors=factors)
    text = dump_spec(doc)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="soclelab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check that a spec file parses to a valid algebra or model")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("compute", help="evaluate one quantity on one element")
    c.add_argument("file")
    c.add_argument("--op", required=True, choices=OPS)
    c.add_argument("--element", required=True, help="name from the spec, or a literal")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("suite", help="run invariant suites and write a report")
    s.add_argument("--name", default="all", help="all or one of: " + ", ".join(SUITES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True, help="report JSON path; .md and .timing.json written alongside")
    s.add_argument("--threads", type=int, default=None, help="worker threads (capped by SOCLELAB_THREADS)")
    s.set_defaults(func=cmd_suite)

    g = sub.add_parser("gen", help="emit a spec file for a standard family")
    g.add_argument("--family", required=True, choices=("matrix", "product", "group", "triangular"))
    g.add_argument("--n", type=int, default=None, help="matrix size (matrix, triangular)")
    g.add_argument("--p", type=int, default=17, help="prime")
    g.add_argument("--group", default=None, help="group name for --family group, e.g. S3, Q8")
    g.add_argument("--factors", default=None, help="comma-separated matrix sizes for --family product")
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "threads", None) is not None and args.threads < 1:
        return _err("--threads must be positive")
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _err(f"{exc.filename}: no such file")
    except USER_ERRORS as exc:
        name = type(exc).__name__
        return _err(f"{name}: {exc}" if name not in ("SpecError",) else str(exc))


if __name__ == "__main__":
    sys.exit(main())
