"""Command line front end: ``jimm <command> ...``.

Exit codes: 0 success, 1 domain or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .cf import ContinuedFraction, DomainError
from .core import (
    InsufficientPrecision,
    RepresentationMismatch,
    cf_surd,
    certified_decimal,
    jimm_cf,
    jimm_q_rational,
    jimm_stream,
    jimm_xor_cf,
    jump,
    orbit_fixed_point,
    surd_cf,
)
from .dynamics import iterate
from .experiments import (
    ExperimentConfig,
    beatty_duality,
    density_of_ones,
    derivative_report,
    gauss_kuzmin_freq,
    integral_symmetry,
)
from .matrix import Mat
from .parse import parse_number
from .pgl2 import jimm_matrix
from .surd import INF, QuadSurd, render_decimal
from .tree import box_graph_csv, box_graph_svg
from .verify import SUITES, run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2
DEFAULT_DIGITS = 30


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-sqrt(11)", "-3/8", "-(1+sqrt(5))/2" through as positionals
        self._negative_number_matcher = re.compile(r"^-[\d(\[s]")

    def error(self, message):
        raise UsageError(message)


# helpers ------------------------------------------------------------------------------------


def _exact(v) -> str:
    if v is INF:
        return "inf"
    return str(v)


def _representation(x) -> str:
    if isinstance(x, QuadSurd):
        return "surd"
    if isinstance(x, ContinuedFraction):
        return {"periodic": "periodic-cf", "finite": "rational", "stream": "stream-cf"}[x.kind]
    if x is INF:
        return "infinity"
    return "rational"


def _as_value(cf_or_value):
    if isinstance(cf_or_value, ContinuedFraction):
        return cf_surd(cf_or_value)
    return cf_or_value


# transform --------------------------------------------------------------------------------------


def cmd_transform(args) -> tuple[int, dict]:
    x = parse_number(args.number)
    if isinstance(x, ContinuedFraction) and x.kind == "finite":
        x = x.value()
    if isinstance(x, ContinuedFraction) and x.kind == "periodic":
        x = x.value()
    if isinstance(x, Fraction) or x is INF:
        if not args.jump:
            raise DomainError("jimm is two-valued at rationals; use the `jump` command (or transform --jump)")
        return _jump_record(x, args.digits)
    if isinstance(x, QuadSurd):
        return _transform_surd(x, args.via, args.digits, args.number)
    return _transform_stream(x, args.digits, args.number)


def _transform_surd(x: QuadSurd, via: str, digits: int, text: str):
    cf = surd_cf(x)
    agreement = None
    if via == "cf":
        out = _as_value(jimm_cf(cf))
    elif via == "xor":
        out = _as_value(jimm_xor_cf(cf))
    else:
        a, b = _as_value(jimm_xor_cf(cf)), _as_value(jimm_cf(cf))
        agreement = (a is b) if (a is INF or b is INF) else a == b
        if not agreement:
            raise RepresentationMismatch(f"XOR gives {a}, rewrite gives {b}")
        out = a
    rec = {
        "input": text,
        "representation": "surd",
        "output_exact": _exact(out),
        "output_decimal": render_decimal(out, digits),
        "method_agreement": agreement,
        "noble": not isinstance(out, QuadSurd),
    }
    return EXIT_OK, rec


def _transform_stream(x: ContinuedFraction, digits: int, text: str):
    if next(x.quotients()) < 0:
        raise DomainError("negative stream inputs are not supported; use jimm(-x) = -1/jimm(x)")
    # the stream path always cross-checks XOR against the rewrite, quotient by quotient
    dec = certified_decimal(jimm_stream(x), digits)
    head = []
    try:
        for q in jimm_stream(x, 12):
            head.append(q)
    except InsufficientPrecision:
        pass
    rec = {
        "input": text,
        "representation": "stream-cf",
        "output_exact": None,
        "output_decimal": dec,
        "method_agreement": True,
        "noble": False,
        "output_cf_prefix": head,
    }
    return EXIT_OK, rec


def _jump_record(q, digits: int):
    jd = jump(q)
    rec = {
        "at": str(jd.at),
        "left": str(jd.left),
        "right": str(jd.right),
        "delta": str(jd.delta),
        "left_decimal": render_decimal(jd.left, digits),
        "right_decimal": render_decimal(jd.right, digits),
        "delta_decimal": render_decimal(jd.delta, digits),
        "jimm_q": str(jimm_q_rational(q)) if q > 0 else None,
    }
    return EXIT_OK, rec


def cmd_jump(args):
    q = parse_number(args.number)
    if isinstance(q, ContinuedFraction) and q.kind == "finite":
        q = q.value()
    if not isinstance(q, Fraction):
        raise DomainError("jump needs a finite rational")
    return _jump_record(q, args.digits)


# matrices -------------------------------------------------------------------------------------------


def _parse_matrix(text):
    try:
        m = Mat.parse(text)
    except ValueError as e:
        raise DomainError(str(e)) from None
    if not m.is_unimodular():
        raise DomainError(f"{m} is not in PGL(2,Z) (det must be +-1)")
    return m


def cmd_matrix(args):
    m = _parse_matrix(args.matrix)
    jm = jimm_matrix(m, args.strategy)
    return EXIT_OK, {"input": str(m), "output": str(jm), "det": jm.det(), "trace": jm.trace(), "input_trace": m.trace()}


def cmd_orbit_fixed(args):
    m = _parse_matrix(args.matrix)
    fp = orbit_fixed_point(m)
    return EXIT_OK, {"m": str(m), "x": str(fp.x), "x_decimal": render_decimal(fp.x, args.digits)}


# dynamics, boxgraph, beatty ---------------------------------------------------------------------------


def _render_point(v, digits):
    if isinstance(v, ContinuedFraction):
        return str(v)
    return _exact(v)


def cmd_dynamics(args):
    x = parse_number(args.start)
    if isinstance(x, ContinuedFraction) and x.kind != "stream":
        x = x.value()
    orbit = iterate(args.map, x, args.steps)
    return EXIT_OK, {"map": args.map, "start": args.start, "orbit": [_render_point(v, args.digits) for v in orbit]}


def cmd_boxgraph(args):
    if args.format == "svg":
        if args.domain != "0:1":
            raise DomainError("svg output covers the 0:1 domain only")
        return EXIT_OK, box_graph_svg(args.depth)
    return EXIT_OK, box_graph_csv(args.depth, args.domain)


def cmd_beatty(args):
    x = parse_number(args.x)
    if isinstance(x, ContinuedFraction) and x.kind == "periodic":
        x = x.value()
    rep = beatty_duality(x, args.limit)
    ok = rep["partition"] and rep["dual_partition"]
    return (EXIT_OK if ok else EXIT_VERIFY), rep


# verify and stats -------------------------------------------------------------------------------------


def cmd_verify(args):
    if args.suite != "all" and args.suite not in SUITES:
        raise DomainError(f"unknown suite {args.suite!r}")
    reports = run_suite(args.suite, args.seed)
    ok = all(r.ok for r in reports)
    return (EXIT_OK if ok else EXIT_VERIFY), {"ok": ok, "suites": [r.to_dict() for r in reports]}


def cmd_stats(args):
    cfg = ExperimentConfig(seed=args.seed, samples=args.samples, depth=args.depth)
    fn = {
        "density": density_of_ones,
        "derivative": derivative_report,
        "integral": integral_symmetry,
        "gk": gauss_kuzmin_freq,
    }[args.experiment]
    return EXIT_OK, fn(cfg)


# output ----------------------------------------------------------------------------------------------


def _text(command, payload) -> str:
    if isinstance(payload, str):
        return payload.rstrip("\n")
    if command == "transform":
        if "output_decimal" not in payload:
            return "\n".join(f"{k}: {v}" for k, v in payload.items())
        return payload["output_exact"] or payload["output_decimal"]
    if command == "matrix":
        return payload["output"]
    if command == "orbit-fixed":
        return payload["x"]
    if command == "verify":
        lines = []
        for s in payload["suites"]:
            for c in s["checks"]:
                tag = "PASS" if c["ok"] else ("INFO" if c["informational"] else "FAIL")
                lines.append(f"{tag} {s['suite']}: {c['name']} ({c['passed']}/{c['passed'] + c['failed']})")
                for w in c["counterexamples"] if not c["ok"] else []:
                    lines.append(f"     counterexample: {w}")
        return "\n".join(lines)
    if command == "dynamics":
        return "\n".join(payload["orbit"])
    return json.dumps(payload, indent=2, default=str)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS, help="decimal digits")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")

    p = _Parser(prog="jimm", description="The jimm involution on numbers, matrices and the Farey tree.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transform", parents=[common], help="jimm of a number literal")
    t.add_argument("number")
    t.add_argument("--via", choices=["cf", "xor", "both"], default="both")
    t.add_argument("--jump", action="store_true", help="for rationals: report the one-sided limits")
    t.set_defaults(fn=cmd_transform)

    j = sub.add_parser("jump", parents=[common], help="one-sided limits of jimm at a rational")
    j.add_argument("number")
    j.set_defaults(fn=cmd_jump)

    m = sub.add_parser("matrix", parents=[common], help="jimm of a PGL(2,Z) matrix")
    m.add_argument("matrix")
    m.add_argument("--strategy", choices=["floor", "ceil"], default="floor")
    m.set_defaults(fn=cmd_matrix)

    o = sub.add_parser("orbit-fixed", parents=[common], help="x with jimm(x) = M x")
    o.add_argument("matrix")
    o.set_defaults(fn=cmd_orbit_fixed)

    d = sub.add_parser("dynamics", parents=[common], help="iterate an interval map")
    dsub = d.add_subparsers(dest="action", required=True, parser_class=_Parser)
    it = dsub.add_parser("iterate", parents=[common])
    it.add_argument("--map", choices=["gauss", "farey", "tjimm"], required=True)
    it.add_argument("--start", required=True)
    it.add_argument("--steps", type=int, default=10)
    it.add_argument("--emit", choices=["json", "text"], default="text")
    it.set_defaults(fn=cmd_dynamics)

    v = sub.add_parser("verify", parents=[common], help="run a property suite")
    v.add_argument("suite", help=", ".join([*SUITES, "all"]))
    v.set_defaults(fn=cmd_verify)

    b = sub.add_parser("beatty", parents=[common], help="Beatty partitions for x and jimm(x)")
    b.add_argument("--x", required=True)
    b.add_argument("--limit", type=int, default=10000)
    b.set_defaults(fn=cmd_beatty)

    g = sub.add_parser("boxgraph", parents=[common], help="boxes covering the graph of jimm")
    g.add_argument("--depth", type=int, required=True)
    g.add_argument("--domain", choices=["0:1", "0:inf"], default="0:1")
    g.add_argument("--format", choices=["csv", "svg"], default="csv")
    g.set_defaults(fn=cmd_boxgraph)

    s = sub.add_parser("stats", parents=[common], help="statistical experiments (soft gates)")
    s.add_argument("experiment", choices=["density", "derivative", "integral", "gk"])
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--depth", type=int, default=2000)
    s.set_defaults(fn=cmd_stats)
    return p


_SAMPLE_DEFAULTS = {"density": 500, "derivative": 20, "integral": 10000, "gk": 200}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"jimm: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    args.json = getattr(args, "json", False)
    args.digits = getattr(args, "digits", DEFAULT_DIGITS)
    args.seed = getattr(args, "seed", 0)
    if args.command == "stats" and args.samples is None:
        args.samples = _SAMPLE_DEFAULTS[args.experiment]
    if args.command == "dynamics" and args.emit == "json":
        args.json = True
    try:
        code, payload = args.fn(args)
    except RepresentationMismatch as e:
        print(f"jimm: verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (DomainError, InsufficientPrecision, ValueError, ZeroDivisionError) as e:
        print(f"jimm: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json and not isinstance(payload, str):
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(_text(args.command, payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
