"""Command-line front end: ``linrel gen | check | verify | demo-remark24``.

Exit codes are 0 on success, 1 when a verification fails and 2 for bad
input (usage errors, malformed files, vectors outside the domain, infeasible
generator requests).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io as rio
from .errors import LinRelError
from .harness import SUITES, TrialConfig, gen_relation, remark24_demo, resolve_suite, run_all
from .norms import graph_norm, hermitian_report, is_hermitian, point_norm, relation_norm
from .relation import arens_decompose, image_of
from .subspace import DEFAULT_TOL

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_TRIALS = 20


def _fmt(v):
    return f"{v:.12g}"


def _fmt_vec(v):
    v = np.asarray(v)
    if np.iscomplexobj(v) and np.any(v.imag != 0):
        return "[" + ", ".join(f"{_fmt(z.real)}{z.imag:+.12g}j" for z in v) + "]"
    return "[" + ", ".join(_fmt(float(np.real(z))) for z in v) + "]"


def _fail(msg):
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def parse_vector(text):
    """Comma-separated entries; each may be real or Python complex syntax (``1+2j``)."""
    try:
        vals = [complex(tok.strip().replace(" ", "")) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse vector {text!r}") from None
    arr = np.array(vals, dtype=np.complex128)
    return arr.real if not np.any(arr.imag) else arr


def parse_dims(text):
    out = []
    for tok in text.split(","):
        try:
            n, m = tok.lower().split("x")
            out.append((int(n), int(m)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"dims must look like 4x4, got {tok!r}") from None
    return out


def positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def n_list(text):
    vals = [positive_int(t) for t in text.split(",") if t.strip()]
    if any(v < 2 for v in vals):
        raise argparse.ArgumentTypeError("every N must be at least 2")
    return vals


def _suite_list(values):
    names = []
    for v in values or ["all"]:
        names.extend(s.strip() for s in v.split(",") if s.strip())
    if "all" in names:
        return list(SUITES)
    return [resolve_suite(s) for s in names]


def _summary_lines(T):
    return [
        f"n={T.n} m={T.m} field={T.field}",
        f"dim graph={T.graph.dim} dim D={T.domain.dim} dim R={T.range.dim} "
        f"dim T(0)={T.mulpart.dim} dim N={T.nullspace.dim}",
    ]


def cmd_gen(args):
    rng = np.random.default_rng(args.seed)
    try:
        T = gen_relation(rng, args.n, args.m, args.field, dim_graph=args.dim_graph,
                         dim_mulpart=args.dim_mulpart, hermitian=args.hermitian, tol=args.tol)
    except LinRelError as exc:
        return _fail(str(exc))
    text = rio.write_json(rio.relation_to_dict(T), args.out)
    if args.out is None:
        sys.stdout.write(text)
        for line in _summary_lines(T):
            print(line, file=sys.stderr)
    else:
        print("\n".join(_summary_lines(T)))
    return EXIT_OK


def cmd_check(args):
    try:
        T = rio.read_relation(args.file)
    except OSError as exc:
        return _fail(str(exc))
    except LinRelError as exc:
        return _fail(str(exc))
    lines = _summary_lines(T)
    rep = relation_norm(T)
    lines.append(f"norm={_fmt(rep.relation_norm)}" + (" (empty domain)" if rep.empty_domain else ""))
    if T.n == T.m:
        if is_hermitian(T):
            h = hermitian_report(T)
            lines.append(f"hermitian=yes class={h.klass} lower={_fmt(h.lower_bound)} upper={_fmt(h.upper_bound)}")
        else:
            lines.append("hermitian=no")
    T_s, T_inf = arens_decompose(T)
    lines.append(f"arens: dim T_s={T_s.graph.dim} dim T_inf={T_inf.graph.dim}")
    if args.x is not None:
        if args.x.shape != (T.n,):
            return _fail(f"--x has length {args.x.shape[0]}, expected {T.n}")
        try:
            y0, _ = image_of(T, args.x)
            lines.append(f"point_norm={_fmt(point_norm(T, args.x))}")
            lines.append(f"graph_norm={_fmt(graph_norm(T, args.x))}")
            lines.append(f"y0={_fmt_vec(y0)}")
        except LinRelError as exc:
            return _fail(str(exc))
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args):
    try:
        suites = _suite_list(args.suite)
        config = TrialConfig(seed=args.seed, trials=args.trials, dims=args.dims,
                             field=args.field, tol=args.tol, suites=suites)
    except (KeyError, ValueError) as exc:
        return _fail(exc.args[0] if exc.args else str(exc))
    report = run_all(config)
    text = rio.write_json(report, args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        for sid, r in report["suites"].items():
            status = "PASS" if r["failures"] == 0 else "FAIL"
            print(f"{status} {sid}: {r['passes']}/{r['trials']} worst residual {r['worst_residual']:.3e}")
    return EXIT_OK if report["all_passed"] else EXIT_FAIL


def cmd_demo(args):
    rows = []
    print(f"{'N':>4} {'|T|':>8} {'|S1|':>8} {'|S2|':>8} {'|S1-T|':>8} {'|S2-T|':>8}")
    ok = True
    for N in args.n_list:
        vals = remark24_demo(N)
        expected = (N, 0.0, 1.0, 0.0, N - 1.0)
        row_ok = all(abs(v - e) <= 1e-9 for v, e in zip(vals, expected))
        ok = ok and row_ok
        rows.append({"N": N, "norms": list(vals), "expected": list(expected), "ok": row_ok})
        print(f"{N:>4} " + " ".join(f"{v:8.3f}" for v in vals) + ("" if row_ok else "  MISMATCH"))
    if args.out is not None:
        rio.write_json({"schema_version": rio.SCHEMA_VERSION, "rows": rows, "all_ok": ok}, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def _global_flags():
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--out", default=argparse.SUPPRESS, help="output file (default: stdout)")
    p.add_argument("--field", choices=("real", "complex"), default=argparse.SUPPRESS)
    return p


def build_parser():
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="linrel", parents=[common],
                                     description="Finite-dimensional linear relation toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a random relation file")
    g.add_argument("--n", type=positive_int, required=True)
    g.add_argument("--m", type=positive_int, required=True)
    g.add_argument("--dim-graph", type=int)
    g.add_argument("--dim-mulpart", type=int)
    g.add_argument("--hermitian", action="store_true")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="report on a relation file")
    c.add_argument("file")
    c.add_argument("--x", type=parse_vector, help="comma-separated vector in D(T)")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append",
                   help="suite id, comma list or 'all' (repeatable); known: " + ", ".join(SUITES))
    v.add_argument("--trials", type=positive_int, default=DEFAULT_TRIALS)
    v.add_argument("--dims", type=parse_dims, default=[(4, 4)])
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("demo-remark24", parents=[common], help="truncated sequence-space norm table")
    d.add_argument("--n-list", type=n_list, default=[4, 16, 64])
    d.set_defaults(func=cmd_demo)
    return parser


_DEFAULTS = {"tol": None, "seed": 0, "out": None, "field": "complex"}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    for k, v in _DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    if args.tol is None:
        args.tol = 1e-8 if args.command == "verify" else DEFAULT_TOL
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
