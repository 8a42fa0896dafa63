"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, replace
from fractions import Fraction

from . import closed_form as cf
from . import genfun, matrix_engine as me, quat_seq as qs, seq_core as sc, verify
from .errors import DegenerateDelta, TribQuatError
from .quaternion import Quaternion
from .seq_core import PRESETS, SequenceParams

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    params: SequenceParams | None
    preset_name: str | None
    ns: list
    modulus: int | None
    fmt: str
    tol: cf.Tolerances
    seed: int
    n_given: bool


def _n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--n-range expects lo:hi, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--n-range must satisfy 0 <= lo <= hi, got {text!r}")
    return lo, hi


def build_config(args, *, need_params=True, default_n=0) -> CliConfig:
    if args.preset and args.params:
        raise UsageError("give exactly one of --preset or --params")
    params = name = None
    if args.preset:
        if args.preset not in PRESETS:
            raise UsageError(f"unknown preset {args.preset!r}; choose from {', '.join(PRESETS)}")
        name, params = args.preset, PRESETS[args.preset]
    elif args.params:
        try:
            params = sc.parse_params(args.params)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"--params: {exc}") from None
    elif need_params:
        raise UsageError("one of --preset or --params is required")

    if args.n is not None and args.n_range:
        raise UsageError("give at most one of --n or --n-range")
    n_given = args.n is not None or bool(args.n_range)
    if args.n_range:
        lo, hi = _n_range(args.n_range)
        ns = list(range(lo, hi + 1))
    else:
        n = default_n if args.n is None else args.n
        if n < 0:
            raise UsageError("--n must be non-negative")
        ns = [n]
    if args.mod is not None and args.mod < 2:
        raise UsageError("--mod must be >= 2")
    tol = cf.DEFAULT_TOL
    if args.tol is not None:
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
        tol = replace(tol, binet_rel=args.tol, norm_rel=args.tol)
    return CliConfig(params, name, ns, args.mod, args.format, tol, args.seed, n_given)


# ---------------------------------------------------------------------------
# rendering


def quat_json(q: Quaternion) -> dict:
    return {"w": str(q.w), "x": str(q.x), "y": str(q.y), "z": str(q.z)}


def quat_plain(q: Quaternion) -> str:
    return f"{q.w} + {q.x}i + {q.y}j + {q.z}k"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def render_scalars(cfg: CliConfig, values: list) -> str:
    if cfg.fmt == "json":
        items = [{"n": n, "value": str(v)} for n, v in zip(cfg.ns, values)]
        return _dump(items[0] if len(items) == 1 else items)
    if cfg.fmt == "csv":
        return _csv([(n, str(v)) for n, v in zip(cfg.ns, values)], ("n", "value"))
    return "\n".join(str(v) for v in values)


def render_quats(cfg: CliConfig, quats: list) -> str:
    if cfg.fmt == "json":
        items = [quat_json(q) for q in quats]
        return _dump(items[0] if len(items) == 1 else items)
    if cfg.fmt == "csv":
        return _csv([(n, *map(str, q)) for n, q in zip(cfg.ns, quats)], ("n", "w", "x", "y", "z"))
    return "\n".join(quat_plain(q) for q in quats)


def _c(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.15g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.15g} {sign} {abs(z.imag):.15g}i"


# ---------------------------------------------------------------------------
# commands


def cmd_term(cfg: CliConfig) -> str:
    if cfg.modulus:
        ctx = me.ModCtx(cfg.modulus)
        values = [me.term_mod(cfg.params, n, ctx) for n in cfg.ns]
    else:
        values = _terms_for(cfg.params, cfg.ns)
    return render_scalars(cfg, values)


def _terms_for(params, ns):
    vs = sc.terms(params, max(ns) + 1)
    return [vs[n] for n in ns]


def cmd_quat(cfg: CliConfig) -> str:
    qv = qs.quat_terms(cfg.params, max(cfg.ns) + 1)
    return render_quats(cfg, [qv[n] for n in cfg.ns])


def cmd_sum(cfg: CliConfig) -> str:
    try:
        values = [sc.partial_sum(cfg.params, n) for n in cfg.ns]
    except DegenerateDelta as exc:
        print(f"note: {exc}; using direct summation", file=sys.stderr)
        vs = sc.terms(cfg.params, max(cfg.ns) + 1)
        values = [sum(vs[: n + 1], Fraction(0)) for n in cfg.ns]
    return render_scalars(cfg, values)


def cmd_quat_sum(cfg: CliConfig) -> str:
    try:
        values = [qs.quat_partial_sum(cfg.params, n) for n in cfg.ns]
    except DegenerateDelta as exc:
        print(f"note: {exc}; using direct summation", file=sys.stderr)
        qv = qs.quat_terms(cfg.params, max(cfg.ns) + 1)
        zero = Quaternion(*(Fraction(0),) * 4)
        values = [sum(qv[: n + 1], zero) for n in cfg.ns]
    return render_quats(cfg, values)


def cmd_roots(cfg: CliConfig) -> str:
    roots = cf.solve_cubic(cfg.params)  # raises on non-positive discriminant
    out = {
        "delta": str(cf.discriminant(cfg.params)),
        "alpha": f"{roots.alpha:.15g}",
        "omega1": _c(roots.omega1),
        "omega2": _c(roots.omega2),
        "cardano_a": f"{roots.cardano_a:.15g}",
        "cardano_b": f"{roots.cardano_b:.15g}",
    }
    name = cfg.preset_name or next((k for k, v in PRESETS.items() if v == cfg.params), None)
    if name:
        rep = cf.table1_report(name, cfg.tol)
        out["table_value"] = f"{rep['table_value']:.15g}"
        out["table_note"] = rep["discrepancy"]
    if cfg.fmt == "json":
        return _dump(out)
    if cfg.fmt == "csv":
        return _csv([(k, "" if v is None else v) for k, v in out.items()], ("key", "value"))
    lines = [f"{k} = {v}" for k, v in out.items() if k != "table_note"]
    if out.get("table_note"):
        lines.append(f"note: table value {out['table_note']}")
    return "\n".join(lines)


def cmd_norm(cfg: CliConfig) -> str:
    closed_ok = cf.discriminant(cfg.params) > 0
    rows = []
    for n in cfg.ns:
        exact = qs.quat_term(cfg.params, n).norm2()
        closed = f"{cf.norm_closed(cfg.params, n):.15g}" if closed_ok else None
        rows.append({"n": n, "exact": str(exact), "closed_form": closed})
    if cfg.fmt == "json":
        return _dump(rows[0] if len(rows) == 1 else rows)
    if cfg.fmt == "csv":
        return _csv([(r["n"], r["exact"], r["closed_form"] or "") for r in rows],
                    ("n", "exact", "closed_form"))
    return "\n".join(
        r["exact"] + ("" if r["closed_form"] is None else f"  (closed form {r['closed_form']})")
        for r in rows
    )


def cmd_genfun(cfg: CliConfig) -> str:
    gf = genfun.build_gf(cfg.params)
    count = (max(cfg.ns) + 1) if cfg.n_given else 10
    coeffs = genfun.expand(gf, count)
    if cfg.fmt == "json":
        return _dump({
            "numerator": [quat_json(q) for q in gf.numerator],
            "denominator": [str(d) for d in gf.denominator],
            "coefficients": [quat_json(q) for q in coeffs],
        })
    if cfg.fmt == "csv":
        return _csv([(n, *map(str, q)) for n, q in enumerate(coeffs)], ("n", "w", "x", "y", "z"))
    num = " + ".join(f"({quat_plain(q)}){'' if k == 0 else ' x' if k == 1 else ' x^2'}"
                     for k, q in enumerate(gf.numerator))
    den = " ".join(
        ["1"] + [f"{'-' if d <= 0 else '+'} {abs(d)}x{'' if k == 1 else '^' + str(k)}"
                 for k, d in enumerate(gf.denominator) if k]
    )
    lines = [f"numerator: {num}", f"denominator: {den}"]
    lines += [f"[{n}] {quat_plain(q)}" for n, q in enumerate(coeffs)]
    return "\n".join(lines)


def cmd_preset(cfg: CliConfig) -> str:
    names = [cfg.preset_name] if cfg.preset_name else list(PRESETS)
    rows = [(k, str(PRESETS[k])) for k in names]
    if cfg.fmt == "json":
        return _dump({k: v.split(",") for k, v in rows})
    if cfg.fmt == "csv":
        return _csv([(k, *v.split(",")) for k, v in rows], ("name", "a", "b", "c", "r", "s", "t"))
    return "\n".join(f"{k}: {v}" for k, v in rows)


def cmd_verify(cfg: CliConfig):
    if cfg.params is not None:
        sets = [cfg.params]
    else:
        sets = verify.default_param_sets(cfg.seed)
    lo, hi = (cfg.ns[0], cfg.ns[-1]) if cfg.n_given else (0, 60)
    moduli = (cfg.modulus,) if cfg.modulus else verify.MODULI
    report = verify.run(sets, lo, hi, cfg.tol, moduli)
    ok = verify.all_passed(report)
    if cfg.fmt == "json":
        text = _dump(report)
    elif cfg.fmt == "csv":
        text = _csv([(r["id"], r["status"], len(r["params"]), len(r["skipped"]))
                     for r in report["identities"]], ("id", "status", "checked", "skipped"))
    else:
        lines = [f"# {report['rejection_rule']}", f"# n in [{lo}, {hi}], {len(sets)} param set(s)"]
        for r in report["identities"]:
            line = f"{r['status'].upper():7} {r['id']}"
            if r["status"] == "skipped" and r["skipped"]:
                line += f"  ({r['skipped'][0]['reason']})"
            lines.append(line)
        text = "\n".join(lines)
    if not ok:
        first = next(r for r in report["identities"] if r["status"] == "fail")
        print(f"first counterexample ({first['id']}): {_dump(first['counterexample'])}",
              file=sys.stderr)
    return text, EXIT_OK if ok else EXIT_VERIFY


def _timed(f):
    t0 = time.perf_counter()
    v = f()
    return v, time.perf_counter() - t0


def cmd_bench(cfg: CliConfig, max_exact: int = 200_000):
    params = cfg.params or PRESETS["tribonacci"]
    ns = cfg.ns if cfg.n_given else [0, 1_000, 100_000, 10**9]
    ctx = me.ModCtx(cfg.modulus or 10**9 + 7)
    rows = []
    for n in ns:
        row = {"n": n, "iterative_s": None, "matrix_s": None, "exact_equal": None}
        if n <= max_exact:
            v_it, row["iterative_s"] = _timed(lambda: sc.term(params, n))
            v_mx, row["matrix_s"] = _timed(lambda: me.term_matrix(params, n))
            row["exact_equal"] = v_it == v_mx
        r_mod, row["modular_s"] = _timed(lambda: me.term_mod(params, n, ctx))
        row["modular_equal"] = r_mod == me.term_mod(params, n, ctx, ltr=True)
        row["modulus"] = ctx.modulus
        rows.append(row)
    ok = all(r["modular_equal"] and r["exact_equal"] is not False for r in rows)
    cols = ("n", "iterative_s", "matrix_s", "modular_s", "exact_equal", "modular_equal", "modulus")
    if cfg.fmt == "json":
        text = _dump(rows)
    else:
        text = _csv([tuple("" if r[c] is None else r[c] for c in cols) for r in rows], cols)
    return text, EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help=f"one of: {', '.join(PRESETS)}")
    common.add_argument("--params", help="a,b,c,r,s,t (integers or p/q)")
    common.add_argument("--n", type=int)
    common.add_argument("--n-range", dest="n_range", metavar="LO:HI")
    common.add_argument("--mod", type=int)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--tol", type=float)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="tribquat",
        description="Generalized Tribonacci numbers and quaternions, computed exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("term", "V_n (optionally mod m)"),
        ("quat", "quaternion Q_n"),
        ("sum", "V_0 + ... + V_n"),
        ("quat-sum", "Q_0 + ... + Q_n"),
        ("roots", "characteristic roots and discriminant"),
        ("norm", "squared norm of Q_n, exact and closed form"),
        ("genfun", "generating function and its expansion"),
        ("verify", "check every identity"),
        ("preset", "list named parameter sets"),
        ("bench", "time iterative, matrix and modular paths"),
    ):
        sub.add_parser(name, parents=[common], help=help_)
    return parser


_NEEDS_PARAMS = {"term", "quat", "sum", "quat-sum", "roots", "norm", "genfun"}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad syntax
    try:
        cfg = build_config(args, need_params=args.command in _NEEDS_PARAMS)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tribquat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handlers = {
        "term": cmd_term,
        "quat": cmd_quat,
        "sum": cmd_sum,
        "quat-sum": cmd_quat_sum,
        "roots": cmd_roots,
        "norm": cmd_norm,
        "genfun": cmd_genfun,
        "preset": cmd_preset,
        "verify": cmd_verify,
        "bench": cmd_bench,
    }
    try:
        result = handlers[args.command](cfg)
    except TribQuatError as exc:
        print(f"tribquat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
