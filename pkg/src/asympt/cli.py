"""Command-line front end.

Exit status is 0 on success, 2 for invalid input and 3 for numerical failure;
diagnostics go to stderr.  JSON output carries ``"schema": 1``; CSV uses ``.``
decimals and 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence

import numpy as np

from . import __version__
from . import accel, baryinterp, cfrac, domb_sykes, fourier_pade, hermite_pade, pade
from .casebook import CASES, CaseResult, run_case
from .errors import Breakdown, InputError, NumericalError
from .series_core import PowerSeries
from .two_point import TwoPointData, construct_tppa

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL = 0, 2, 3


# -- formatting ---------------------------------------------------------------

def fmt(x: float) -> str:
    """17 significant digits, locale independent."""
    return format(float(x), ".17g")


def _jsonable(x):
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": _jsonable(x.real), "im": _jsonable(x.imag)}
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else str(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class Output:
    """Collects the result of a subcommand and renders it in the chosen mode."""

    def __init__(self, mode: str, stream=None):
        self.mode = mode
        self.stream = stream or sys.stdout

    def json(self, payload: dict) -> None:
        body = {"schema": 1}
        body.update(_jsonable(payload))
        self.stream.write(json.dumps(body, indent=2) + "\n")

    def csv(self, rows: Sequence[Sequence], header: Sequence[str] | None = None) -> None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) if isinstance(v, (int, float, np.number)) and not isinstance(v, bool)
                        else v for v in row])
        self.stream.write(buf.getvalue())

    def table(self, rows: Sequence[tuple[str, object]]) -> None:
        width = max((len(k) for k, _ in rows), default=0)
        for k, v in rows:
            if isinstance(v, (float, np.floating)):
                v = repr(float(v))
            self.stream.write(f"{k:<{width}}  {v}\n")


# -- input --------------------------------------------------------------------

def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def read_series(path: str) -> PowerSeries:
    """Series JSON ``{"kind": ..., "coeffs": [...]}``."""
    try:
        obj = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    return PowerSeries.from_json(obj)


def _float(token: str, where: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise InputError(f"{where}: not a number: {token!r}") from None


def read_sequence(path: str) -> np.ndarray:
    """One value per line; blank lines and ``#`` comments are ignored."""
    vals = []
    for i, line in enumerate(_read_text(path).splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            vals.append(_float(line, f"{path}:{i}"))
    if not vals:
        raise InputError(f"{path}: no values")
    return np.asarray(vals)


def read_xy(path: str) -> tuple[np.ndarray, np.ndarray]:
    """``x,y`` per line; a non-numeric first line is treated as a header."""
    xs, ys = [], []
    rows = list(csv.reader(io.StringIO(_read_text(path))))
    for i, row in enumerate(rows, 1):
        row = [c.strip() for c in row]
        if not row or not any(row) or row[0].startswith("#"):
            continue
        if len(row) != 2:
            raise InputError(f"{path}:{i}: expected two columns, got {len(row)}")
        if i == 1 and not xs:
            try:
                float(row[0])
            except ValueError:
                continue
        xs.append(_float(row[0], f"{path}:{i}"))
        ys.append(_float(row[1], f"{path}:{i}"))
    if not xs:
        raise InputError(f"{path}: no data rows")
    return np.asarray(xs), np.asarray(ys)


# -- stage tracking -----------------------------------------------------------

class _Stage:
    name = "start"


_stage = _Stage()


@contextmanager
def stage(name: str) -> Iterator[None]:
    """Label the work in progress so failures can name it.

    The label is deliberately left in place when the body raises.
    """
    prev, _stage.name = _stage.name, name
    yield
    _stage.name = prev


# -- subcommands --------------------------------------------------------------

def _emit_rational(out: Output, r: pade.RationalApproximant, points: list[float], label: str,
                   extra: dict | None = None) -> None:
    with stage("evaluation"):
        values = [float(r(x)) for x in points]
    if out.mode == "json":
        payload = r.to_json()
        payload["values"] = [{"x": x, "y": y} for x, y in zip(points, values)]
        payload.update(extra or {})
        out.json(payload)
    elif out.mode == "csv":
        out.csv([(x, y) for x, y in zip(points, values)])
    else:
        rows = [("approximant", label), ("numerator", list(map(float, r.num))),
                ("denominator", list(map(float, r.den)))]
        rows += [(k, v) for k, v in (extra or {}).items()]
        rows += [(f"value at {x!r}", y) for x, y in zip(points, values)]
        out.table(rows)


def _emit_table(out: Output, f: PowerSeries, max_n: int, max_m: int, points: list[float]) -> None:
    with stage(f"Padé table up to [{max_n}/{max_m}]"):
        table = pade.pade_table(f, max_n, max_m)
    cells = []
    for m, row in enumerate(table):
        for n, r in enumerate(row):
            vals = []
            for x in points:
                try:
                    vals.append(float(r(x)) if r is not None else math.nan)
                except NumericalError:
                    vals.append(math.nan)
            cells.append((n, m, r, vals))
    if out.mode == "json":
        out.json({"cells": [{"n": n, "m": m, "gap": r is None,
                             **({"num": r.num, "den": r.den} if r is not None else {}),
                             "values": v} for n, m, r, v in cells]})
    elif out.mode == "csv":
        out.csv([(n, m, *v) for n, m, _, v in cells], ["n", "m"] + [fmt(x) for x in points])
    else:
        out.table([(f"[{n}/{m}]", "gap" if r is None else v if v else list(map(float, r.num)))
                   for n, m, r, v in cells])


def cmd_pade(args, out: Output) -> None:
    with stage("reading series"):
        f = read_series(args.series)
    with stage(f"constructing [{args.n}/{args.m}]"):
        r = pade.construct(f, args.n, args.m)
    if args.table is not None:
        _emit_table(out, f, *args.table, args.eval)
        return
    extra = {}
    if args.poles is not None:
        with stage("pole analysis"):
            rep = pade.pole_zero_report(r, args.poles)
        extra["poles"] = [_scalar(p.location) for p in rep.poles]
        extra["residues"] = [p.residue for p in rep.poles]
        extra["froissart_pairs"] = len(rep.froissart_pairs)
    _emit_rational(out, r, args.eval, f"[{args.n}/{args.m}]", extra)


def cmd_tppa(args, out: Output) -> None:
    with stage("reading series"):
        near, far = read_series(args.near), read_series(args.far)
    offset = args.n - args.m if args.offset is None else args.offset
    with stage(f"constructing two-point [{args.n}/{args.m}]"):
        r = construct_tppa(TwoPointData(near, far, args.k_zero, offset), args.n, args.m)
    _emit_rational(out, r, args.eval, f"[{args.n}/{args.m}] two-point")


def cmd_accel(args, out: Output) -> None:
    with stage("reading sequence"):
        s = read_sequence(args.seq)
    if args.method == "classify":
        with stage("classification"):
            c = accel.classify(s)
        payload = {"kind": c.kind.value, "ratio": c.ratio_estimate, "limit": c.limit_estimate}
        if out.mode == "json":
            out.json(payload)
        elif out.mode == "csv":
            out.csv([(c.ratio_estimate,), (c.limit_estimate,)])
        else:
            out.table(list(payload.items()))
        return
    with stage(f"{args.method} transform"):
        if args.method == "aitken":
            col = accel.aitken(s)
        elif args.method == "wynn":
            table = accel.wynn_epsilon(s, 2 * args.k)
            if table.k_max < 2 * args.k:
                raise InputError(f"order {args.k} needs at least {2 * args.k + 1} terms")
            col = table.column(2 * args.k)
        else:
            if s.size <= 2 * args.k:
                raise InputError(f"order {args.k} needs at least {2 * args.k + 1} terms")
            col = np.ma.masked_all(s.size - 2 * args.k)
            for p in range(args.k, s.size - args.k):
                col[p - args.k] = accel.shanks(s, args.k, p)
    idx = np.flatnonzero(~np.ma.getmaskarray(col))
    if idx.size == 0:
        raise Breakdown(f"{args.method}: no valid accelerated values")
    values = np.ma.getdata(col)[idx]
    best = float(values[-1])
    if out.mode == "json":
        out.json({"method": args.method, "k": args.k, "index": idx, "values": values,
                  "estimate": best})
    elif out.mode == "csv":
        out.csv([(v,) for v in values])
    else:
        rows = [("method", args.method), ("order", args.k)]
        rows += [(f"n={i}", float(v)) for i, v in zip(idx, values)]
        rows.append(("estimate", best))
        out.table(rows)


def cmd_cfrac(args, out: Output) -> None:
    with stage("reading series"):
        f = read_series(args.series)
    with stage("quotient-difference expansion"):
        cf = cfrac.from_series(f, args.depth, strict=args.strict)
    with stage("evaluation"):
        values = [float(cf(x)) for x in args.eval]
    if out.mode == "json":
        out.json({"a": cf.a, "c": cf.c, "terminated": cf.terminated,
                  "breakdown_index": cf.breakdown_index,
                  "values": [{"x": x, "y": y} for x, y in zip(args.eval, values)]})
    elif out.mode == "csv":
        out.csv([(v,) for v in cf.c])
    else:
        rows = [("head", float(cf.a)), ("coefficients", list(map(float, cf.c))),
                ("terminated", cf.terminated)]
        if cf.breakdown_index is not None:
            rows.append(("breakdown at", cf.breakdown_index))
        rows += [(f"value at {x!r}", y) for x, y in zip(args.eval, values)]
        out.table(rows)


def cmd_domb_sykes(args, out: Output) -> None:
    with stage("reading series"):
        f = read_series(args.series)
    with stage("ratio fit"):
        if args.square:
            res = domb_sykes.square_ratio_fit(f, max(args.n_min, 2), weighted=not args.unweighted)
            pts = None
        else:
            res = domb_sykes.fit(f, args.n_min, weighted=not args.unweighted)
            pts = domb_sykes.plot_points(f, args.n_min)
    payload = {"eps0": res.eps0, "alpha": res.alpha, "sign_pattern": res.sign_pattern.value,
               "intercept": res.intercept, "slope": res.slope, "fit_residual": res.fit_residual,
               "points_used": res.points_used, "growth": res.growth.value,
               "growth_k": res.growth_k}
    if out.mode == "json":
        out.json(payload)
    elif out.mode == "csv":
        if pts is None:
            raise InputError("plot points are only available for the plain ratio fit")
        out.csv(list(zip(*pts)))
    else:
        out.table(list(payload.items()))


def cmd_gibbs(args, out: Output) -> None:
    with stage("partial sum overshoot"):
        raw = fourier_pade.gibbs_overshoot(fourier_pade.partial_sum(args.terms))
    rows = []
    for n in args.N:
        with stage(f"Fourier-Padé order {n}"):
            rows.append((n, fourier_pade.gibbs_overshoot(fourier_pade.build(n))))
    if out.mode == "json":
        out.json({"partial_sum_terms": args.terms, "partial_sum_overshoot": raw,
                  "limit": fourier_pade.GIBBS_LIMIT - 1.0,
                  "fourier_pade": [{"N": n, "overshoot": v} for n, v in rows]})
    elif out.mode == "csv":
        x = np.linspace(0.0, math.pi, args.points)
        cols = [x, fourier_pade.partial_sum(args.terms)(x)]
        cols += [fourier_pade.build(n)(x) for n, _ in rows]
        out.csv(list(zip(*cols)), ["x", f"partial_{args.terms}"] + [f"fp_{n}" for n, _ in rows])
    else:
        table = [(f"partial sum ({args.terms} terms)", raw)]
        table += [(f"Fourier-Padé N={n}", v) for n, v in rows]
        out.table(table)


def cmd_soliton(args, out: Output) -> None:
    rows = []
    for n in args.N:
        with stage(f"amplitude for N={n}"):
            a0 = hermite_pade.soliton_a0(n)
        dev = abs(a0 - hermite_pade.NUMERICAL_A0) / hermite_pade.NUMERICAL_A0 * 100.0
        rows.append((n, a0, dev))
    if out.mode == "json":
        out.json({"reference": hermite_pade.NUMERICAL_A0,
                  "rows": [{"N": n, "A0": a, "deviation_percent": d} for n, a, d in rows]})
    elif out.mode == "csv":
        out.csv(rows, ["N", "A0", "deviation_percent"])
    else:
        out.table([(f"N={n}", f"A0={a!r}  deviation={d:.4f}%") for n, a, d in rows])


def cmd_hermite(args, out: Output) -> None:
    with stage("reading series"):
        f = read_series(args.series)
    with stage(f"implicit fit of degree {args.p}"):
        F = hermite_pade.construct_implicit(f, args.p)
    branch_rows = []
    for e in args.eval:
        with stage(f"branches at {e!r}"):
            branch_rows.append((e, hermite_pade.branches(F, e)))
    folds = []
    if args.folds is not None:
        with stage("fold search"):
            folds = hermite_pade.fold_points(F, *args.folds)
    if out.mode == "json":
        payload = F.to_json()
        payload["branches"] = [{"eps": e, "roots": list(b)} for e, b in branch_rows]
        payload["folds"] = folds
        out.json(payload)
    elif out.mode == "csv":
        out.csv([(t["eps_power"], t["f_power"], t["coeff"]) for t in F.to_json()["terms"]],
                ["eps_power", "f_power", "coeff"])
    else:
        rows = [("degree", F.p), ("shift", F.shift)]
        rows += [(f"eps^{t['eps_power']} g^{t['f_power']}", t["coeff"])
                 for t in F.to_json()["terms"]]
        rows += [(f"branches at {e!r}", [_scalar(v) for v in b]) for e, b in branch_rows]
        if args.folds is not None:
            rows.append(("folds", folds))
        out.table(rows)


def _scalar(v, rel: float = 1e-12):
    """Real part when the imaginary part is round-off."""
    v = complex(v)
    return v.real if abs(v.imag) <= rel * abs(v) else v


def cmd_interp(args, out: Output) -> None:
    with stage("reading data"):
        x, y = read_xy(args.data)
        order = np.argsort(x, kind="stable")
        x, y = x[order], y[order]
    with stage("building interpolant"):
        b = baryinterp.build(x, y)
    pts = list(args.eval)
    if args.grid is not None:
        if len(args.grid) == 1:
            lo, hi, n = float(x[0]), float(x[-1]), args.grid[0]
        elif len(args.grid) == 3:
            lo, hi, n = args.grid
        else:
            raise InputError("--grid takes COUNT or LO HI COUNT")
        if n < 1 or int(n) != n:
            raise InputError("grid count must be a positive integer")
        pts += list(np.linspace(lo, hi, int(n)))
    # sorted and unique, so the CSV is itself valid interpolation data
    pts = sorted(set(map(float, pts)))
    with stage("evaluation"):
        vals = np.asarray(b(np.asarray(pts, dtype=float)), dtype=float) if pts else np.empty(0)
    if out.mode == "json":
        out.json({"nodes": b.nodes, "weights": b.weights,
                  "values": [{"x": p, "y": v} for p, v in zip(pts, vals)]})
    elif out.mode == "csv":
        out.csv(list(zip(pts, vals)))
    else:
        out.table([("nodes", b.nodes.size)] + [(f"value at {p!r}", float(v)) for p, v in zip(pts, vals)])


def _case_csv(out: Output, r: CaseResult) -> None:
    lengths = {k: np.asarray(v).size for k, v in r.data.items()}
    if lengths:
        n = max(lengths.values())
        keys = [k for k in r.data if lengths[k] == n]
        cols = [np.asarray(r.data[k], dtype=float) for k in keys]
        out.csv(list(zip(*cols)), keys)
    else:
        out.csv([(k, v) for k, v in r.computed.items()], ["quantity", "value"])


def cmd_case(args, out: Output) -> None:
    spec = CASES[args.case]
    params = {p.name: getattr(args, p.name) for p in spec.params}
    with stage(f"case {args.case}"):
        r = run_case(args.case, **params)
    if out.mode == "json":
        out.json(r.to_json())
    elif out.mode == "csv":
        _case_csv(out, r)
    else:
        out.stream.write(f"case {r.case_id}\n")
        w = max((len(k) for k in r.computed), default=0)
        for k, v in r.computed.items():
            line = f"  {k:<{w}}  {fmt(v)}"
            ref = r.references.get(k)
            if ref is not None:
                line += f"  ref {fmt(ref.value)} [{ref.provenance.value}]"
                if ref.tolerance is not None:
                    line += f"  tol {fmt(ref.tolerance)}  {'ok' if r.within(k) else 'FAIL'}"
            out.stream.write(line + "\n")


def cmd_version(args, out: Output) -> None:
    if out.mode == "json":
        out.json({"version": __version__})
    else:
        out.stream.write(__version__ + "\n")


# -- parser -------------------------------------------------------------------

def _add_mode(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="mode", action="store_const", const="json",
                   help="emit JSON")
    g.add_argument("--csv", dest="mode", action="store_const", const="csv",
                   help="emit CSV plot data")
    p.set_defaults(mode="table")


def _evals(p: argparse.ArgumentParser, what: str = "x") -> None:
    p.add_argument("--eval", type=float, action="append", default=[], metavar=what.upper(),
                   help=f"evaluate at {what} (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asympt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("pade", help="Padé approximant of a series")
    p.add_argument("--series", required=True, help="series JSON file ('-' for stdin)")
    p.add_argument("--n", type=int, required=True, help="numerator degree")
    p.add_argument("--m", type=int, required=True, help="denominator degree")
    p.add_argument("--poles", type=float, nargs="?", const=math.inf, default=None, metavar="R",
                   help="report poles (within radius R) and residues")
    p.add_argument("--table", type=int, nargs=2, metavar=("N", "M"),
                   help="emit the Padé table up to [N/M] evaluated at the --eval points")
    _evals(p)
    _add_mode(p)
    p.set_defaults(func=cmd_pade)

    p = sub.add_parser("tppa", help="two-point Padé approximant")
    p.add_argument("--near", "--zero", dest="near", required=True, help="series JSON at zero")
    p.add_argument("--far", "--inf", dest="far", required=True, help="series JSON at infinity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k-zero", "--k", dest="k_zero", type=int, required=True,
                   help="conditions taken at zero")
    p.add_argument("--offset", type=int, default=None, help="leading far-field power (default n-m)")
    _evals(p)
    _add_mode(p)
    p.set_defaults(func=cmd_tppa)

    p = sub.add_parser("accel", help="accelerate a sequence")
    p.add_argument("--seq", required=True, help="sequence CSV, one value per line")
    p.add_argument("--method", choices=("aitken", "wynn", "shanks", "classify"), default="wynn")
    p.add_argument("--k", type=int, default=1, help="transform order (wynn, shanks)")
    _add_mode(p)
    p.set_defaults(func=cmd_accel)

    p = sub.add_parser("cfrac", help="continued fraction of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="fail on breakdown instead of truncating")
    _evals(p)
    _add_mode(p)
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("domb-sykes", help="nearest singularity from coefficient ratios")
    p.add_argument("--series", required=True)
    p.add_argument("--n-min", "--nmin", dest="n_min", type=int, default=1,
                   help="first ratio index used")
    p.add_argument("--square", action="store_true", help="fit sqrt|C_n/C_(n-2)|")
    p.add_argument("--unweighted", action="store_true", help="equal weights")
    _add_mode(p)
    p.set_defaults(func=cmd_domb_sykes)

    p = sub.add_parser("gibbs", help="overshoot of sign(x) approximations")
    p.add_argument("--N", "--n", dest="N", type=int, nargs="+", default=[2, 4, 6, 8, 10],
                   help="Fourier-Padé orders")
    p.add_argument("--terms", type=int, default=50, help="terms of the partial sum")
    p.add_argument("--points", "--grid", dest="points", type=int, default=1001,
                   help="CSV grid size")
    _add_mode(p)
    p.set_defaults(func=cmd_gibbs)

    p = sub.add_parser("soliton", help="soliton amplitude from diagonal approximants")
    p.add_argument("--N", "--order", dest="N", type=int, nargs="+", default=[1, 2, 3, 4],
                   help="diagonal approximant orders")
    _add_mode(p)
    p.set_defaults(func=cmd_soliton)

    p = sub.add_parser("hermite", help="implicit Hermite-Padé polynomial of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--p", type=int, required=True, help="total degree")
    p.add_argument("--folds", type=float, nargs=2, metavar=("LO", "HI"), help="search folds")
    _evals(p, "eps")
    _add_mode(p)
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("interp", help="barycentric rational interpolation")
    p.add_argument("--data", required=True, help="x,y CSV")
    p.add_argument("--grid", type=float, nargs="+", metavar="ARG",
                   help="COUNT points over the node range, or LO HI COUNT")
    _evals(p)
    _add_mode(p)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("case", help="run a worked study")
    cases = p.add_subparsers(dest="case", required=True, metavar="case")
    for cid, spec in CASES.items():
        cp = cases.add_parser(cid, help=spec.summary)
        for prm in spec.params:
            cp.add_argument(f"--{prm.name}", type=prm.type, default=prm.default, help=prm.help,
                            choices=prm.choices)
        _add_mode(cp)
        cp.set_defaults(func=cmd_case)

    p = sub.add_parser("version", help="print the version")
    _add_mode(p)
    p.set_defaults(func=cmd_version)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.mode)
    _stage.name = "start"
    try:
        args.func(args, out)
    except InputError as exc:
        print(f"asympt {args.command}: {_stage.name}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"asympt {args.command}: {_stage.name} failed: {type(exc).__name__}: {exc}",
              file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
