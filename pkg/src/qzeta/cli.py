"""Command-line front end.

Exit status: 0 when every check passes, 1 on an identity failure, 2 on a
configuration or validity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .exact_core import format_rational
from .qstirling import ZeroQNumber
from .tables import entry_poly, find_reference, load_entries
from .zeta_values import (NoStabilization, OutOfValidityRange, Route,
                          ZetaQuery, compute, f_poly, fit_npoly, route_valid,
                          routes_for)
from .zeta_values.genfun import MAX_F_S

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"2:12"`` (inclusive) or comma lists of either."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ":" in part:
                lo, hi = part.split(":", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ConfigError(f"bad range {text!r}") from None
    if not out:
        raise ConfigError(f"empty range {text!r}")
    return sorted(set(out))


def _parse_q(text: str | None) -> Fraction | None:
    if text is None or text in ("zeta", "root"):
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"bad q value {text!r}") from None


def _parse_routes(text: str, qry: ZetaQuery) -> list[Route]:
    if text == "all":
        return list(routes_for(qry))
    try:
        return [Route(r.strip()) for r in text.split(",") if r.strip()]
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _row(qry: ZetaQuery, route, value, agree) -> dict:
    return {"n": qry.n, "m": qry.m, "s": qry.s, "q": qry.q_label,
            "star": qry.star, "route": str(route), "value": value, "agree": agree}


def evaluate_cell(qry: ZetaQuery, routes, corrupt: str | None = None) -> list[dict]:
    """Evaluate routes for one query; rows carry values as ``"p/q"`` strings.

    Rows for routes that do not apply carry ``value=None`` and an ``error``;
    an arithmetic failure (non-rational result, valuation or internal
    mismatch) is additionally flagged with ``failed=True``.  ``agree`` marks
    whether the row matches the value held by a strict plurality of routes.
    """
    results = []
    for route in routes:
        why = route_valid(qry, route)
        if why is not None:
            results.append((route, None, why, False))
            continue
        try:
            value = compute(qry, route).value
        except (OutOfValidityRange, ZeroQNumber) as exc:
            results.append((route, None, f"{type(exc).__name__}: {exc}", False))
            continue
        except ArithmeticError as exc:
            results.append((route, None, f"{type(exc).__name__}: {exc}", True))
            continue
        if corrupt is not None and str(route) == corrupt:
            value = value + 1
        results.append((route, value, None, False))
    counts = Counter(v for _, v, _, _ in results if v is not None)
    ranked = counts.most_common(2)
    consensus = None
    if ranked and (len(ranked) == 1 or ranked[0][1] > ranked[1][1]):
        consensus = ranked[0][0]
    rows = []
    for route, value, err, failed in results:
        if value is None:
            row = _row(qry, route, None, None)
            row["error"] = err
            if failed:
                row["failed"] = True
        else:
            row = _row(qry, route, format_rational(value), value == consensus)
        rows.append(row)
    return rows


def _cell_passes(rows: list[dict]) -> bool:
    vals = {r["value"] for r in rows if r["value"] is not None}
    return len(vals) == 1 and not any(r.get("failed") for r in rows)


def _emit(report: dict, fmt: str, out: str | None, plain_lines: list[str]) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        fields = list(dict.fromkeys(k for r in report["rows"] for k in r))
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in report["rows"]:
            writer.writerow({k: _csv_cell(r.get(k)) for k in fields})
        text = buf.getvalue()
    else:
        text = "\n".join(plain_lines) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _csv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return "" if v is None else v


def _config(args) -> dict:
    cfg = {k: v for k, v in vars(args).items()
           if k not in ("func", "out", "format", "corrupt_route")}
    return cfg


def cmd_value(args) -> int:
    q = _parse_q(args.q)
    qry = ZetaQuery(args.n, args.m, args.s, q, args.star)
    routes = _parse_routes(args.routes, qry)
    rows = evaluate_cell(qry, routes, args.corrupt_route)
    computed = [r for r in rows if r["value"] is not None]
    if not computed:
        verdict, status = "NO-ROUTE", EXIT_CONFIG
    elif _cell_passes(rows):
        verdict, status = "AGREE", EXIT_OK
    else:
        verdict, status = "DISAGREE", EXIT_FAIL
    kind = "Z*" if qry.star else "Z"
    lines = [f"{kind}_{qry.n}(q={qry.q_label}; m={qry.m}, s={qry.s})"]
    for r in rows:
        shown = r["value"] if r["value"] is not None else f"n/a ({r['error']})"
        lines.append(f"  {r['route']:<20} {shown}")
    lines.append(f"verdict: {verdict}")
    report = {"config": _config(args), "rows": rows,
              "summary": {"pass": int(status == EXIT_OK), "fail": int(status == EXIT_FAIL),
                          "verdict": verdict}}
    _emit(report, args.format, args.out, lines)
    return status


def _verify_cell(job):
    qry, corrupt = job
    return evaluate_cell(qry, routes_for(qry), corrupt)


def cmd_verify(args) -> int:
    q = _parse_q(args.q)
    ns, ms, ss = parse_range(args.n), parse_range(args.m), parse_range(args.s)
    kinds = {"both": (True, False), "star": (True,), "plain": (False,)}[args.kind]
    jobs = []
    for n in ns:
        for m in ms:
            for s in ss:
                for star in kinds:
                    jobs.append((ZetaQuery(n, m, s, q, star), args.corrupt_route))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            cells = list(pool.map(_verify_cell, jobs, chunksize=4))
    else:
        cells = [_verify_cell(j) for j in jobs]
    order = {r: i for i, r in enumerate(Route)}
    passed = failed = 0
    rows, lines = [], []
    for (qry, _), cell in sorted(zip(jobs, cells), key=lambda jc: (
            jc[0][0].n, jc[0][0].m, jc[0][0].s, not jc[0][0].star)):
        cell = sorted(cell, key=lambda r: order[Route(r["route"])])
        ok = _cell_passes(cell)
        passed += ok
        failed += not ok
        rows.extend(cell)
        used = [r["route"] for r in cell if r["value"] is not None]
        vals = sorted({r["value"] for r in cell if r["value"] is not None})
        kind = "star " if qry.star else "plain"
        lines.append(f"{'PASS' if ok else 'FAIL'} {kind} n={qry.n} m={qry.m} s={qry.s} "
                     f"value={' | '.join(vals)} routes={','.join(used)}")
    lines.append(f"summary: {passed} pass, {failed} fail")
    report = {"config": _config(args), "rows": rows,
              "summary": {"pass": passed, "fail": failed}}
    _emit(report, args.format, args.out, lines)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_table(args) -> int:
    ns, ms = parse_range(args.n), parse_range(args.m)
    route = Route(args.route)
    rows, lines = [], []
    for n in ns:
        vals = []
        for m in ms:
            qry = ZetaQuery(n, m, args.s, _parse_q(args.q), args.star)
            why = route_valid(qry, route)
            if why is not None:
                row = _row(qry, route, None, None)
                row["error"] = why
                vals.append("-")
            else:
                v = format_rational(compute(qry, route).value)
                row = _row(qry, route, v, None)
                vals.append(v)
            rows.append(row)
        lines.append(f"n={n}: " + "  ".join(vals))
    header = f"{'Z*' if args.star else 'Z'}(m; s={args.s}) for m in {ms} via {route}"
    report = {"config": _config(args), "rows": rows,
              "summary": {"pass": len(rows), "fail": 0}}
    _emit(report, args.format, args.out, [header] + lines)
    return EXIT_OK


def cmd_fit(args) -> int:
    try:
        poly = fit_npoly(args.m, args.s, args.star, args.route, args.n_start,
                         args.confirm, args.max_degree)
    except NoStabilization as exc:
        report = {"config": _config(args), "rows": [],
                  "summary": {"pass": 0, "fail": 0, "error": str(exc)}}
        _emit(report, args.format, args.out, [f"error: {exc}"])
        return EXIT_CONFIG
    row = {"m": args.m, "s": args.s, "star": args.star,
           "route": str(args.route or ("genfun" if args.star else "general")),
           "degree": poly.degree,
           "coeffs": [format_rational(c) for c in poly.coeffs],
           "poly": str(poly), "reference": None, "agree": None}
    status = EXIT_OK
    if args.reference is not None:
        if args.reference == "builtin":
            entry = find_reference(args.m, args.s, args.star)
        else:
            entry = find_reference(args.m, args.s, args.star, load_entries(args.reference))
        if entry is None:
            raise ConfigError(f"no reference polynomial for m={args.m}, s={args.s}, "
                              f"star={args.star}")
        row["reference"] = entry.get("label")
        row["agree"] = entry_poly(entry) == poly
        status = EXIT_OK if row["agree"] else EXIT_FAIL
    lines = [f"{'Z*' if args.star else 'Z'}_n(zeta_n; {args.m}, {args.s}) = {poly}",
             f"degree {poly.degree}; sampled n = {poly.samples[0][0]}..{poly.samples[-1][0]}"]
    if row["reference"] is not None:
        lines.append(f"reference {row['reference']}: {'MATCH' if row['agree'] else 'MISMATCH'}")
    report = {"config": _config(args), "rows": [row],
              "summary": {"pass": int(status == EXIT_OK), "fail": int(status != EXIT_OK)}}
    _emit(report, args.format, args.out, lines)
    return status


def cmd_fpoly(args) -> int:
    if not 1 <= args.s <= MAX_F_S:
        raise ConfigError(f"s must be in 1..{MAX_F_S}")
    if not 0 <= args.l <= args.s:
        raise ConfigError("need 0 <= l <= s")
    poly = f_poly(args.s, args.l)
    grid = [[format_rational(c) for c in row] for row in poly.grid]
    lines = [f"F_{{{args.s},{args.l}}}(X, Y) = {poly}",
             "coefficient grid (row i = X^i, column j = Y^j):"]
    lines += ["  " + " ".join(f"{c:>8}" for c in row) for row in grid]
    report = {"config": _config(args),
              "rows": [{"s": args.s, "l": args.l, "grid": grid, "poly": str(poly)}],
              "summary": {"pass": 1, "fail": 0}}
    _emit(report, args.format, args.out, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeta", description="Exact q-multiple zeta(-star) values at roots of unity.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--q", default=None,
                        help="rational q; omit for q = zeta_n (root of unity)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[common], help="one value from several routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--star", action="store_true")
    p.add_argument("--routes", default="all", help="'all' or comma-separated route names")
    p.add_argument("--corrupt-route", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("verify", parents=[common], help="cross-route checks over a grid")
    p.add_argument("--n", default="2:12")
    p.add_argument("--m", default="0:3")
    p.add_argument("--s", default="1:3")
    p.add_argument("--kind", choices=("both", "star", "plain"), default="both")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--corrupt-route", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="values over n and m for one route")
    p.add_argument("--n", default="2:10")
    p.add_argument("--m", default="0:4")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--star", action="store_true")
    p.add_argument("--route", default="brute", choices=[str(r) for r in Route])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fit", parents=[common], help="value as a polynomial in n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--star", action="store_true")
    p.add_argument("--route", default=None, choices=[str(r) for r in Route])
    p.add_argument("--n-start", type=int, default=None)
    p.add_argument("--confirm", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=40)
    p.add_argument("--reference", default=None,
                   help="'builtin' for the bundled tables, or a JSON fixture path")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("fpoly", parents=[common], help="the polynomial F_{s,l}(X, Y)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_fpoly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, OutOfValidityRange, ValueError, ZeroQNumber) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
