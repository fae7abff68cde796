"""Command-line surface: every computation, machine-readable output.

Exit codes: 0 = success and all self-checks pass, 2 = input/parse error,
3 = a numerical self-check failed.  Output is CSV (header row, RFC-4180
quoting) or JSON (one object per invocation); floats are printed with 17
significant digits so identical invocations are byte-identical and JSON
round-trips bit-exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import engine, limit
from .analytic import WalkParams, characteristic_function, moment, position_probability
from .coin import Coin, Qubit, hadamard_coin, make_qubit, validate_coin
from .errors import QWalkError
from .paths import StepCount, closed_form_coefficients, path_sum, path_sum_exhaustive
from .symmetry import is_symmetric_state, mean_zero_check, symmetry_evidence

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SELF_CHECK = 3

DIST_TOL = 1e-8
CHARFN_TOL = 1e-8
MOMENT_TOL = 1e-8
ORACLE_TOL = 1e-9
NORM_TOL = 1e-8

QUBIT_PRESETS = {
    "symmetric": (1.0 / math.sqrt(2.0), 1j / math.sqrt(2.0)),
    "left": (1.0, 0.0),
    "right": (0.0, 1.0),
}


class CliInputError(Exception):
    pass


def _format_float(x: float) -> str:
    return format(float(x), ".17g")


def _dump_json(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_dump_json(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(json.dumps(str(k)) + ":" + _dump_json(v) for k, v in value.items()) + "}"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _parse_floats(text: str, count: int, flag: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise CliInputError(f"{flag}: expected comma-separated reals, got {text!r}") from exc
    if len(values) != count:
        raise CliInputError(f"{flag}: expected {count} reals, got {len(values)}")
    return values


def _coin_from_args(args) -> Coin:
    if args.coin is not None:
        v = _parse_floats(args.coin, 8, "--coin")
        matrix = [
            [complex(v[0], v[1]), complex(v[2], v[3])],
            [complex(v[4], v[5]), complex(v[6], v[7])],
        ]
        return validate_coin(matrix)
    return hadamard_coin()


def _qubit_from_args(args) -> Qubit:
    if args.qubit is not None:
        v = _parse_floats(args.qubit, 4, "--qubit")
        return make_qubit(complex(v[0], v[1]), complex(v[2], v[3]))
    alpha, beta = QUBIT_PRESETS[args.preset_qubit]
    return make_qubit(alpha, beta)


def _emit(args, command: str, columns, rows, extra: dict) -> None:
    if args.format == "json":
        doc = {"command": command, **extra, "columns": list(columns), "rows": [list(r) for r in rows]}
        sys.stdout.write(_dump_json(doc) + "\n")
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(
            ""
            if cell is None
            else cell
            if isinstance(cell, (str, int))
            else _format_float(cell)
            for cell in row
        )
    sys.stdout.write(buffer.getvalue())


def _cmd_dist(args, coin: Coin, qubit: Qubit) -> int:
    dist = engine.distribution(coin, qubit, args.steps)
    rows = []
    worst = 0.0
    closed_available = not coin.is_degenerate and args.steps >= 1
    params = WalkParams(coin=coin, qubit=qubit)
    for k, p_eng in zip(dist.positions, dist.probs):
        if closed_available:
            p_closed = position_probability(params, args.steps, int(k))
            diff = abs(float(p_eng) - p_closed)
            worst = max(worst, diff)
            rows.append([int(k), float(p_eng), p_closed, diff])
        else:
            rows.append([int(k), float(p_eng), None, None])
    columns = ["k", "p_engine", "p_closed", "abs_diff"]
    ok = worst <= DIST_TOL
    _emit(args, "dist", columns, rows, {
        "n": args.steps,
        "closed_form": closed_available,
        "max_abs_diff": worst if closed_available else None,
        "tolerance": DIST_TOL,
        "ok": ok,
    })
    return EXIT_OK if ok else EXIT_SELF_CHECK


def _xi_grid(args) -> list[float]:
    if args.xi is not None:
        return [float(part) for part in args.xi.split(",")]
    count = args.xi_points
    return [-math.pi + 2.0 * math.pi * j / count for j in range(count)]


def _cmd_charfn(args, coin: Coin, qubit: Qubit) -> int:
    params = WalkParams(coin=coin, qubit=qubit)
    dist = engine.distribution(coin, qubit, args.steps)
    ks = dist.positions.astype(float)
    probs = np.asarray(dist.probs)
    rows = []
    worst = 0.0
    for xi in _xi_grid(args):
        closed = characteristic_function(params, args.steps, xi)
        direct = complex(np.sum(np.exp(1j * xi * ks) * probs))
        diff = abs(closed - direct)
        worst = max(worst, diff)
        rows.append([xi, closed.real, closed.imag, direct.real, direct.imag, diff])
    ok = worst <= CHARFN_TOL
    _emit(args, "charfn", ["xi", "re_closed", "im_closed", "re_direct", "im_direct", "abs_diff"],
          rows, {"n": args.steps, "max_abs_diff": worst, "tolerance": CHARFN_TOL, "ok": ok})
    return EXIT_OK if ok else EXIT_SELF_CHECK


def _cmd_moments(args, coin: Coin, qubit: Qubit) -> int:
    params = WalkParams(coin=coin, qubit=qubit)
    dist = engine.distribution(coin, qubit, args.steps)
    rows = []
    worst = 0.0
    for m in range(1, args.max_order + 1):
        closed = moment(params, args.steps, m)
        direct = dist.moment(m)
        scale = max(1.0, float(args.steps) ** m)
        diff = abs(closed - direct) / scale
        worst = max(worst, diff)
        rows.append([m, closed, direct, diff])
    ok = worst <= MOMENT_TOL
    _emit(args, "moments", ["m", "closed", "direct", "rel_diff"], rows,
          {"n": args.steps, "max_rel_diff": worst, "tolerance": MOMENT_TOL, "ok": ok})
    return EXIT_OK if ok else EXIT_SELF_CHECK


def _cmd_symmetry(args, coin: Coin, qubit: Qubit) -> int:
    report = symmetry_evidence(coin, qubit, args.n_max)
    params = WalkParams(coin=coin, qubit=qubit)
    rows = [
        [n, gap, moment(params, n, 1)]
        for (n, gap) in report.evidence
    ]
    if coin.is_degenerate:
        member = None
        agrees = True
    else:
        member = is_symmetric_state(coin, qubit)
        zero_mean = mean_zero_check(coin, qubit, max(args.n_max, 3))
        agrees = member == report.symmetric == zero_mean
    _emit(args, "symmetry", ["n", "max_asymmetry", "mean"], rows, {
        "n_max": args.n_max,
        "algebraic_member": member,
        "empirically_symmetric": report.symmetric,
        "ok": agrees,
    })
    return EXIT_OK if agrees else EXIT_SELF_CHECK


def _cmd_limit(args, coin: Coin, qubit: Qubit) -> int:
    ld = limit.LimitDensity(coin=coin, qubit=qubit)
    a = ld.a_abs
    xs = np.linspace(-a, a, args.grid_points)
    rows = [[float(x), float(limit.density(ld, float(x))), limit.limit_cdf(ld, float(x))] for x in xs]
    norm = limit.limit_cdf(ld, a)
    m1 = limit.limit_moment(ld, 1)
    m2 = limit.limit_moment(ld, 2)
    ok = abs(norm - 1.0) <= NORM_TOL
    _emit(args, "limit", ["x", "density", "cdf"], rows, {
        "slope": ld.slope,
        "support": [-a, a],
        "mean": m1,
        "sd": math.sqrt(m2 - m1 * m1),
        "norm": norm,
        "ok": ok,
    })
    return EXIT_OK if ok else EXIT_SELF_CHECK


def _cmd_converge(args, coin: Coin, qubit: Qubit) -> int:
    n_list = [int(part) for part in args.n_list.split(",")]
    report = limit.ks_convergence(coin, qubit, n_list)
    rows = []
    worst_drift = 0.0
    for n, ks in report.entries:
        total = engine.distribution(coin, qubit, n).total()
        worst_drift = max(worst_drift, abs(total - 1.0))
        rows.append([n, ks, total])
    ok = worst_drift <= 1e-9
    _emit(args, "converge", ["n", "ks_distance", "total_probability"], rows,
          {"max_probability_drift": worst_drift, "ok": ok})
    return EXIT_OK if ok else EXIT_SELF_CHECK


def _cmd_oracle(args, coin: Coin, qubit: Qubit) -> int:
    rows = []
    worst = 0.0
    for n in range(1, args.n_cap + 1):
        for l in range(0, n + 1):
            m = n - l
            if coin.is_degenerate and l >= 1 and m >= 1:
                continue
            sc = StepCount(l=l, m=m)
            exhaustive = path_sum_exhaustive(coin, sc)
            closed = path_sum(coin, sc)
            coeffs = closed_form_coefficients(coin, sc).materialize()
            d1 = float(np.max(np.abs(exhaustive - closed)))
            d2 = float(np.max(np.abs(coeffs - closed)))
            worst = max(worst, d1, d2)
            rows.append([l, m, d1, d2])
    ok = worst <= ORACLE_TOL
    _emit(args, "oracle", ["l", "m", "enum_vs_closed", "coeff_vs_closed"], rows,
          {"n_cap": args.n_cap, "max_abs_diff": worst, "tolerance": ORACLE_TOL, "ok": ok})
    return EXIT_OK if ok else EXIT_SELF_CHECK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--coin", help="8 reals: re,im per entry, row-major")
    shared.add_argument("--preset-coin", choices=["hadamard"], default="hadamard")
    shared.add_argument("--qubit", help="4 reals: re,im of alpha then beta")
    shared.add_argument("--preset-qubit", choices=sorted(QUBIT_PRESETS), default="symmetric")
    shared.add_argument("--format", choices=["csv", "json"], default="csv")

    parser = argparse.ArgumentParser(prog="qwalk1d", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[shared], help="exact distribution vs closed form")
    p.add_argument("-n", "--steps", type=int, required=True)

    p = sub.add_parser("charfn", parents=[shared], help="characteristic function vs direct sum")
    p.add_argument("-n", "--steps", type=int, required=True)
    p.add_argument("--xi", help="comma-separated evaluation points")
    p.add_argument("--xi-points", type=int, default=20)

    p = sub.add_parser("moments", parents=[shared], help="closed-form moments vs direct sums")
    p.add_argument("-n", "--steps", type=int, required=True)
    p.add_argument("-m", "--max-order", type=int, default=4)

    p = sub.add_parser("symmetry", parents=[shared], help="symmetry classification and evidence")
    p.add_argument("--n-max", type=int, default=10)

    p = sub.add_parser("limit", parents=[shared], help="limit density, cdf, and moments")
    p.add_argument("--grid-points", type=int, default=41)

    p = sub.add_parser("converge", parents=[shared], help="KS distances to the limit law")
    p.add_argument("--n-list", default="50,100,200,400")

    p = sub.add_parser("oracle", parents=[shared], help="path-sum enumeration vs closed forms")
    p.add_argument("--n-cap", type=int, default=8)

    return parser


_HANDLERS = {
    "dist": _cmd_dist,
    "charfn": _cmd_charfn,
    "moments": _cmd_moments,
    "symmetry": _cmd_symmetry,
    "limit": _cmd_limit,
    "converge": _cmd_converge,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        steps = getattr(args, "steps", None)
        if steps is not None and steps < 0:
            raise CliInputError("-n must be non-negative")
        if args.command in ("charfn", "moments") and steps < 1:
            raise CliInputError(f"{args.command} needs -n >= 1")
        coin = _coin_from_args(args)
        qubit = _qubit_from_args(args)
        return _HANDLERS[args.command](args, coin, qubit)
    except (CliInputError, QWalkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
