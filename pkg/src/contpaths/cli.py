"""Command-line interface.

Every subcommand prints one JSON record (default) or CSV rows.  Exit status
is 0 on success, 2 when a verification fails and 1 on usage or resource
errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction

from . import kernels
from .contcoeff import continuous_binomial_closed, continuous_multinomial, default_cap
from .geometry import MEASURES, PatternPolytope, count_lattice_paths, pattern_volume
from .pde import pde_residual_series
from .series import ResourceLimitError
from .smirnov import SmirnovWord, count_smirnov, enumerate_smirnov
from .todd import VARIANTS, expected_count, kp_discretize, perturbed_simplex_volume
from .verify import run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _exact(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _float_vector(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed vector {text!r}: expected comma-separated numbers") from None


def _int_vector(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed vector {text!r}: expected comma-separated integers") from None


def _parse_grid(text: str) -> dict[str, list[float]]:
    """Parse "x=0.25:4:0.25,y=1:2:0.5" into inclusive ranges."""
    axes = {}
    for part in text.split(","):
        try:
            name, spec = part.split("=")
            start, stop, step = (Fraction(v) for v in spec.split(":"))
        except ValueError:
            raise UsageError(f"malformed grid axis {part!r}: expected name=start:stop:step") from None
        if step <= 0 or stop < start:
            raise UsageError(f"grid axis {part!r} needs step > 0 and stop >= start")
        count = int((stop - start) / step) + 1
        axes[name.strip()] = [float(start + i * step) for i in range(count)]
    return axes


def _emit(record, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
        return
    rows = record if isinstance(record, list) else [record]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (f"{v:.17g}" if isinstance(v, float) else v) for k, v in row.items()})
    out.write(buf.getvalue())


def _cbinom(args, out) -> int:
    if args.grid:
        axes = _parse_grid(args.grid)
        if set(axes) != {"x", "y"}:
            raise UsageError("cbinom grid needs exactly the axes x and y")
        rows = []
        for x, y in itertools.product(axes["x"], axes["y"]):
            r = continuous_binomial_closed(x, y)
            rows.append({"x": x, "y": y, "value": r.value, "tail_bound": r.tail_bound})
        _emit(rows if args.format == "csv" else {"command": "cbinom", "rows": rows}, args.format, out)
        return EXIT_OK
    if args.x is None or args.y is None:
        raise UsageError("cbinom needs --x and --y (or --grid)")
    r = continuous_binomial_closed(args.x, args.y)
    _emit(
        {"command": "cbinom", "inputs": {"x": args.x, "y": args.y}, "value": r.value, "tail_bound": r.tail_bound},
        args.format,
        out,
    )
    return EXIT_OK


def _cmultinomial_record(x, cap, method):
    cap = default_cap(x) if cap is None else cap
    r = continuous_multinomial(x, cap, method)
    record = {"value": r.value, "tail_bound": r.tail_bound, "cap": cap}
    if r.notes:
        record["notes"] = list(r.notes)
    return record


def _cmultinomial(args, out) -> int:
    if args.grid:
        axes = _parse_grid(args.grid)
        names = sorted(axes, key=lambda k: int(k[1:]) if k[1:].isdigit() else k)
        if any(not (n.startswith("x") and n[1:].isdigit()) for n in names) or len(names) < 2:
            raise UsageError("cmultinomial grid axes must be named x1, x2, ...")
        rows = []
        for point in itertools.product(*(axes[n] for n in names)):
            rec = _cmultinomial_record(list(point), args.cap, args.method)
            rows.append({**dict(zip(names, point)), "value": rec["value"], "tail_bound": rec["tail_bound"], "cap": rec["cap"]})
        _emit(rows if args.format == "csv" else {"command": "cmultinomial", "rows": rows}, args.format, out)
        return EXIT_OK
    if args.x is None:
        raise UsageError("cmultinomial needs --x (or --grid)")
    x = _float_vector(args.x)
    rec = _cmultinomial_record(x, args.cap, args.method)
    _emit({"command": "cmultinomial", "inputs": {"x": x, "method": args.method}, **rec}, args.format, out)
    return EXIT_OK


def _smirnov(args, out) -> int:
    if args.nu is not None:
        nu = _int_vector(args.nu)
        _emit({"command": "smirnov", "nu": nu, "count": count_smirnov(nu)}, args.format, out)
        return EXIT_OK
    if args.d is None or args.n is None:
        raise UsageError("smirnov needs --nu, or --d with --n")
    words = enumerate_smirnov(args.d, args.n)
    _emit(
        {"command": "smirnov", "inputs": {"d": args.d, "n": args.n}, "count": len(words), "words": [str(w) for w in words]},
        args.format,
        out,
    )
    return EXIT_OK


def _paths(args, out) -> int:
    q = _int_vector(args.q)
    _emit({"command": "paths", "inputs": {"q": q}, "count": str(count_lattice_paths(q))}, args.format, out)
    return EXIT_OK


def _volume(args, out) -> int:
    x = _float_vector(args.x)
    word = SmirnovWord.parse(args.word, len(x))
    value = pattern_volume(PatternPolytope(word, tuple(x)), args.measure)
    _emit(
        {"command": "volume", "inputs": {"word": str(word), "x": x, "measure": args.measure}, "value": float(value)},
        args.format,
        out,
    )
    return EXIT_OK


def _todd(args, out) -> int:
    count = kp_discretize(perturbed_simplex_volume(args.n, args.x, args.variant))
    want, label = expected_count(args.n, args.x, args.variant)
    record = {
        "command": "todd",
        "inputs": {"n": args.n, "x": args.x, "variant": args.variant},
        "count": _exact(count),
        "expected": f"{label}={want}",
    }
    _emit(record, args.format, out)
    return EXIT_OK if count == want else EXIT_FAILED


def _pde_check(args, out) -> int:
    report = pde_residual_series(args.d, args.cap)
    record = {
        "command": "pde-check",
        "inputs": {"d": args.d, "cap": args.cap},
        "ok": report.ok,
        "trustworthy_degree": report.trustworthy_degree,
        "max_residual": _exact(report.max_abs_coefficient),
    }
    if report.offending_exponents:
        record["offending_exponents"] = [list(e) for e in report.offending_exponents]
    _emit(record, args.format, out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _verify_all(args, out) -> int:
    results = run_all(quick=args.quick)
    width = max(len(r.name) for r in results)
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed (backend: {kernels.BACKEND})\n")
    return EXIT_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="contpaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("cbinom", _cbinom, "continuous binomial coefficient (Bessel closed form)")
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--grid", help='sweep, e.g. "x=0.25:4:0.25,y=0.25:4:0.25"')

    p = add("cmultinomial", _cmultinomial, "continuous multinomial coefficient")
    p.add_argument("--x", help="comma-separated coordinates, e.g. 1.0,2.0,0.5")
    p.add_argument("--cap", type=int, help="total-degree truncation (default depends on x)")
    p.add_argument("--method", choices=("series", "borel_route", "closed_form"), default="series")
    p.add_argument("--grid", help='sweep, e.g. "x1=0:1:0.5,x2=0:1:0.5"')

    p = add("smirnov", _smirnov, "count or list Smirnov words")
    p.add_argument("--nu", help="frequency vector, e.g. 2,2")
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)

    p = add("paths", _paths, "count monotone lattice paths to q")
    p.add_argument("--q", required=True)

    p = add("volume", _volume, "volume of a pattern polytope")
    p.add_argument("--word", required=True, help='pattern such as "1212"')
    p.add_argument("--x", required=True)
    p.add_argument("--measure", choices=MEASURES, default="cd")

    p = add("todd", _todd, "lattice count of a perturbed simplex via Todd operators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="two_sided")

    p = add("pde-check", _pde_check, "exact series residual of the multinomial PDE")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, required=True)

    p = add("verify-all", _verify_all, "run every acceptance check")
    p.add_argument("--quick", action="store_true", help="smaller parameter ranges")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, TypeError, ArithmeticError, ResourceLimitError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
