"""Command-line front end.

Every subcommand emits records with fixed keys, as JSON lines (default)
or CSV with a fixed header.  Floats are written with 17 significant
digits.  Exit codes: 0 ok, 1 selftest failure, 2 bad input,
3 missing continuity certificate, 4 degenerate signal.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator

from .arcs import CircleArc, LimitMethod, SeriesResult, arc_measure, autocorrelation_arc, cdf
from .cantor import cantor_series
from .coefficients import Conjugate, Convolution, make_provider
from .dsl import parse_measure, parse_number
from .errors import (CertificateError, DegenerateSignalError, MeasureValidationError,
                     OracleUnsupported)
from .fejer import fejer_kernel
from .localdim import local_dimension
from .oracle import oracle_arc, oracle_atom, oracle_cdf
from .wiener import Window, atom_mass

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CERTIFICATE = 3
EXIT_DEGENERATE = 4

_SERIES_COLUMNS = ["value", "terms_used", "tail_estimate", "limit_term",
                   "limit_method", "smoothing", "oscillation"]

COLUMNS = {
    "arc": ["measure", "a", "b"] + _SERIES_COLUMNS + ["oracle"],
    "cdf": ["measure", "x"] + _SERIES_COLUMNS + ["oracle"],
    "atom": ["measure", "x", "window", "value", "terms_used", "oscillation", "oracle"],
    "autocorr": ["measure", "a", "b"] + _SERIES_COLUMNS + ["oracle"],
    "cantor": ["x", "partial_sum", "exact", "error", "terms_used", "tail_estimate"],
    "localdim": ["measure", "x", "slope", "intercept", "residual", "hypothesis_sum",
                 "hypothesis_met", "hypothesis_note", "radii", "log_measures",
                 "correction_ratios"],
    "fejer": ["n", "t", "value_sum", "value_closed"],
    "selftest": ["fixture", "cases", "failures", "worst_excess", "passed"],
}


def _float_text(value: float) -> str:
    text = format(value, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def _fmt(value) -> str:
    """JSON text for a scalar; floats carry 17 significant digits."""
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        return _float_text(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return json.dumps(value)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(_csv_cell(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _float_text(value)
    return str(value)


class _Writer:
    def __init__(self, command: str, fmt: str, out):
        self.command = command
        self.fmt = fmt
        self.out = out
        self.columns = COLUMNS[command]
        if fmt == "csv":
            self.csv = csv.writer(out, lineterminator="\n")
            self.csv.writerow(self.columns)

    def write(self, row: dict) -> None:
        missing = set(self.columns) ^ set(row)
        if missing:
            raise AssertionError(f"record keys out of schema: {sorted(missing)}")
        if self.fmt == "csv":
            self.csv.writerow([_csv_cell(row[c]) for c in self.columns])
        else:
            body = ", ".join(f"{json.dumps(c)}: {_fmt(row[c])}" for c in self.columns)
            self.out.write(f'{{"command": {json.dumps(self.command)}, {body}}}\n')
        self.out.flush()


def _series_fields(res: SeriesResult) -> dict:
    return {
        "value": res.value,
        "terms_used": res.terms_used,
        "tail_estimate": res.tail_estimate,
        "limit_term": res.limit_term,
        "limit_method": res.limit_method.value,
        "smoothing": res.smoothing,
        "oscillation": res.oscillation,
    }


def _oracle(enabled: bool, fn, *args):
    if not enabled:
        return None
    try:
        return fn(*args)
    except OracleUnsupported as exc:
        print(f"oracle unavailable: {exc}", file=sys.stderr)
        return None


def _smoothing(text: str):
    if text in ("auto", "none"):
        return text
    if text.startswith("block:"):
        try:
            block = int(text[len("block:"):])
        except ValueError:
            block = 0
        if block >= 1:
            return block
    raise argparse.ArgumentTypeError("expected auto, none or block:<k>")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _number(text: str) -> float:
    try:
        return parse_number(text)
    except MeasureValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _measure_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--measure", required=True, help="measure in the DSL")


def _format_arg(p: argparse.ArgumentParser, choices=("json", "csv"), default="json") -> None:
    p.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wiener-arcs",
        description="Reconstruct circle measures from their Fourier coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arc", help="measure of an arc [a, b)")
    _measure_arg(p)
    p.add_argument("--a", type=_number, required=True)
    p.add_argument("--b", type=_number, required=True)
    p.add_argument("--terms", type=_positive_int, required=True)
    p.add_argument("--limit-method", choices=[m.value for m in LimitMethod],
                   default=LimitMethod.ATOM_DECOMPOSITION.value)
    p.add_argument("--smooth", type=_smoothing, default="auto")
    p.add_argument("--check", action="store_true", help="also print the exact oracle")
    _format_arg(p)

    p = sub.add_parser("cdf", help="distribution function mu[0, x)")
    _measure_arg(p)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", type=_number)
    where.add_argument("--grid", type=_positive_int, help="x = k/M for k = 0..M")
    p.add_argument("--terms", type=_positive_int, required=True)
    p.add_argument("--limit-method", choices=[m.value for m in LimitMethod],
                   default=LimitMethod.ATOM_DECOMPOSITION.value)
    p.add_argument("--smooth", type=_smoothing, default="auto")
    p.add_argument("--check", action="store_true")
    _format_arg(p)

    p = sub.add_parser("atom", help="point mass mu{x}")
    _measure_arg(p)
    p.add_argument("--x", type=_number, required=True)
    p.add_argument("--terms", type=_positive_int, required=True)
    p.add_argument("--window", choices=[w.value for w in Window],
                   default=Window.ONE_SIDED.value)
    p.add_argument("--check", action="store_true")
    _format_arg(p)

    p = sub.add_parser("autocorr", help="autocorrelation measure of an arc")
    _measure_arg(p)
    p.add_argument("--a", type=_number, required=True)
    p.add_argument("--b", type=_number, required=True)
    p.add_argument("--terms", type=_positive_int, required=True)
    p.add_argument("--check", action="store_true")
    _format_arg(p)

    p = sub.add_parser("cantor", help="Fourier series of the Cantor function")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", type=_number)
    where.add_argument("--grid", type=_positive_int, help="x = k/(M+1) for k = 1..M")
    p.add_argument("--terms", type=_positive_int, required=True)
    _format_arg(p)

    p = sub.add_parser("localdim", help="log-log local dimension fit")
    _measure_arg(p)
    p.add_argument("--x", type=_number, required=True)
    p.add_argument("--rmax", type=_number, required=True)
    p.add_argument("--rmin", type=_number, required=True)
    p.add_argument("--points", type=_positive_int, default=10)
    p.add_argument("--terms", type=_positive_int, required=True)
    _format_arg(p)

    p = sub.add_parser("fejer", help="Fejer kernel, sum vs closed form")
    p.add_argument("--n", type=_nonneg_int, required=True)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--t", type=_number)
    where.add_argument("--grid", type=_positive_int, help="t = k/M for k = 0..M-1")
    _format_arg(p)

    p = sub.add_parser("selftest", help="oracle-equivalence sweep over the fixtures")
    p.add_argument("--arcs", type=_positive_int, default=20)
    p.add_argument("--terms", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    _format_arg(p, ("table", "json", "csv"), "table")
    return parser


def _cmd_arc(args) -> Iterator[dict]:
    spec = parse_measure(args.measure)
    provider = make_provider(spec)
    res = arc_measure(provider, CircleArc(args.a, args.b), args.terms,
                      args.limit_method, args.smooth)
    yield {"measure": args.measure, "a": args.a, "b": args.b, **_series_fields(res),
           "oracle": _oracle(args.check, oracle_arc, spec, args.a, args.b)}


def _cmd_cdf(args) -> Iterator[dict]:
    spec = parse_measure(args.measure)
    provider = make_provider(spec)
    if args.x is not None:
        points: Iterable[float] = [args.x]
    else:
        points = (k / args.grid for k in range(args.grid + 1))
    for x in points:
        res = cdf(provider, x, args.terms, args.limit_method, args.smooth)
        yield {"measure": args.measure, "x": x, **_series_fields(res),
               "oracle": _oracle(args.check, oracle_cdf, spec, x)}


def _cmd_atom(args) -> Iterator[dict]:
    spec = parse_measure(args.measure)
    est = atom_mass(make_provider(spec), args.x, args.window, args.terms)
    yield {"measure": args.measure, "x": args.x, "window": est.window.value,
           "value": est.value, "terms_used": est.terms, "oscillation": est.oscillation,
           "oracle": _oracle(args.check, oracle_atom, spec, args.x)}


def _cmd_autocorr(args) -> Iterator[dict]:
    spec = parse_measure(args.measure)
    res = autocorrelation_arc(make_provider(spec), CircleArc(args.a, args.b), args.terms)
    auto = Convolution(spec, Conjugate(spec))
    yield {"measure": args.measure, "a": args.a, "b": args.b, **_series_fields(res),
           "oracle": _oracle(args.check, oracle_arc, auto, args.a, args.b)}


def _cmd_cantor(args) -> Iterator[dict]:
    if args.x is not None:
        points: Iterable[float] = [args.x]
    else:
        points = (k / (args.grid + 1) for k in range(1, args.grid + 1))
    for x in points:
        pt = cantor_series(x, args.terms)
        yield {"x": pt.x, "partial_sum": pt.partial_sum, "exact": pt.exact,
               "error": pt.error, "terms_used": pt.N, "tail_estimate": pt.tail_estimate}


def _cmd_localdim(args) -> Iterator[dict]:
    provider = make_provider(parse_measure(args.measure))
    fit = local_dimension(provider, args.x, args.rmax, args.rmin, args.points, args.terms)
    yield {"measure": args.measure, "x": fit.x, "slope": fit.slope,
           "intercept": fit.intercept, "residual": fit.residual,
           "hypothesis_sum": fit.hypothesis_sum, "hypothesis_met": fit.hypothesis_met,
           "hypothesis_note": fit.hypothesis_note, "radii": list(fit.radii),
           "log_measures": list(fit.log_measures),
           "correction_ratios": list(fit.correction_ratios)}


def _cmd_fejer(args) -> Iterator[dict]:
    if args.t is not None:
        points: Iterable[float] = [args.t]
    else:
        points = (k / args.grid for k in range(args.grid))
    for t in points:
        k = fejer_kernel(args.n, t)
        yield {"n": k.n, "t": k.t, "value_sum": k.value_sum, "value_closed": k.value_closed}


def _cmd_selftest(args) -> Iterator[dict]:
    from .selftest import oracle_sweep

    for row in oracle_sweep(arcs=args.arcs, n_terms=args.terms, seed=args.seed):
        yield row


_COMMANDS = {
    "arc": _cmd_arc, "cdf": _cmd_cdf, "atom": _cmd_atom, "autocorr": _cmd_autocorr,
    "cantor": _cmd_cantor, "localdim": _cmd_localdim, "fejer": _cmd_fejer,
    "selftest": _cmd_selftest,
}


def _print_table(rows: list[dict], out) -> None:
    cols = COLUMNS["selftest"]
    cells = [[_csv_cell(r[c]) if c != "passed" else ("PASS" if r[c] else "FAIL")
              for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)) + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)) + "\n")


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rows = _COMMANDS[args.command](args)
        if args.command == "selftest":
            rows = list(rows)
            if args.format == "table":
                _print_table(rows, out)
            else:
                writer = _Writer(args.command, args.format, out)
                for row in rows:
                    writer.write(row)
            return EXIT_OK if all(r["passed"] for r in rows) else EXIT_FAIL
        writer = _Writer(args.command, args.format, out)
        for row in rows:
            writer.write(row)
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE
    except DegenerateSignalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (MeasureValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
