"""Command-line front end: ``primrep rep|verify|thm2|fit|char``.

Exit codes: 0 success, 1 a check or fit failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .catalog import evaluate_formula, get_entry
from .characters import CharacterError, parse_character
from .eisenfit import FitError, fit, infer_level, weight_of
from .repnums import count_primitive, count_representations, parse_form, primitive_from_rep, rep_series
from .scalars import RootOfUnity, format_scalar, scalar_equal
from .twisted_sums import (
    mobius_weighted_sum_bruteforce,
    mobius_weighted_sum_closed,
    mobius_weighted_sum_real,
)
from .verify import verify


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"lo..hi"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected lo..hi") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _ns(args) -> range:
    if args.n is not None and args.range is not None:
        raise UsageError("give --n or --range, not both")
    if args.n is not None:
        if args.n < 1:
            raise UsageError("n must be >= 1")
        return range(args.n, args.n + 1)
    if args.range is not None:
        lo, hi = parse_range(args.range)
        return range(lo, hi + 1)
    raise UsageError("one of --n or --range is required")


def render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, RootOfUnity) and value.order not in (1, 2, 4):
        return f"e({value.k}/{value.order})"
    return format_scalar(value)


def _json_value(value):
    if isinstance(value, (bool, int)):
        return value
    return render(value)


def emit(rows: list[dict], fmt: str, out) -> None:
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps({c: _json_value(row[c]) for c in cols}) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([render(row[c]) for c in cols])
        out.write(buf.getvalue())
    else:
        cells = [[render(row[c]) for c in cols] for row in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        out.write("  ".join(c.rjust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
        for r in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() + "\n")


# subcommands -------------------------------------------------------------------


def cmd_rep(args, out) -> int:
    try:
        form = parse_form(args.form)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ns = _ns(args)
    col = "r_p" if args.primitive else "r"
    if args.oracle == "formula":
        try:
            entry = get_entry(str(form))
        except KeyError:
            raise UsageError(f"no catalog formula for form {form}") from None
        fn = entry.primitive if args.primitive else (lambda n: evaluate_formula(entry.spec, n))
    elif args.oracle == "series":
        series = rep_series(form, ns.stop - 1)
        r = lambda n: series.counts[n]  # noqa: E731
        fn = (lambda n: primitive_from_rep(r, n)) if args.primitive else r
    else:
        fn = (lambda n: count_primitive(form, n)) if args.primitive else (lambda n: count_representations(form, n))
    emit([{"n": n, col: fn(n)} for n in ns], args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    lo, hi = parse_range(args.range)
    try:
        report = verify(args.entry, lo, hi, loop_oracle=not args.no_loop)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.report:
        try:
            with open(args.report, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"primrep: cannot write report: {exc}", file=sys.stderr)
            return 1
    rows = []
    for e in report["entries"]:
        failed = [c for c in e["checks"] if not c["pass"]]
        rows.append({
            "entry": e["label"],
            "form": e["form"],
            "result": "pass" if not failed else "FAIL",
            "first_counterexample": min(c["first_counterexample"] for c in failed) if failed else "-",
        })
    emit(rows, args.format, out)
    if args.format == "text":
        for er in report["errata"]:
            state = "holds" if er["stated_holds"] else f"fails first at n={er['stated_first_counterexample']}"
            fix = "holds" if er["corrected_holds"] else "fails"
            out.write(f"erratum {er['label']} ({er['kind']}): stated form {state}; corrected form {fix}\n")
    return 0 if report["all_pass"] else 1


def cmd_thm2(args, out) -> int:
    try:
        psi, phi = parse_character(args.psi), parse_character(args.phi)
    except CharacterError as exc:
        raise UsageError(str(exc)) from None
    if args.h < 0:
        raise UsageError("h must be >= 0")
    if args.method == "real" and not psi.is_real:
        raise UsageError(f"method 'real' needs a real psi, got {psi.syntax}")
    rows = []
    for n in _ns(args):
        row = {"n": n}
        if args.method == "brute":
            row["value"] = mobius_weighted_sum_bruteforce(psi, phi, args.h, n)
        elif args.method == "closed":
            row["value"] = mobius_weighted_sum_closed(psi, phi, args.h, n)
        elif args.method == "real":
            row["value"] = mobius_weighted_sum_real(psi, phi, args.h, n)
        else:
            row["brute"] = mobius_weighted_sum_bruteforce(psi, phi, args.h, n)
            row["closed"] = mobius_weighted_sum_closed(psi, phi, args.h, n)
            tol = 1e-9 * n**args.h
            row["equal"] = scalar_equal(row["brute"], row["closed"], tol)
        rows.append(row)
    emit(rows, args.format, out)
    if args.method == "both" and not all(r["equal"] for r in rows):
        return 1
    return 0


def cmd_fit(args, out) -> int:
    try:
        form = parse_form(args.form)
        weight_of(form)
    except (ValueError, FitError) as exc:
        raise UsageError(str(exc)) from None
    train = parse_range(args.train)
    validate = parse_range(args.validate)
    level = args.level if args.level is not None else infer_level(form)
    hi = max(train[1], validate[1])
    try:
        result = fit(rep_series(form, hi), level, train=train, validate=validate,
                     real_only=not args.all_characters)
    except FitError as exc:
        raise UsageError(str(exc)) from None
    if not result.residual_ok:
        print(f"primrep: fit failed ({result.status}): {result.message}", file=sys.stderr)
        return 1
    text = json.dumps(result.as_json_dict(args.label), indent=2) + "\n"
    if result.kernel:
        print(f"primrep: {result.message}", file=sys.stderr)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_char(args, out) -> int:
    try:
        chi = parse_character(args.character)
    except CharacterError as exc:
        raise UsageError(str(exc)) from None
    ns = _ns(args) if (args.n is not None or args.range is not None) else range(0, chi.modulus)
    emit([{"m": m, "value": chi(m)} for m in ns], args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primrep", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "csv", "jsonl"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("--n", type=int)
        p.add_argument("--range", help="inclusive lo..hi")

    p = sub.add_parser("rep", help="representation counts of a diagonal form")
    p.add_argument("--form", required=True, help="coefficients a1,a2,...")
    add_n(p)
    p.add_argument("--primitive", action="store_true", help="count primitive solutions only")
    p.add_argument("--oracle", choices=("loop", "series", "formula"), default="series")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", help="check catalog formulas against brute force")
    p.add_argument("entry", help="catalog label, form string, or 'all'")
    p.add_argument("--range", required=True, help="inclusive lo..hi")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--no-loop", action="store_true", help="skip the enumeration cross-check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("thm2", help="Moebius-weighted twisted divisor sums")
    p.add_argument("--psi", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--h", type=int, required=True)
    add_n(p)
    p.add_argument("--method", choices=("brute", "closed", "real", "both"), default="closed")
    p.set_defaults(func=cmd_thm2)

    p = sub.add_parser("fit", help="fit a theta series by Eisenstein coefficients")
    p.add_argument("--form", required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--train", default="1..10")
    p.add_argument("--validate", default="11..200")
    p.add_argument("--out")
    p.add_argument("--label")
    p.add_argument("--all-characters", action="store_true", help="include non-real characters")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("char", help="value table of a Dirichlet character")
    p.add_argument("character", help="1, kron:D, kron:D:N or mod:N:e1,...")
    add_n(p)
    p.set_defaults(func=cmd_char)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"primrep: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
