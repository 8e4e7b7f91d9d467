"""frobkit command line: parse tuples, dispatch computations, emit reports.

Exit codes: 0 success (including "no reduction" and a null g_exact),
2 input validation, 3 resource/overflow/search-ceiling, 4 a verified
identity or progression claim failed to hold.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time
from pathlib import Path
from typing import Any

from . import __version__
from .denumerant import DEFAULT_ENUM_CAP, denumerant_table, enumerate_representations
from .envelope import OutputEnvelope, to_csv, to_json, to_text
from .errors import FrobkitError, InvalidInputError
from .family import DEFAULT_MAX_T, build_family, family_g0, verify_step
from .generators import Generators, reduce_step, validate
from .sfrobenius import (
    apery_table,
    frobenius_report,
    g_star,
    g_star_from_table,
    g_star_via_reduction,
    n_star,
    n_star_via_reduction,
)

_TUPLE_RE = re.compile(r"^\d+(,\d+)*$")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3
EXIT_VERIFY_FAILED = 4


def parse_tuple(text: str) -> list[int]:
    """Comma-separated positive integers, order preserved, no whitespace."""
    if not _TUPLE_RE.match(text):
        raise InvalidInputError(
            f"expected comma-separated positive integers without spaces, got {text!r}"
        )
    return [int(part) for part in text.split(",")]


def _gens_label(values: tuple[int, ...]) -> str:
    return "-".join(str(v) for v in values)


def _plot(args, make_figure, filename: str) -> list[str]:
    if args.plot_dir is None:
        return []
    from . import plotting

    fig = make_figure(plotting)
    path = plotting.save_figure(fig, Path(args.plot_dir) / filename)
    return [str(path)]


# --------------------------------------------------------------------------
# subcommand handlers: each returns (inputs, result, csv_rows, exit_code)
# --------------------------------------------------------------------------

def cmd_denumerant(args) -> tuple[dict, dict, list[dict], int]:
    gens = validate(parse_tuple(args.gens))
    if args.x < 0:
        raise InvalidInputError(f"--x must be nonnegative, got {args.x}")
    inputs = {
        "gens": list(gens.values),
        "x": args.x,
        "enumerate": bool(args.enumerate),
        "cap": args.cap,
    }
    table = denumerant_table(args.x, gens)
    count = table.counts[args.x]
    result: dict[str, Any] = {"count": count}
    rows = [{"x": args.x, "count": count}]
    if args.enumerate:
        reps = enumerate_representations(args.x, gens, cap=args.cap)
        result["representations"] = [list(r) for r in reps]
        rows = [
            {"index": i, **{f"m{j + 1}": c for j, c in enumerate(rep)}}
            for i, rep in enumerate(reps)
        ]
    figures = _plot(
        args,
        lambda p: p.denumerant_figure(table, highlight=args.x),
        f"denumerant_{_gens_label(gens.values)}_x{args.x}.png",
    )
    if figures:
        result["figures"] = figures
    return inputs, result, rows, EXIT_OK


def cmd_frobenius(args) -> tuple[dict, dict, list[dict], int]:
    gens = validate(parse_tuple(args.gens))
    inputs = {"gens": list(gens.values), "s": args.s}
    if args.modulus_index is not None:
        inputs["modulus_index"] = args.modulus_index
    report = frobenius_report(gens, args.s, args.modulus_index, args.ceiling)
    idx = (
        args.modulus_index
        if args.modulus_index is not None
        else min(range(gens.k), key=lambda i: gens.values[i])
    )
    result: dict[str, Any] = {
        "g_star": report.g_star,
        "g_exact": report.g_exact,
        "n_star": report.n_star,
        "modulus_index": idx,
        "modulus": gens.values[idx],
    }
    rows = [
        {"g_star": report.g_star, "g_exact": report.g_exact, "n_star": report.n_star}
    ]
    table = None
    if args.table or args.plot_dir is not None:
        table = apery_table(gens, args.s, args.modulus_index, args.ceiling)
    if args.table:
        assert table is not None
        result["table"] = [
            {"j": j, "n_j_s": e} for j, e in enumerate(table.entries)
        ]
        rows = [{"j": j, "n_j_s": e} for j, e in enumerate(table.entries)]
    figures = _plot(
        args,
        lambda p: p.apery_figure(table),
        f"frobenius_{_gens_label(gens.values)}_s{args.s}.png",
    )
    if figures:
        result["figures"] = figures
    return inputs, result, rows, EXIT_OK


def cmd_apery(args) -> tuple[dict, dict, list[dict], int]:
    gens = validate(parse_tuple(args.gens))
    inputs = {"gens": list(gens.values), "s": args.s}
    if args.modulus_index is not None:
        inputs["modulus_index"] = args.modulus_index
    table = apery_table(gens, args.s, args.modulus_index, args.ceiling)
    result: dict[str, Any] = {
        "modulus_index": table.modulus_index,
        "modulus": table.modulus,
        "entries": list(table.entries),
        "g_star": g_star_from_table(table),
    }
    rows = [{"j": j, "n_j_s": e} for j, e in enumerate(table.entries)]
    figures = _plot(
        args,
        lambda p: p.apery_figure(table),
        f"apery_{_gens_label(gens.values)}_s{args.s}.png",
    )
    if figures:
        result["figures"] = figures
    return inputs, result, rows, EXIT_OK


def cmd_family(args) -> tuple[dict, dict, list[dict], int]:
    base = validate(parse_tuple(args.base))
    if args.t_max < 1:
        raise InvalidInputError(f"--t-max must be >= 1, got {args.t_max}")
    inputs = {"base": list(base.values), "t_max": args.t_max}
    fam = build_family(base)
    reports = [
        verify_step(fam, t, max_t=max(args.t_max, DEFAULT_MAX_T), cap=args.cap)
        for t in range(1, args.t_max + 1)
    ]
    g0 = family_g0(fam)
    g0_direct = g_star(fam.generators, 0)
    g0_ok = g0 == g0_direct
    steps = [
        {
            "t": r.t,
            "value": r.value,
            "expected_count": r.expected_count,
            "actual_count": r.actual_count,
            "canonical_ok": r.canonical_ok,
            "window_min_count": r.window_min_count,
            "window_bound": r.window_bound,
            "holds": r.holds,
        }
        for r in reports
    ]
    all_hold = g0_ok and all(r.holds for r in reports)
    result: dict[str, Any] = {
        "pi": fam.pi,
        "cofactors": list(fam.cofactors),
        "sigma": fam.sigma,
        "g0_closed_form": g0,
        "g0_direct": g0_direct,
        "g0_ok": g0_ok,
        "steps": steps,
        "verdict": "pass" if all_hold else "fail",
    }
    figures = _plot(
        args,
        lambda p: p.family_figure(fam, reports),
        f"family_{_gens_label(base.values)}.png",
    )
    if figures:
        result["figures"] = figures
    return inputs, result, [dict(s) for s in steps], (
        EXIT_OK if all_hold else EXIT_VERIFY_FAILED
    )


def cmd_reduce(args) -> tuple[dict, dict, list[dict], int]:
    gens = validate(parse_tuple(args.gens))
    inputs = {"gens": list(gens.values), "s": args.s}
    step = reduce_step(gens)
    if step is None:
        result = {"d": 1, "no_reduction": True}
        return inputs, result, [{"d": 1, "no_reduction": True}], EXIT_OK
    checks = []
    for name, direct, via in (
        (
            "g_star",
            g_star(gens, args.s, ceiling=args.ceiling),
            g_star_via_reduction(step, args.s, ceiling=args.ceiling),
        ),
        (
            "n_star",
            n_star(gens, args.s, ceiling=args.ceiling),
            n_star_via_reduction(step, args.s, ceiling=args.ceiling),
        ),
    ):
        checks.append(
            {"quantity": name, "direct": direct, "via_reduction": via, "equal": direct == via}
        )
    all_equal = all(c["equal"] for c in checks)
    result = {
        "d": step.d,
        "pivot": step.pivot,
        "reduced": list(step.reduced.values),
        "checks": checks,
        "verdict": "pass" if all_equal else "fail",
    }
    return inputs, result, [dict(c) for c in checks], (
        EXIT_OK if all_equal else EXIT_VERIFY_FAILED
    )


# --------------------------------------------------------------------------
# parser assembly and entry point
# --------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="text",
        help="output format (default: text)",
    )
    p.add_argument(
        "--plot-dir",
        default=None,
        metavar="DIR",
        help="also render a figure for this report into DIR",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobkit",
        description="Exact generalized Frobenius number toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"frobkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("denumerant", help="count (and list) representations of a target")
    p.add_argument("--gens", required=True, help="generators, e.g. 15,10,6")
    p.add_argument("--x", type=int, required=True, help="target integer")
    p.add_argument("--enumerate", action="store_true", help="also list every representation")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                   help=f"witness budget for --enumerate (default {DEFAULT_ENUM_CAP})")
    _add_common(p)
    p.set_defaults(handler=cmd_denumerant)

    p = sub.add_parser("frobenius", help="g*_s, g_s and n*_s for a generator tuple")
    p.add_argument("--gens", required=True, help="generators, e.g. 3,5")
    p.add_argument("--s", type=int, default=0, help="representation threshold (default 0)")
    p.add_argument("--modulus-index", type=int, default=None,
                   help="which generator indexes the residue table (default: smallest)")
    p.add_argument("--table", action="store_true", help="include the full n_{j,s} table")
    p.add_argument("--ceiling", type=int, default=None,
                   help="override the residue-search safety ceiling")
    _add_common(p)
    p.set_defaults(handler=cmd_frobenius)

    p = sub.add_parser("apery", help="the residue-class minima table n_{j,s}")
    p.add_argument("--gens", required=True, help="generators, e.g. 3,5")
    p.add_argument("--s", type=int, default=0, help="representation threshold (default 0)")
    p.add_argument("--modulus-index", type=int, default=None,
                   help="which generator indexes the residue table (default: smallest)")
    p.add_argument("--ceiling", type=int, default=None,
                   help="override the residue-search safety ceiling")
    _add_common(p)
    p.set_defaults(handler=cmd_apery)

    p = sub.add_parser("family", help="verify the complementary-product family claims")
    p.add_argument("--base", required=True, help="pairwise coprime base, e.g. 2,3,5")
    p.add_argument("--t-max", type=int, default=3, help="verify steps t=1..t_max (default 3)")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                   help=f"witness budget per step (default {DEFAULT_ENUM_CAP})")
    _add_common(p)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("reduce", help="check the common-factor reduction identities")
    p.add_argument("--gens", required=True, help="generators, e.g. 5,6,9,21")
    p.add_argument("--s", type=int, default=0, help="representation threshold (default 0)")
    p.add_argument("--ceiling", type=int, default=None,
                   help="override the residue-search safety ceiling")
    _add_common(p)
    p.set_defaults(handler=cmd_reduce)

    return parser


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _colorize(text: str) -> str:
    if not _use_color():
        return text
    return text.replace(": pass", ": \033[32mpass\033[0m").replace(
        ": fail", ": \033[31mfail\033[0m"
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        inputs, result, rows, code = args.handler(args)
    except InvalidInputError as exc:
        print(f"frobkit: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FrobkitError as exc:
        print(f"frobkit: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    env = OutputEnvelope(
        command=args.command,
        inputs=inputs,
        result=result,
        elapsed_ms=elapsed_ms,
        version=__version__,
    )
    if args.format == "json":
        print(to_json(env))
    elif args.format == "csv":
        sys.stdout.write(to_csv(rows))
    else:
        print(_colorize(to_text(env)))
    return code


if __name__ == "__main__":
    sys.exit(main())
