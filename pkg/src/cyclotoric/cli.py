"""Command-line entry point: every pipeline as a subcommand with JSON I/O.

Exit codes are machine-readable: 0 success, 1 selftest failures, 2 invalid
input of any kind, 3 a computational bound was hit (factorization cap).
Error documents have the shape {"error": {"kind": ..., "message": ...}} and
go to stdout like every other result; output files are written atomically,
so a failing run never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .classgroup import dual_graph
from .cubic import (BrauerQuotient, DiagonalCubic, FactorizationBoundExceeded,
                    associated_jacobian, brauer_quotient, is_rational_cube,
                    is_rational_cube_by_factoring)
from .curves import WeierstrassCurve, compare_with_prediction
from .fan import resolution_pipeline
from .goursat import torsion_audit
from .intmat import IntMatrix
from .selftest import DEFAULT_SEED, run_selftest
from .tate import fixed_subgroup_rank, tate_h0, tate_h1


class _JsonArgumentParser(argparse.ArgumentParser):
    """argparse that reports its own failures in the JSON error shape."""

    def error(self, message):
        print(jsonio.dumps_stable(
            {"error": {"kind": "validation", "message": message}}), end="")
        raise SystemExit(2)


def _parse_int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"{what} must be comma-separated integers, got {raw!r}") from exc


def _parse_rational(raw: str, what: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{what} must be a rational like 3 or 3/2, got {raw!r}") from exc


def _load_doc(path_or_inline: str, what: str):
    """Accept either a JSON file path or inline JSON (leading '[' or '{')."""
    text = path_or_inline.strip()
    if text.startswith("[") or text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"inline {what} is not valid JSON: {exc}") from exc
    try:
        return jsonio.load_json(path_or_inline)
    except FileNotFoundError as exc:
        raise ValueError(f"{what} file not found: {path_or_inline}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{what} file is not valid JSON: {exc}") from exc


# -- handlers (each returns the output document) -----------------------------


def _cmd_resolve(args) -> dict:
    weights = _parse_int_list(args.weights, "--weights")
    report = resolution_pipeline(args.p, weights)
    return jsonio.resolution_report_to_doc(report)


def _cmd_classgroup(args) -> dict:
    fan = jsonio.fan_from_doc(_load_doc(args.fan, "fan"))
    return jsonio.class_group_doc(fan)


def _cmd_dualgraph(args) -> dict:
    fan = jsonio.fan_from_doc(_load_doc(args.fan, "fan"))
    exceptional = _parse_int_list(args.exceptional, "--exceptional")
    return jsonio.dual_graph_to_doc(dual_graph(fan, exceptional))


def _cmd_tate(args) -> dict:
    doc = _load_doc(args.module, "module")
    if args.p is not None:
        if not isinstance(doc, dict):
            raise ValueError("module document must be an object")
        stated = doc.get("p")
        if stated is not None and stated != args.p:
            raise ValueError(
                f"--p {args.p} contradicts the module document's p = {stated}")
        doc = {**doc, "p": args.p}
    mod = jsonio.module_from_doc(doc)
    return {
        "p": mod.p,
        "h0": jsonio.group_to_doc(tate_h0(mod)),
        "h1": jsonio.group_to_doc(tate_h1(mod)),
    }


def _cmd_fixed_rank(args) -> dict:
    matrix = jsonio.matrix_from_doc(_load_doc(args.matrix, "matrix"))
    b = fixed_subgroup_rank(matrix, args.p)
    return {"p": args.p, "b": b, "fixed_order": args.p ** b}


def _cmd_audit(args) -> dict:
    return jsonio.audit_to_doc(torsion_audit(args.p, args.b))


def _cmd_oracle(args) -> dict:
    curve = WeierstrassCurve(args.q, args.a4, args.a6)
    return jsonio.oracle_to_doc(curve, compare_with_prediction(curve))


def _cmd_brauer_cubic(args) -> dict:
    surface = DiagonalCubic(
        _parse_rational(args.a, "--a"),
        _parse_rational(args.b, "--b"),
        _parse_rational(args.c, "--c"))
    four_abc = 4 * surface.a * surface.b * surface.c
    if args.check_by_factoring:
        # Independent route: may hit the iteration cap (exit 3), never lies.
        is_cube = is_rational_cube_by_factoring(four_abc)
        quotient = BrauerQuotient.Z_MOD_2 if is_cube else BrauerQuotient.TRIVIAL
    else:
        is_cube = is_rational_cube(four_abc)
        quotient = brauer_quotient(surface)
    return {
        "four_abc": jsonio.rational_to_str(four_abc),
        "is_cube": is_cube,
        "brauer_quotient": quotient.value,
        "jacobian": associated_jacobian(surface).equation(),
    }


def _cmd_selftest(args) -> dict:
    return run_selftest(only=args.only, seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = _JsonArgumentParser(
        prog="cyclotoric",
        description="Toric resolutions of cyclic quotient singularities and "
                    "the torsion bookkeeping built on them.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--out", help="write the JSON result to this file atomically")
        return p

    p = add("resolve", _cmd_resolve,
            "resolve 1/p(a1,...,an) on the quotient and cover lattices")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weights", required=True, help="comma-separated, e.g. 1,2")

    p = add("classgroup", _cmd_classgroup, "divisor class group of a fan")
    p.add_argument("--fan", required=True, help="fan JSON file or inline JSON")

    p = add("dualgraph", _cmd_dualgraph, "dual graph of an exceptional ray set")
    p.add_argument("--fan", required=True, help="fan JSON file or inline JSON")
    p.add_argument("--exceptional", required=True,
                   help="comma-separated ray indices, e.g. 1,2")

    p = add("tate", _cmd_tate, "Tate cohomology H^0, H^1 of a cyclic module")
    p.add_argument("--module", required=True, help="module JSON file or inline JSON")
    p.add_argument("--p", type=int, help="cross-check against the document's p")

    p = add("fixed-rank", _cmd_fixed_rank,
            "rank b of the fixed subgroup of an order-p action mod p")
    p.add_argument("--matrix", required=True, help="matrix JSON file or inline JSON")
    p.add_argument("--p", type=int, required=True)

    p = add("audit", _cmd_audit, "classify index-p subgroups and audit torsion")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = add("oracle", _cmd_oracle, "exhaustive elliptic-curve consistency oracle")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a4", type=int, required=True)
    p.add_argument("--a6", type=int, required=True)

    p = add("brauer-cubic", _cmd_brauer_cubic,
            "Brauer quotient and jacobian of a diagonal cubic surface")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--check-by-factoring", action="store_true",
                   help="decide cubeness from a prime factorization instead of "
                        "cube roots; may exhaust the iteration cap (exit 3)")

    p = add("selftest", _cmd_selftest, "run the embedded acceptance suites")
    p.add_argument("--only", help="run a single named suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    return parser


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        jsonio.atomic_write(out, text)
    else:
        print(text, end="")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.handler(args)
    except FactorizationBoundExceeded as exc:
        _emit_error(args, "computational-bound", str(exc))
        return 3
    except (ValueError, AssertionError) as exc:
        _emit_error(args, "validation", str(exc))
        return 2
    _emit(args, jsonio.dumps_stable(doc))
    if args.subcommand == "selftest" and not doc["ok"]:
        return 1
    return 0


def _emit_error(args, kind: str, message: str) -> None:
    # Errors never go through --out: no partial or misleading output files.
    print(jsonio.dumps_stable({"error": {"kind": kind, "message": message}}), end="")


if __name__ == "__main__":
    sys.exit(main())
