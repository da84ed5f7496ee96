"""Command line front end.

Subcommand groups mirror the library modules: roots (isolation and
counting), interlace (relation decisions and the combination probe), poly
(transform arithmetic), poset and ferrers (layer-count polynomials), and
verify (the seeded suites).  All results go to stdout as deterministic JSON.

Exit codes: 0 on success, 1 when a verification found a mathematical
violation, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import ferrers as fe
from . import interlacing as il
from . import posets as po
from . import roots as rt
from . import transforms as tr
from .errors import PreconditionFailedError
from .polynomial import (
    Polynomial,
    format_polynomial_text,
    parse_polynomial_json,
    parse_polynomial_text,
)
from .roots import INF, NEG_INF, RootLocation, Rootedness
from .suites import run_suite, suite_names


def _parse_poly(text: str) -> Polynomial:
    text = text.strip()
    if text.startswith("["):
        return parse_polynomial_json(text)
    return parse_polynomial_text(text)


def _parse_bound(text: str) -> Fraction | float:
    lowered = text.strip().lower()
    if lowered in ("-inf", "-infinity"):
        return NEG_INF
    if lowered in ("inf", "+inf", "infinity"):
        return INF
    return Fraction(text)


def _poly_json(f: Polynomial) -> dict:
    return {
        "coefficients": [str(c) for c in f.coeffs],
        "text": format_polynomial_text(f),
    }


def _location_json(loc: RootLocation) -> dict:
    out: dict = {
        "lo": str(loc.lo),
        "hi": str(loc.hi),
        "multiplicity": loc.multiplicity,
        "exact": loc.is_exact,
    }
    if loc.is_exact:
        out["point"] = str(loc.point)
    return out


def _verdict_json(verdict: il.InterlaceVerdict) -> dict:
    out: dict = {
        "relation": verdict.relation.value,
        "swapped": verdict.swapped,
        "holds": verdict.holds,
        "strict": verdict.strict,
    }
    if verdict.witness is not None:
        out["witness"] = [_location_json(loc) for loc in verdict.witness]
    if verdict.reason:
        out["reason"] = verdict.reason
    return out


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


# -- command handlers ----------------------------------------------------------


def _cmd_roots(args: argparse.Namespace) -> int:
    f = _parse_poly(args.poly)
    if args.roots_cmd == "isolate":
        _emit({"roots": [_location_json(loc) for loc in rt.isolate_roots(f)]})
    elif args.roots_cmd == "count":
        lo, hi = _parse_bound(args.lo), _parse_bound(args.hi)
        _emit({"count": rt.count_roots(f, lo, hi), "interval": "(lo, hi]"})
    elif args.roots_cmd == "check-real":
        _emit({"rootedness": rt.is_real_rooted(f).value})
    else:  # in-interval
        lo, hi = Fraction(args.lo), Fraction(args.hi)
        inside = rt.roots_in_interval(f, lo, hi, closed=not args.open)
        _emit({"all_roots_inside": inside, "closed": not args.open})
    return 0


def _cmd_interlace(args: argparse.Namespace) -> int:
    if args.interlace_cmd == "check":
        g, f = _parse_poly(args.g), _parse_poly(args.f)
        _emit({"interlaces": il.interlaces(g, f, strict=args.strict), "strict": args.strict})
        return 0
    if args.interlace_cmd == "alternates":
        f, g = _parse_poly(args.f), _parse_poly(args.g)
        _emit(_verdict_json(il.alternates(f, g)))
        return 0
    f, g = _parse_poly(args.f), _parse_poly(args.g)
    report = il.obreschkoff_probe(f, g, samples=args.samples, rng_seed=args.seed)
    payload: dict = {
        "samples_run": report.samples_run,
        "skipped": report.skipped,
        "strict": report.strict,
        "passed": report.passed,
    }
    if report.failure is not None:
        payload["failure"] = {
            "alpha": str(report.failure.alpha),
            "beta": str(report.failure.beta),
            "verdict": report.failure.verdict,
        }
    _emit(payload)
    return 0 if report.passed else 1


def _cmd_poly(args: argparse.Namespace) -> int:
    name = args.poly_cmd
    if name in ("diamond", "schur", "altdiamond", "hp"):
        f, g = _parse_poly(args.f), _parse_poly(args.g)
        fn = {
            "diamond": tr.diamond,
            "schur": tr.schur_product,
            "altdiamond": tr.alt_diamond,
            "hp": tr.hermite_poulain,
        }[name]
        _emit(_poly_json(fn(f, g)))
    elif name == "laguerre":
        _emit(_poly_json(tr.laguerre_transform(_parse_poly(args.f))))
    elif name == "hxi":
        h = _parse_poly(args.h)
        _emit(_poly_json(tr.h_xi(h, Fraction(args.xi))))
    else:  # lphi
        f, h = _parse_poly(args.f), _parse_poly(args.h)
        _emit(_poly_json(tr.lphi_diamond(f, h, Fraction(args.xi))))
    return 0


def _load_poset(source: str) -> po.LabelledPoset:
    """Poset argument: a JSON file path, inline JSON, or the expression DSL."""
    text = source.strip()
    if not text.startswith("{"):
        try:
            with open(source, "r", encoding="utf-8") as handle:
                text = handle.read().strip()
        except OSError:
            pass  # not a file: fall through to DSL parsing
    if text.startswith("{"):
        return po.poset_from_json_dict(json.loads(text))
    return po.sp_build(po.parse_sp(text))


def _cmd_poset(args: argparse.Namespace) -> int:
    p = _load_poset(args.poset)
    if args.poset_cmd == "epoly":
        _emit(_poly_json(po.e_polynomial(p)))
        return 0
    if args.poset_cmd == "order":
        _emit(_poly_json(po.order_polynomial(p)))
        return 0
    # verify-deletion: real-rootedness plus interlacing under every deletion
    big = po.e_polynomial(p)
    rooted = rt.is_real_rooted(big) is not Rootedness.NOT_REAL_ROOTED
    deletions = []
    all_ok = rooted
    for x in p.elements:
        small = po.e_polynomial(po.delete_element(p, x))
        ok = il.interlaces(small, big)
        all_ok = all_ok and ok
        deletions.append(
            {
                "deleted": x,
                "interlaces": ok,
                "polynomial": format_polynomial_text(small),
            }
        )
    _emit(
        {
            "polynomial": format_polynomial_text(big),
            "real_rooted": rooted,
            "deletions": deletions,
            "passed": all_ok,
        }
    )
    return 0 if all_ok else 1


def _cmd_ferrers(args: argparse.Namespace) -> int:
    shape = fe.Partition(tuple(args.parts))
    if args.ferrers_cmd == "omega":
        _emit(_poly_json(fe.hook_content_order_poly(shape)))
        return 0
    if args.ferrers_cmd == "epoly":
        _emit(_poly_json(fe.ferrers_e_poly(shape, method=args.method)))
        return 0
    report = fe.verify_cover_interlacing(shape)
    _emit(
        {
            "partition": list(shape.parts),
            "real_rooted": report.shape_real_rooted,
            "covers": [
                {
                    "partition": list(check.smaller.parts),
                    "real_rooted": check.real_rooted,
                    "interlaces": check.interlaces_ok,
                }
                for check in report.checks
            ],
            "passed": report.passed,
        }
    )
    return 0 if report.passed else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(
        args.suite, max_n=args.max_n, samples=args.samples, seed=args.seed
    )
    rendered = report.to_json()
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
    print(rendered)
    return 0 if report.passed else 1


# -- parser wiring -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realroots",
        description=(
            "Exact verification of real-rootedness, interlacing, and the"
            " layer-count polynomials of labelled posets."
        ),
    )
    top = parser.add_subparsers(dest="command", required=True)

    roots = top.add_parser("roots", help="root isolation and counting")
    roots_sub = roots.add_subparsers(dest="roots_cmd", required=True)
    p = roots_sub.add_parser("isolate", help="isolating intervals with multiplicities")
    p.add_argument("poly")
    p = roots_sub.add_parser("count", help="distinct roots in (lo, hi]")
    p.add_argument("poly")
    p.add_argument("lo")
    p.add_argument("hi")
    p = roots_sub.add_parser("check-real", help="classify real-rootedness")
    p.add_argument("poly")
    p = roots_sub.add_parser("in-interval", help="are all roots inside [lo, hi]")
    p.add_argument("poly")
    p.add_argument("lo")
    p.add_argument("hi")
    p.add_argument("--open", action="store_true", help="use the open interval")
    roots.set_defaults(handler=_cmd_roots)

    inter = top.add_parser("interlace", help="interleaving relations")
    inter_sub = inter.add_subparsers(dest="interlace_cmd", required=True)
    p = inter_sub.add_parser("check", help="does g interlace f")
    p.add_argument("g")
    p.add_argument("f")
    p.add_argument("--strict", action="store_true")
    p = inter_sub.add_parser("alternates", help="full relation verdict")
    p.add_argument("f")
    p.add_argument("g")
    p = inter_sub.add_parser(
        "probe", help="random combinations of an alternating pair stay real-rooted"
    )
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    inter.set_defaults(handler=_cmd_interlace)

    poly = top.add_parser("poly", help="polynomial transforms")
    poly_sub = poly.add_subparsers(dest="poly_cmd", required=True)
    for name, help_text in (
        ("diamond", "graded derivative product"),
        ("schur", "coefficientwise factorial product"),
        ("altdiamond", "single-factorial variant of the graded product"),
        ("hp", "apply f, read as a differential operator, to g"),
    ):
        p = poly_sub.add_parser(name, help=help_text)
        p.add_argument("f")
        p.add_argument("g")
    p = poly_sub.add_parser("laguerre", help="divide each coefficient by k!")
    p.add_argument("f")
    p = poly_sub.add_parser("hxi", help="scaled derivative-sample series at xi")
    p.add_argument("h")
    p.add_argument("xi")
    p = poly_sub.add_parser("lphi", help="graded image series at xi")
    p.add_argument("f")
    p.add_argument("h")
    p.add_argument("xi")
    poly.set_defaults(handler=_cmd_poly)

    poset = top.add_parser("poset", help="labelled poset polynomials")
    poset_sub = poset.add_subparsers(dest="poset_cmd", required=True)
    for name, help_text in (
        ("epoly", "surjective layer-count polynomial"),
        ("order", "order-counting polynomial in the binomial basis"),
        ("verify-deletion", "check interlacing under every single deletion"),
    ):
        p = poset_sub.add_parser(name, help=help_text)
        p.add_argument(
            "poset",
            help="JSON file path, inline JSON, or construction DSL like s0(L,du(L,L))",
        )
    poset.set_defaults(handler=_cmd_poset)

    ferrers = top.add_parser("ferrers", help="partition cell posets")
    ferrers_sub = ferrers.add_subparsers(dest="ferrers_cmd", required=True)
    p = ferrers_sub.add_parser("omega", help="closed product formula")
    p.add_argument("parts", type=int, nargs="+")
    p = ferrers_sub.add_parser("epoly", help="layer-count polynomial")
    p.add_argument("parts", type=int, nargs="+")
    p.add_argument(
        "--method",
        default="hook_content",
        choices=("hook_content", "recursion", "enumeration"),
    )
    p = ferrers_sub.add_parser("verify-cover", help="covers interlace check")
    p.add_argument("parts", type=int, nargs="+")
    ferrers.set_defaults(handler=_cmd_ferrers)

    verify = top.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--json", default=None, dest="json_path", metavar="OUT")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PreconditionFailedError as err:
        print(f"error: precondition failed: {err}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
