"""JSON command-line front end.

Every invocation prints a single deterministic JSON report::

    {"command": "...", "inputs": {...}, "outputs": {...}}

with keys sorted and every rational rendered exactly as ``p/q`` in lowest
terms (``--decimal k`` adds a k-digit decimal rendering alongside, never
replacing the exact value).  Exit codes: 0 on success, 1 on a verification
failure (a lemma case that turns out feasible, or a relaxation probe that
fails; the witness is printed), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from .alpha import (
    alpha_conjecture,
    alpha_del_pezzo,
    alpha_theorem,
    counterexample_report,
    cylinder_range_contains,
    kstable_range_contains,
)
from .cone import PolarizationProfile, classify, is_ample
from .lemmas import LEMMA_IDS, LemmaProbeError, relaxation_probe, verify_lemma
from .picard import (
    enumerate_conic_classes,
    enumerate_minus_one_classes,
    format_class,
    parse_class,
)
from .rationals import format_rational, parse_rational
from .weierstrass import (
    NotASectionError,
    WeierstrassSurface,
    alpha_of_surface,
    find_square_sections,
    format_form,
    has_cuspidal_member,
    is_smooth,
    parse_form,
    section_pair,
)

__all__ = ["build_parser", "entry", "run"]


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _decimal_string(value: Fraction, digits: int) -> str:
    """Fixed-point rendering with the requested number of fractional digits."""
    scale = 10**digits
    scaled = round(value * scale)  # ties-to-even on exact rationals
    sign = "-" if scaled < 0 else ""
    magnitude = abs(scaled)
    if digits == 0:
        return f"{sign}{magnitude}"
    return f"{sign}{magnitude // scale}.{magnitude % scale:0{digits}d}"


class _Renderer:
    """Renders rational leaves exactly, optionally with a decimal alongside."""

    def __init__(self, decimal_digits: int | None) -> None:
        self.decimal_digits = decimal_digits

    def rat(self, value: Fraction) -> Any:
        exact = format_rational(Fraction(value))
        if self.decimal_digits is None:
            return exact
        return {
            "exact": exact,
            "decimal": _decimal_string(Fraction(value), self.decimal_digits),
        }


def _profile_json(profile: PolarizationProfile, r: _Renderer) -> dict[str, Any]:
    return {
        "type": profile.type_tag,
        "mu": r.rat(profile.mu),
        "a": [r.rat(x) for x in profile.a],
        "delta": r.rat(profile.delta),
        "s_A": r.rat(profile.s_A),
        "face_generators": [format_class(v) for v in sorted(profile.face_generators)],
        "basis": [format_class(v) for v in profile.basis],
        "conic": None if profile.conic is None else format_class(profile.conic),
    }


# ---------------------------------------------------------------------------
# Handlers: each returns (inputs echo, outputs, exit code)
# ---------------------------------------------------------------------------

Handler = Callable[[argparse.Namespace, _Renderer], tuple[dict, dict, int]]


def _handle_curves_enumerate(args, r):
    if args.kind == "minus-one":
        members = enumerate_minus_one_classes().members
    else:
        members = enumerate_conic_classes().members
    outputs = {
        "count": len(members),
        "classes": [format_class(v) for v in sorted(members)],
    }
    return {"kind": args.kind}, outputs, 0


def _handle_ample(args, r):
    v = parse_class(args.cls)
    outputs = {"class": format_class(v), "ample": is_ample(v)}
    return {"class": args.cls}, outputs, 0


def _handle_classify(args, r):
    v = parse_class(args.cls)
    profile = classify(v)
    outputs = {"class": format_class(v), "profile": _profile_json(profile, r)}
    return {"class": args.cls}, outputs, 0


def _handle_alpha_conjecture(args, r):
    v = parse_class(args.cls)
    profile = classify(v)
    outputs = {
        "alpha_c": r.rat(alpha_conjecture(profile)),
        "profile": _profile_json(profile, r),
    }
    return {"class": args.cls}, outputs, 0


def _handle_alpha_theorem(args, r):
    lam = parse_rational(args.lam)
    if lam < 0 and not args.allow_negative_lambda:
        raise ValueError(
            "negative lambda is gated behind --allow-negative-lambda "
            "(the default range is 0 <= lambda < 1)"
        )
    value = alpha_theorem(lam, args.n, parse_rational(args.alpha_s))
    inputs = {
        "lambda": args.lam,
        "n": args.n,
        "alpha_s": args.alpha_s,
        "allow_negative_lambda": args.allow_negative_lambda,
    }
    return inputs, {"alpha": r.rat(value)}, 0


def _handle_alpha_table(args, r):
    value = alpha_del_pezzo(args.degree, args.flags)
    inputs = {"degree": args.degree, "flags": args.flags}
    return inputs, {"alpha": r.rat(value)}, 0


def _handle_surface_analyze(args, r):
    if (args.q is None) != (args.g is None):
        raise ValueError("--q and --g must be given together")
    surface = WeierstrassSurface(a=parse_form(args.a), b=parse_form(args.b))
    smooth = is_smooth(surface)
    outputs: dict[str, Any] = {"smooth": smooth}
    if smooth:
        outputs["has_cuspidal_member"] = has_cuspidal_member(surface)
        outputs["alpha_s"] = r.rat(alpha_of_surface(surface))
    if args.q is not None:
        pairs = [section_pair(surface, parse_form(args.q), parse_form(args.g))]
    else:
        pairs = find_square_sections(surface)
    outputs["sections"] = [
        {
            "q": format_form(p.q),
            "g": format_form(p.g),
            "n_intersections": p.n_intersections,
        }
        for p in pairs
    ]
    inputs = {"a": args.a, "b": args.b, "q": args.q, "g": args.g}
    return inputs, outputs, 0


def _handle_counterexample(args, r):
    report = counterexample_report(parse_rational(args.lam))
    outputs = {
        "alpha": r.rat(report.alpha),
        "alpha_c": r.rat(report.alpha_c),
        "conjecture_violated": report.conjecture_violated,
    }
    return {"lambda": args.lam}, outputs, 0


def _handle_range(args, r):
    lam = parse_rational(args.lam)
    if args.window == "kstable":
        contains = kstable_range_contains(lam)
    else:
        contains = cylinder_range_contains(lam)
    inputs = {"window": args.window, "lambda": args.lam}
    return inputs, {"contains": contains}, 0


def _handle_lemma_verify(args, r):
    inputs = {"lemma": args.lemma_id, "probe": args.probe}
    if args.probe is not None:
        witness = relaxation_probe(args.lemma_id, args.probe)
        outputs = {
            "lemma": args.lemma_id,
            "probe": args.probe,
            "feasible": True,
            "witness": {name: r.rat(value) for name, value in witness.items()},
        }
        return inputs, outputs, 0
    report = verify_lemma(args.lemma_id)
    cases = []
    for case in report.cases:
        entry_json: dict[str, Any] = {"name": case.name, "infeasible": case.infeasible}
        if case.certificate is not None:
            entry_json["certificate"] = {
                "multipliers": [r.rat(m) for m in case.certificate.multipliers],
                "strict_indices": sorted(case.certificate.strict_indices),
            }
        if case.witness is not None:
            entry_json["witness"] = {
                name: r.rat(value) for name, value in case.witness.items()
            }
        cases.append(entry_json)
    outputs = {"lemma": args.lemma_id, "verified": report.verified, "cases": cases}
    return inputs, outputs, 0 if report.verified else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--decimal",
        type=_nonneg_int,
        metavar="K",
        default=None,
        help="also render each rational as a K-digit decimal",
    )

    parser = argparse.ArgumentParser(
        prog="dp1alpha",
        description="Exact alpha-invariant computations on degree-one del Pezzo surfaces.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    curves = top.add_parser("curves", help="curve-class enumerations")
    curves_sub = curves.add_subparsers(dest="subcommand", required=True)
    enum = curves_sub.add_parser(
        "enumerate", parents=[common], help="list (-1)-classes or conic classes"
    )
    enum.add_argument(
        "--kind", choices=("minus-one", "conic"), default="minus-one",
        help="which family to enumerate (default: minus-one)",
    )
    enum.set_defaults(handler=_handle_curves_enumerate, command_path="curves enumerate")

    ample = top.add_parser("ample", parents=[common], help="test ampleness of a class")
    ample.add_argument(
        "--class", dest="cls", required=True, metavar="C0,...,C8",
        help="nine comma-separated rationals",
    )
    ample.set_defaults(handler=_handle_ample, command_path="ample")

    cls_cmd = top.add_parser(
        "classify", parents=[common], help="type and coefficients of an ample class"
    )
    cls_cmd.add_argument(
        "--class", dest="cls", required=True, metavar="C0,...,C8",
        help="nine comma-separated rationals; must be ample",
    )
    cls_cmd.set_defaults(handler=_handle_classify, command_path="classify")

    alpha = top.add_parser("alpha", help="alpha-invariant calculators")
    alpha_sub = alpha.add_subparsers(dest="subcommand", required=True)

    conj = alpha_sub.add_parser(
        "conjecture", parents=[common],
        help="conjectural nine-branch formula on an ample class",
    )
    conj.add_argument(
        "--class", dest="cls", required=True, metavar="C0,...,C8",
        help="nine comma-separated rationals; must be ample",
    )
    conj.set_defaults(handler=_handle_alpha_conjecture, command_path="alpha conjecture")

    theorem = alpha_sub.add_parser(
        "theorem", parents=[common],
        help="proven formula for -K + lambda*C on a degree-one surface",
    )
    theorem.add_argument("--lambda", dest="lam", required=True, metavar="P/Q")
    theorem.add_argument("--n", type=int, choices=(1, 2, 3), required=True,
                         help="number of distinct points where the sections meet")
    theorem.add_argument("--alpha-s", dest="alpha_s", required=True, metavar="P/Q",
                         help="global alpha of the surface, in (0, 1]")
    theorem.add_argument(
        "--allow-negative-lambda", action="store_true",
        help="extend the default range [0, 1) down to (-1/3, 1)",
    )
    theorem.set_defaults(handler=_handle_alpha_theorem, command_path="alpha theorem")

    table = alpha_sub.add_parser(
        "table", parents=[common],
        help="anticanonical alpha of a smooth del Pezzo surface by degree",
    )
    table.add_argument("--degree", type=int, choices=range(1, 10), required=True)
    table.add_argument(
        "--flags", default=None,
        help="geometric flag for degrees 1, 2, 3, 8 "
        "(cuspidal/no-cuspidal, tacnodal/no-tacnodal, eckardt/no-eckardt, f1/p1xp1)",
    )
    table.set_defaults(handler=_handle_alpha_table, command_path="alpha table")

    surface = top.add_parser("surface", help="Weierstrass-model analysis")
    surface_sub = surface.add_subparsers(dest="subcommand", required=True)
    analyze = surface_sub.add_parser(
        "analyze", parents=[common],
        help="smoothness, cusp flag, global alpha, and section pairs",
    )
    analyze.add_argument("--a", required=True, metavar="4:C0,...,C4",
                         help="binary quartic as degree:coefficients")
    analyze.add_argument("--b", required=True, metavar="6:C0,...,C6",
                         help="binary sextic as degree:coefficients")
    analyze.add_argument("--q", default=None, metavar="2:C0,C1,C2",
                         help="optional section datum q (with --g)")
    analyze.add_argument("--g", default=None, metavar="3:C0,...,C3",
                         help="optional section datum g (with --q)")
    analyze.set_defaults(handler=_handle_surface_analyze, command_path="surface analyze")

    ce = top.add_parser(
        "counterexample", parents=[common],
        help="proven alpha against the conjectural formula at -K + lambda*C",
    )
    ce.add_argument("--lambda", dest="lam", required=True, metavar="P/Q",
                    help="rational in [0, 1)")
    ce.set_defaults(handler=_handle_counterexample, command_path="counterexample")

    rng = top.add_parser("range", parents=[common], help="interval membership tests")
    rng.add_argument("window", choices=("kstable", "cylinder"))
    rng.add_argument("--lambda", dest="lam", required=True, metavar="P/Q")
    rng.set_defaults(handler=_handle_range, command_path="range")

    lemma = top.add_parser("lemma", help="certified inequality lemmas")
    lemma_sub = lemma.add_subparsers(dest="subcommand", required=True)
    verify = lemma_sub.add_parser(
        "verify", parents=[common],
        help="verify one lemma, or run a designated relaxation probe",
    )
    verify.add_argument("lemma_id", choices=LEMMA_IDS, metavar="LEMMA_ID",
                        help=f"one of: {', '.join(LEMMA_IDS)}")
    verify.add_argument(
        "--probe", default=None, metavar="CASE:ROW",
        help="drop the named row and exhibit a feasible witness instead",
    )
    verify.set_defaults(handler=_handle_lemma_verify, command_path="lemma verify")

    return parser


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


# Options whose values may start with "-" (negative rationals, classes whose
# leading coordinate is negative).  Merged to --option=value before parsing so
# argparse does not mistake the value for an option string.
_NEGATIVE_VALUE_OPTIONS = frozenset({"--lambda", "--alpha-s", "--class"})


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    merged: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in _NEGATIVE_VALUE_OPTIONS:
            value = next(tokens, None)
            merged.append(token if value is None else f"{token}={value}")
        else:
            merged.append(token)
    return merged


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one command; print its JSON report; return the exit code."""
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:  # argparse already reported the problem
        code = exc.code
        return code if isinstance(code, int) else 2
    renderer = _Renderer(getattr(args, "decimal", None))
    try:
        inputs, outputs, code = args.handler(args, renderer)
    except LemmaProbeError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, NotASectionError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"command": args.command_path, "inputs": inputs, "outputs": outputs}
    print(json.dumps(report, indent=2, sort_keys=True))
    return code


def entry() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    entry()
