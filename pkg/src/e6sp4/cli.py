"""Command-line entry point.

Exit codes: 0 success, 1 a claim ledger with failing claims, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import presets
from .classify import (
    SERIES,
    InvalidDescriptorError,
    KappaRule,
    NonDominantImageError,
    descriptor_grid,
    grid_size,
    injectivity_scan,
    restrict_descriptor,
)
from .records import fmt, fmt_vec
from .rootcore import InvalidCartanError, NonFiniteTypeError, bilinear, build_root_system, weyl_group
from .serialize import (
    descriptor_from_doc,
    dumps,
    injectivity_to_doc,
    parse_rational,
    rational_str,
    restriction_to_doc,
)
from .verify import DEFAULT_PRESET, render_report, run_ledger
from .weights import E6_LATTICE, Weight, compensation, theta_project

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_FAMILY_CAP = 100_000


class UsageError(Exception):
    pass


def _indices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated indices, got {text!r}") from None


def _weight(text: str) -> Weight:
    parts = [p for p in text.split(",") if p.strip()]
    coords = tuple(parse_rational(p.strip(), f"--weight[{i}]") for i, p in enumerate(parts))
    try:
        return Weight(E6_LATTICE, coords)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(args):
    return presets.get(args.preset)


def cmd_roots(args) -> int:
    rs = build_root_system(_spec(args))
    print(f"{len(rs)} roots")
    if args.list:
        for r in rs.roots:
            print(f"{fmt_vec(r)}  length2={fmt(bilinear(r, r, rs))}")
    return EXIT_OK


def cmd_weyl(args) -> int:
    rs = build_root_system(_spec(args))
    subset = _indices(args.subset) if args.subset else None
    w = weyl_group(rs, subset)
    print(f"order {w.order}")
    return EXIT_OK


def cmd_project(args) -> int:
    image = theta_project(_weight(args.weight))
    print(dumps({"lattice": image.lattice, "coords": [rational_str(x) for x in image.coords]}), end="")
    return EXIT_OK


def cmd_compensate(args) -> int:
    print(dumps({"compensation": rational_str(compensation(_weight(args.weight)))}), end="")
    return EXIT_OK


def _kappa(args) -> KappaRule:
    try:
        return KappaRule(args.kappa, args.kappa_expr)
    except (ValueError, SyntaxError) as exc:
        raise UsageError(f"--kappa: {exc}") from None


def cmd_classify(args) -> int:
    kappa = _kappa(args)
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"$: invalid JSON ({exc})") from None
    d = descriptor_from_doc(doc, strict=args.strict)
    print(dumps(restriction_to_doc(restrict_descriptor(d, kappa=kappa))), end="")
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.bound < 0:
        raise UsageError("--bound must be >= 0")
    series = SERIES if args.series == "all" else tuple(s.strip() for s in args.series.split(","))
    for s in series:
        if s not in SERIES:
            raise UsageError(f"--series: unknown series {s!r}")
    support = _indices(args.support)
    size = grid_size(args.bound, support, series)
    if size > args.cap:
        raise UsageError(f"family of {size} descriptors exceeds --cap {args.cap}")
    t = parse_rational(args.t, "--t")
    family = descriptor_grid(args.bound, support, series, t=t)
    print(dumps(injectivity_to_doc(injectivity_scan(family, kappa=_kappa(args)))), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_ledger(args.preset, include_paper_preset=args.with_paper_preset)
    sys.stdout.write(render_report(report, args.format))
    return EXIT_OK if report.all_pass else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e6sp4", description=__doc__.splitlines()[0])
    p.add_argument("--presets", default=None, help=f"YAML preset file overlaying the bundled catalog (or ${presets.ENV_VAR})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", help="enumerate the roots of a preset")
    s.add_argument("preset")
    s.add_argument("--list", action="store_true", help="print each root with its squared length")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("weyl", help="order of a Weyl group or parabolic subgroup")
    s.add_argument("preset")
    s.add_argument("--subset", help="comma-separated simple-root indices, e.g. 2,3,4,5")
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("project", help="theta image of an E6 weight")
    s.add_argument("--weight", required=True, help="six fundamental-weight coordinates, e.g. 1,0,0,0,0,1")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("compensate", help="compensation term of an E6 weight")
    s.add_argument("--weight", required=True)
    s.set_defaults(func=cmd_compensate)

    def kappa_flags(sp):
        sp.add_argument("--kappa", default="one", choices=["one", "inverse-gap", "custom"])
        sp.add_argument("--kappa-expr", default=None, help="rational expression in t for --kappa custom")

    s = sub.add_parser("classify", help="restrict a descriptor document to Sp(4)")
    s.add_argument("file", nargs="?", help="descriptor JSON file; stdin when omitted or '-'")
    s.add_argument("--strict", action="store_true", help="require regular discrete-series weights")
    kappa_flags(s)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("scan", help="injectivity scan over a descriptor grid")
    s.add_argument("--series", default="all", help="comma list of series, or 'all'")
    s.add_argument("--bound", type=int, default=1)
    s.add_argument("--support", default="1,6", help="1-based indices that vary over 0..bound")
    s.add_argument("--t", default="1/2", help="deformation parameter for complementary descriptors")
    s.add_argument("--cap", type=int, default=DEFAULT_FAMILY_CAP, help="refuse families larger than this")
    kappa_flags(s)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("verify", help="run the claim ledger")
    s.add_argument("--preset", default=DEFAULT_PRESET)
    s.add_argument("--format", default="json", choices=["json", "markdown"])
    s.add_argument("--with-paper-preset", action="store_true",
                   help="also rerun the subsystem claims against the E6-paper preset")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.presets:
        os.environ[presets.ENV_VAR] = args.presets
    try:
        return args.func(args)
    except (presets.UnknownPresetError, InvalidDescriptorError, NonDominantImageError, UsageError,
            InvalidCartanError, NonFiniteTypeError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
