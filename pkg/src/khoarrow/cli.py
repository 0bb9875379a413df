"""Command-line front end: homology tables and verification suites.

``khoarrow homology`` computes the unreduced (at a chosen specialization)
or reduced homology of one diagram and prints it as JSON or a text
table.  ``khoarrow verify`` runs hermetic self-check suites over the
built-in corpus.

Exit codes: 0 success / all checks pass; 1 input could not be parsed;
2 the input exceeds a size guard; 3 an internal consistency check
failed (d² != 0 and friends) or a verify suite reported failures.
Diagnostics go to stderr; stdout carries data only.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .algebra import EVEN, ODD, RingParams
from .chain import FaceNotProportional, Unsolvable, build_unreduced
from .diagram import DiagramError, parse_gauss, parse_pd
from .homology import NotAComplex, homology
from .jones import TooLarge, euler_characteristic, jones
from .reduced import (BasisExpressionFailure, build_reduced,
                      check_commuting_square, check_graph_span)
from .snf import smith_normal_form

__all__ = ["main"]

EXIT_PARSE = 1
EXIT_TOO_LARGE = 2
EXIT_INCONSISTENT = 3

# unreduced complexes walk 2^n cube vertices with 2^k(I)-dimensional
# groups; past this many crossings the run would not finish at desk scale
MAX_CLI_CROSSINGS = 10

SUITES = ("d2", "euler", "commuting-square", "graph-span",
          "rm-invariance", "arrows", "snf")


def _theory(args) -> RingParams:
    if args.theory == "even":
        return EVEN
    if args.theory == "odd":
        return ODD
    for name in ("x", "y", "z"):
        if getattr(args, name) not in (1, -1):
            raise SystemExit(
                f"--{name} must be +1 or -1 for --theory custom")
    return RingParams(args.x, args.y, args.z)


def _load_diagram(args):
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
        return parse_pd(text)
    if args.gauss is not None:
        return parse_gauss(args.gauss)
    return parse_pd(args.pd)


def _input_label(args) -> str:
    if args.file is not None:
        return f"file:{args.file}"
    if args.gauss is not None:
        return f"gauss:{args.gauss}"
    return f"pd:{args.pd}"


def _format_table(table) -> str:
    lines = ["    h     q  betti  torsion"]
    for h, q, betti, torsion in table.group_rows():
        tor = ",".join(f"Z/{t}" for t in torsion) if torsion else "-"
        lines.append(f"{h:5d} {q:5d} {betti:6d}  {tor}")
    return "\n".join(lines)


def cmd_homology(args) -> int:
    try:
        d = _load_diagram(args)
    except (DiagramError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if d.n > MAX_CLI_CROSSINGS:
        print(f"error: {d.n} crossings exceeds the CLI guard "
              f"({MAX_CLI_CROSSINGS})", file=sys.stderr)
        return EXIT_TOO_LARGE
    p = _theory(args)
    flip = args.arrows == "flipped"
    try:
        if args.reduced:
            complex_ = build_reduced(d, convention=args.grading_convention,
                                     flip_arrows=flip)
        else:
            complex_ = build_unreduced(d, p,
                                       convention=args.grading_convention,
                                       flip_arrows=flip)
        table = homology(complex_)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (NotAComplex, FaceNotProportional, Unsolvable,
            BasisExpressionFailure) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT

    if args.format == "json":
        doc = {
            "input": _input_label(args),
            "theory": {"x": p.x, "y": p.y, "z": p.z},
            "reduced": bool(args.reduced),
            "convention": args.grading_convention,
            "groups": [
                {"h": h, "q": q, "betti": betti, "torsion": list(torsion)}
                for h, q, betti, torsion in table.group_rows()
            ],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(_format_table(table))
    return 0


# --- verify suites ----------------------------------------------------

PRESETS = (RingParams(1, 1, 1), RingParams(1, -1, 1),
           RingParams(-1, 1, 1), RingParams(-1, -1, -1))


def _suite_d2(report):
    for name in corpus.names():
        d = corpus.get(name)
        for p in PRESETS:
            c = build_unreduced(d, p)
            report(f"d2 unreduced {name} ({p.x},{p.y},{p.z})",
                   c.check_d_squared() and c.check_q_preserved())
        c = build_reduced(d)
        report(f"d2 reduced {name}",
               c.check_d_squared() and c.check_q_preserved())


def _suite_euler(report):
    for name in corpus.names():
        d = corpus.get(name)
        target = jones(d)
        for p in PRESETS:
            chi = euler_characteristic(build_unreduced(d, p))
            report(f"euler {name} ({p.x},{p.y},{p.z})", chi == target)


def _suite_commuting_square(report):
    for name in corpus.names():
        d = corpus.get(name)
        report(f"commuting-square {name}",
               not check_commuting_square(d))


def _suite_graph_span(report):
    from .cube import resolve
    for name in corpus.names():
        d = corpus.get(name)
        if d.n > 6:
            continue
        ok = True
        for m in range(2 ** d.n):
            bits = tuple((m >> (d.n - 1 - j)) & 1 for j in range(d.n))
            if not check_graph_span(resolve(d, bits))["equal"]:
                ok = False
        report(f"graph-span {name}", ok)


def _suite_rm_invariance(report, reduced_only=False):
    for cls, names in corpus.EQUIVALENCE_CLASSES.items():
        tables = [homology(build_reduced(corpus.get(n))) for n in names]
        report(f"rm-invariance reduced {cls}",
               all(t == tables[0] for t in tables))
        if reduced_only:
            continue
        for preset, p in (("even", EVEN), ("odd", ODD)):
            tables = [homology(build_unreduced(corpus.get(n), p))
                      for n in names]
            report(f"rm-invariance unreduced-{preset} {cls}",
                   all(t == tables[0] for t in tables))


def _suite_arrows(report):
    for name in corpus.names():
        d = corpus.get(name)
        ok = (homology(build_reduced(d))
              == homology(build_reduced(d, flip_arrows=True)))
        for p in (EVEN, ODD):
            ok = ok and (homology(build_unreduced(d, p))
                         == homology(build_unreduced(d, p,
                                                     flip_arrows=True)))
        report(f"arrows {name}", ok)


def _suite_snf(report, count=200, seed=0):
    import random

    import numpy as np
    rng = random.Random(seed)
    ok = True
    for _ in range(count):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        M = [[rng.randint(-1000, 1000) for _ in range(n)] for _ in range(m)]
        D, U, V = smith_normal_form(M)
        Dn = np.array(U, dtype=object) @ np.array(M, dtype=object) \
            @ np.array(V, dtype=object)
        if not (Dn == np.array(D, dtype=object)).all():
            ok = False
    report("snf round-trip", ok)


def cmd_verify(args) -> int:
    failures = []

    def report(label, passed):
        status = "pass" if passed else "FAIL"
        print(f"[{status}] {label}")
        if not passed:
            failures.append(label)

    wanted = SUITES if args.suite == "all" else (args.suite,)
    try:
        if "d2" in wanted:
            _suite_d2(report)
        if "euler" in wanted:
            _suite_euler(report)
        if "commuting-square" in wanted:
            _suite_commuting_square(report)
        if "graph-span" in wanted:
            _suite_graph_span(report)
        if "rm-invariance" in wanted:
            _suite_rm_invariance(report, reduced_only=args.reduced)
        if "arrows" in wanted:
            _suite_arrows(report)
        if "snf" in wanted:
            _suite_snf(report)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (NotAComplex, FaceNotProportional, Unsolvable,
            BasisExpressionFailure) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if failures:
        print(f"{len(failures)} check(s) failed", file=sys.stderr)
        return EXIT_INCONSISTENT
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khoarrow",
        description="Khovanov homology via the arrow algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--theory", choices=("even", "odd", "custom"),
                       default="even")
        p.add_argument("--x", type=int, default=1)
        p.add_argument("--y", type=int, default=1)
        p.add_argument("--z", type=int, default=1)
        p.add_argument("--reduced", action="store_true")
        p.add_argument("--grading-convention",
                       choices=("standard", "paper"), default="standard")
        p.add_argument("--arrows", choices=("normal", "flipped"),
                       default="normal")

    hom = sub.add_parser("homology", help="compute a homology table")
    src = hom.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help="PD code ('' = crossingless unknot)")
    src.add_argument("--gauss", help="signed Gauss code")
    src.add_argument("--file", help="path to a file holding a PD code")
    add_common(hom)
    hom.add_argument("--format", choices=("json", "table"), default="json")
    hom.set_defaults(func=cmd_homology)

    ver = sub.add_parser("verify", help="run self-check suites")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    add_common(ver)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
