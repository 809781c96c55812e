"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 mathematical refusal (total conflict, non-decomposable or non-separable
mass, frame too large), 4 a verification suite reported a failing law.
"""

from __future__ import annotations

import argparse
import sys

from . import formats, verify
from .categories import arrow_exists_dempster, bayes_arrow_exists, boolean_hom
from .combination import combine_normalized, combine_unnormalized
from .errors import Refusal, ValidationError
from .mass import MassDistribution, transform
from .separable import WeightVector, conjoin_weights, decompose, disjoin_weights, expand

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_REFUSED = 3
EXIT_LAW_FAILED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="beliefcat", description="Exact belief-function algebra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("combine", help="combine two belief states")
    c.add_argument("--rule", required=True, choices=["dempster", "normalized", "cautious", "bold"])
    c.add_argument("--expand", action="store_true", help="also print the expanded mass (cautious/bold)")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("-o", "--output")

    t = sub.add_parser("transform", help="belief, plausibility or commonality of a mass")
    t.add_argument("--to", required=True, choices=["bel", "pl", "q"])
    t.add_argument("file")
    t.add_argument("-o", "--output")

    d = sub.add_parser("decompose", help="mass (.bba) to weights (.wgt)")
    d.add_argument("file")
    d.add_argument("-o", "--output")

    e = sub.add_parser("expand", help="weights (.wgt) to mass (.bba)")
    e.add_argument("file")
    e.add_argument("-o", "--output")

    a = sub.add_parser("arrow", help="decide whether evidence updates FROM into TO")
    a.add_argument("--category", default="dempster", choices=["dempster", "boolean", "bayes"])
    a.add_argument("--normalized", action="store_true")
    a.add_argument("source", metavar="FROM")
    a.add_argument("target", metavar="TO")
    a.add_argument("-o", "--output")

    v = sub.add_parser("verify", help="run a law-checking suite")
    v.add_argument("--suite", required=True, choices=["laws", "universal", "norms"])
    v.add_argument("--frame-size", type=int, default=None)
    v.add_argument("--grid", type=int, default=4, help="grid denominator D: weights 0, 1/D, ..., 1")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=None, help="random cases per law")
    v.add_argument("-o", "--output")
    return p


def _read_mass(path) -> MassDistribution:
    doc = formats.read(path)
    if isinstance(doc, WeightVector):
        return expand(doc)
    if not isinstance(doc, MassDistribution):
        raise ValidationError(f"{path}: expected a mass (.bba) or weight (.wgt) file")
    return doc


def _read_weights(path) -> WeightVector:
    doc = formats.read(path)
    if isinstance(doc, MassDistribution):
        return decompose(doc)
    if not isinstance(doc, WeightVector):
        raise ValidationError(f"{path}: expected a mass (.bba) or weight (.wgt) file")
    return doc


def _combine(args) -> tuple[str, int]:
    if args.rule in ("dempster", "normalized"):
        m1, m2 = _read_mass(args.a), _read_mass(args.b)
        if args.rule == "dempster":
            return formats.emit_mass(combine_unnormalized(m1, m2)), EXIT_OK
        m, report = combine_normalized(m1, m2)
        args.notes.append(f"conflict K = {report.conflict}")
        return formats.emit_mass(m), EXIT_OK
    w1, w2 = _read_weights(args.a), _read_weights(args.b)
    op = conjoin_weights if args.rule == "cautious" else disjoin_weights
    w = op(w1, w2)
    text = formats.emit_weights(w)
    if args.expand:
        text += "\n" + formats.emit_mass(expand(w))
    return text, EXIT_OK


def _arrow(args) -> tuple[str, int]:
    if args.category == "dempster":
        witness = arrow_exists_dempster(_read_mass(args.source), _read_mass(args.target), args.normalized)
    else:
        kind = "subset" if args.category == "boolean" else "prob"
        src = formats.read(args.source, kind)
        dst = formats.read(args.target, kind)
        witness = boolean_hom(src, dst) if args.category == "boolean" else bayes_arrow_exists(src, dst)
    if witness is None:
        return "none\n", EXIT_OK
    return formats.emit(witness.evidence), EXIT_OK


def _verify(args) -> tuple[str, int]:
    if args.suite == "laws":
        reports = verify.law_suite(args.frame_size or 3, args.seed, args.count or 200)
    elif args.suite == "universal":
        reports = verify.universal_suite(args.frame_size or 2, args.grid, args.seed, args.count or 1000)
    else:
        reports = verify.norm_suite(args.grid)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_LAW_FAILED
    return verify.render(reports) + "\n", code


def _dispatch(args) -> tuple[str, int]:
    if args.command == "combine":
        return _combine(args)
    if args.command == "transform":
        return formats.emit_set_function(transform(_read_mass(args.file), args.to)), EXIT_OK
    if args.command == "decompose":
        return formats.emit_weights(decompose(formats.read(args.file, "mass"))), EXIT_OK
    if args.command == "expand":
        return formats.emit_mass(expand(formats.read(args.file, "weight"))), EXIT_OK
    if args.command == "arrow":
        return _arrow(args)
    return _verify(args)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        args.notes = []
        if getattr(args, "frame_size", None) is not None and not 1 <= args.frame_size <= 4:
            raise UsageError("--frame-size must be between 1 and 4")
        if getattr(args, "grid", 1) < 1:
            raise UsageError("--grid must be a positive integer")
        text, code = _dispatch(args)
        for note in args.notes:
            print(note, file=stderr)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except Refusal as exc:
        print(f"refused: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_REFUSED
    except (ValidationError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
