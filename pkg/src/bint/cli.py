"""Command-line front end: parse, check, prove, transform, export.

Exit codes: 0 success / proved; 1 refuted, bound exhausted, or invalid input
derivation; 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .syntax import (
    And, Atom, Bottom, Coimp, Formula, FormulaSyntaxError, Imp, Or, Top,
    parse_formula,
)
from .kernel import (
    Derivation, RuleId, Side, check_derivation, format_sequent,
    parse_context_pair, parse_sequent, PLUS, MINUS,
)
from .serialize import (
    DerivationFormatError, dumps_derivations, load_derivations,
)
from .transform import (
    CutTrace, SpecialWeakening, TransformError, contract, derive_identity,
    eliminate_cut, invert, unweaken_special, weaken,
)
from .search import Proved, Refuted, SearchConfig, prove
from . import corpus


def render_text(d: Derivation, indent: int = 0) -> str:
    lines = [f"{'  ' * indent}[{d.rule.value}] {format_sequent(d.conclusion)}"]
    for p in d.premises:
        lines.append(render_text(p, indent + 1))
    return "\n".join(lines)


_LATEX_RULE = {
    RuleId.RfPlus: r"Rf^{+}", RuleId.RfMinus: r"Rf^{-}",
    RuleId.BotLa: r"\bot L^{a}", RuleId.TopLc: r"\top L^{c}",
    RuleId.BotRMinus: r"\bot R^{-}", RuleId.TopRPlus: r"\top R^{+}",
    RuleId.AndRPlus: r"\wedge R^{+}", RuleId.AndRMinus1: r"\wedge R^{-}_{1}",
    RuleId.AndRMinus2: r"\wedge R^{-}_{2}", RuleId.AndLa: r"\wedge L^{a}",
    RuleId.AndLc: r"\wedge L^{c}", RuleId.OrRPlus1: r"\vee R^{+}_{1}",
    RuleId.OrRPlus2: r"\vee R^{+}_{2}", RuleId.OrRMinus: r"\vee R^{-}",
    RuleId.OrLa: r"\vee L^{a}", RuleId.OrLc: r"\vee L^{c}",
    RuleId.ImpRPlus: r"\rightarrow R^{+}", RuleId.ImpRMinus: r"\rightarrow R^{-}",
    RuleId.ImpLa: r"\rightarrow L^{a}", RuleId.ImpLc: r"\rightarrow L^{c}",
    RuleId.CoimpRPlus: r"\Yleft R^{+}", RuleId.CoimpRMinus: r"\Yleft R^{-}",
    RuleId.CoimpLa: r"\Yleft L^{a}", RuleId.CoimpLc: r"\Yleft L^{c}",
    RuleId.CutA: r"Cut^{a}", RuleId.CutC: r"Cut^{c}",
}


def _latex_formula(f: Formula) -> str:
    match f:
        case Atom(name):
            return name
        case Bottom():
            return r"\bot"
        case Top():
            return r"\top"
    op = {And: r"\wedge", Or: r"\vee", Imp: r"\rightarrow", Coimp: r"\Yleft"}[type(f)]
    return f"({_latex_formula(f.left)} {op} {_latex_formula(f.right)})"


def _latex_sequent(s) -> str:
    g = ", ".join(_latex_formula(f) for f in s.gamma.expand()) or r"\emptyset"
    d = ", ".join(_latex_formula(f) for f in s.delta.expand()) or r"\emptyset"
    return rf"({g}; {d}) \vdash^{{{s.polarity.sign}}} {_latex_formula(s.succedent)}"


def render_latex(d: Derivation) -> str:
    if not d.premises:
        body = "{}"
    else:
        body = "{" + r" \quad ".join(render_latex(p) for p in d.premises) + "}"
    return (rf"\infer[\scriptstyle {_LATEX_RULE[d.rule]}]"
            + "{" + _latex_sequent(d.conclusion) + "}" + body)


def _emit(derivations: list[Derivation], args) -> None:
    if args.format == "data":
        sys.stdout.write(dumps_derivations(derivations))
    elif getattr(args, "latex", False):
        for d in derivations:
            print(render_latex(d))
    else:
        for d in derivations:
            print(render_text(d))


def _parse_side(text: str) -> Side:
    if text not in ("a", "c"):
        raise FormulaSyntaxError("side must be 'a' or 'c'", 0)
    return Side.A if text == "a" else Side.C


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="bint",
        description="Bi-intuitionistic sequent engine: check, prove, transform.")
    parser.add_argument("--format", choices=("text", "data"), default="text",
                        help="output derivations as an indented tree or as JSON")
    parser.add_argument("--latex", action="store_true",
                        help="emit inference-style LaTeX instead of the text tree")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a derivation file")
    p.add_argument("file", type=Path)

    p = sub.add_parser("prove", help="backward proof search for a sequent")
    p.add_argument("sequent")
    p.add_argument("--max-depth", type=int, default=50)
    p.add_argument("--no-loop-check", action="store_true")

    p = sub.add_parser("identity", help="reflexivity derivation for a formula")
    p.add_argument("context", help="'Gamma ; Delta' (either side may be empty)")
    p.add_argument("formula")
    p.add_argument("polarity", choices=("+", "-"))

    p = sub.add_parser("weaken", help="add a formula to a derivation's endsequent")
    p.add_argument("file", type=Path)
    p.add_argument("formula")
    p.add_argument("side", choices=("a", "c"))

    p = sub.add_parser("unweaken", help="drop a T assumption or F counterassumption")
    p.add_argument("file", type=Path)
    p.add_argument("which", choices=("TopInGamma", "BotInDelta"))

    p = sub.add_parser("contract", help="collapse a duplicated context formula")
    p.add_argument("file", type=Path)
    p.add_argument("formula")
    p.add_argument("side", choices=("a", "c"))

    p = sub.add_parser("invert", help="invert a left-rule decomposition")
    p.add_argument("file", type=Path)
    p.add_argument("target")
    p.add_argument("side", choices=("a", "c"))

    p = sub.add_parser("cut-eliminate", help="eliminate a cut between two derivations")
    p.add_argument("left", type=Path)
    p.add_argument("right", type=Path)
    p.add_argument("cut_formula")
    p.add_argument("variant", choices=("a", "c"))
    p.add_argument("--trace", action="store_true",
                   help="log one rewrite-case line per elimination step to stderr")

    p = sub.add_parser("golden", help="run the stored golden corpus")
    p.add_argument("--corpus-dir", type=Path, default=corpus.DATA_DIR)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (FormulaSyntaxError, DerivationFormatError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TransformError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "check":
        ds = load_derivations(args.file)
        worst = 0
        for d in ds:
            report = check_derivation(d)
            print(report)
            if not report.valid:
                worst = 1
        return worst

    if args.command == "prove":
        cfg = SearchConfig(max_depth=args.max_depth, loop_check=not args.no_loop_check)
        outcome = prove(parse_sequent(args.sequent), cfg)
        if isinstance(outcome, Proved):
            _emit([outcome.derivation], args)
            return 0
        if isinstance(outcome, Refuted):
            print("refuted: no derivation exists")
            return 1
        print(f"bound exhausted at depth {cfg.max_depth}: no verdict")
        return 1

    if args.command == "identity":
        gamma, delta = parse_context_pair(args.context)
        pol = PLUS if args.polarity == "+" else MINUS
        _emit([derive_identity(gamma, delta, parse_formula(args.formula), pol)], args)
        return 0

    if args.command == "weaken":
        d = _load_single(args.file)
        _emit([weaken(d, parse_formula(args.formula), _parse_side(args.side))], args)
        return 0

    if args.command == "unweaken":
        which = (SpecialWeakening.TOP_IN_GAMMA if args.which == "TopInGamma"
                 else SpecialWeakening.BOT_IN_DELTA)
        _emit([unweaken_special(_load_single(args.file), which)], args)
        return 0

    if args.command == "contract":
        d = _load_single(args.file)
        _emit([contract(d, parse_formula(args.formula), _parse_side(args.side))], args)
        return 0

    if args.command == "invert":
        d = _load_single(args.file)
        outs = invert(d, _parse_side(args.side), parse_formula(args.target))
        _emit(list(outs), args)
        return 0

    if args.command == "cut-eliminate":
        left = _load_single(args.left)
        right = _load_single(args.right)
        trace = CutTrace() if args.trace else None
        variant = RuleId.CutA if args.variant == "a" else RuleId.CutC
        out = eliminate_cut(left, right, parse_formula(args.cut_formula), variant, trace)
        if trace is not None:
            for line in trace.lines():
                print(line, file=sys.stderr)
        _emit([out], args)
        return 0

    if args.command == "golden":
        results, coverage = corpus.run_all(args.corpus_dir)
        failures = 0
        for r in results:
            status = "pass" if r.ok else f"FAIL ({r.diff})"
            print(f"{r.case.id}: {status}")
            failures += 0 if r.ok else 1
        print(coverage)
        print(f"{len(results) - failures}/{len(results)} golden cases passed")
        return 0 if failures == 0 and coverage.ok else 1

    raise AssertionError(f"unhandled command {args.command}")


def _load_single(path: Path) -> Derivation:
    ds = load_derivations(path)
    if len(ds) != 1:
        raise DerivationFormatError(f"{path} holds {len(ds)} derivations, need exactly 1")
    return ds[0]


if __name__ == "__main__":
    sys.exit(main())
