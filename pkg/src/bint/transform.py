"""Executable structural transformations on checked derivations.

Each operation consumes checker-valid, cut-free derivations and produces a
checker-valid, cut-free derivation with the advertised endsequent:

* ``derive_identity``  -- reflexivity for an arbitrary formula,
* ``weaken`` / ``weaken_context`` -- height-preserving weakening,
* ``unweaken_special`` -- dropping a spurious T assumption / F counterassumption,
* ``invert`` -- the eight inversion cases for the left rules,
* ``contract`` -- height-preserving contraction,
* ``eliminate_cut`` -- the full cut-elimination case machine.

Intermediate checker validation is on by default (``set_validation``); a
failing intermediate tree raises ``InternalCheckError`` rather than being
passed along silently.
"""

from __future__ import annotations

import enum
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Optional

from .syntax import (
    BOT, TOP, And, Atom, Bottom, Coimp, Formula, Imp, Or, Top, format_formula, weight,
)
from .kernel import (
    LEFT_RULES, MINUS, PLUS, ZERO_PREMISE,
    Annotation, Context, Derivation, Polarity, RuleId as R, Sequent, Side,
    check_derivation, infer_principal, node, premises_for, _zero_premise_failure,
)


class TransformError(ValueError):
    """Precondition failure: bad input derivation or missing occurrence."""


class InternalCheckError(AssertionError):
    """An intermediate tree failed the checker; indicates a transformation bug."""


_VALIDATE = True


def set_validation(on: bool) -> bool:
    """Toggle intermediate checker validation; returns the previous setting."""
    global _VALIDATE
    old = _VALIDATE
    _VALIDATE = on
    return old


@contextmanager
def validation(on: bool):
    old = set_validation(on)
    try:
        yield
    finally:
        set_validation(old)


def _checked(d: Derivation, what: str) -> Derivation:
    if _VALIDATE:
        report = check_derivation(d)
        if not report.valid:
            raise InternalCheckError(f"{what} produced an invalid tree: {report}")
    return d


def _require_input(d: Derivation, what: str) -> None:
    if d.cut_count != 0:
        raise TransformError(f"{what}: input contains {d.cut_count} cut(s)")
    if _VALIDATE:
        report = check_derivation(d)
        if not report.valid:
            raise TransformError(f"{what}: input is not checker-valid: {report}")


# --- identity expansion --------------------------------------------------------

def derive_identity(gamma: Context, delta: Context, c: Formula,
                    polarity: Polarity) -> Derivation:
    """Cut-free derivation of ``(gamma, C; delta) |-+ C`` (PLUS) or
    ``(gamma; delta, C) |-- C`` (MINUS), for arbitrary C and contexts.

    Formulas of weight <= 1 get their fixed one-step constructions; heavier
    formulas recurse through the matching left/right rule pair on strict
    subformulas, so an all-atom compound comes out with height 2.
    """
    d = _identity(gamma, delta, c, polarity)
    return _checked(d, "derive_identity")


def _identity(gamma: Context, delta: Context, c: Formula, polarity: Polarity) -> Derivation:
    if weight(c) <= 1:
        return _identity_base(gamma, delta, c, polarity)
    return _identity_step(gamma, delta, c, polarity)


def _identity_base(g: Context, d: Context, c: Formula, pol: Polarity) -> Derivation:
    plus = pol is PLUS
    conc = Sequent(g.add(c), d, PLUS, c) if plus else Sequent(g, d.add(c), MINUS, c)

    match c:
        case Bottom():
            return node(R.BotLa if plus else R.BotRMinus, conc)
        case Top():
            return node(R.TopRPlus if plus else R.TopLc, conc)
        case Atom():
            return node(R.RfPlus if plus else R.RfMinus, conc)

    a, b = c.left, c.right  # weight(c) == 1: both operands are F or T
    bot_a, bot_b = isinstance(a, Bottom), isinstance(b, Bottom)

    match c:
        case And():
            if plus:
                if bot_a or bot_b:
                    prem = node(R.BotLa, Sequent(g.add(a).add(b), d, PLUS, c))
                    return node(R.AndLa, conc, [prem], principal=c)
                prem = node(R.TopRPlus, Sequent(conc.gamma, d, PLUS, TOP))
                return node(R.AndRPlus, conc, [prem, prem])
            if bot_a:
                prem = node(R.BotRMinus, Sequent(g, conc.delta, MINUS, BOT))
                return node(R.AndRMinus1, conc, [prem])
            if bot_b:
                prem = node(R.BotRMinus, Sequent(g, conc.delta, MINUS, BOT))
                return node(R.AndRMinus2, conc, [prem])
            prem = node(R.TopLc, Sequent(g, d.add(TOP), MINUS, c))
            return node(R.AndLc, conc, [prem, prem], principal=c)
        case Or():
            if plus:
                if not bot_a:
                    prem = node(R.TopRPlus, Sequent(conc.gamma, d, PLUS, TOP))
                    return node(R.OrRPlus1, conc, [prem])
                if not bot_b:
                    prem = node(R.TopRPlus, Sequent(conc.gamma, d, PLUS, TOP))
                    return node(R.OrRPlus2, conc, [prem])
                prem = node(R.BotLa, Sequent(g.add(BOT), d, PLUS, c))
                return node(R.OrLa, conc, [prem, prem], principal=c)
            if bot_a and bot_b:
                prem = node(R.BotRMinus, Sequent(g, conc.delta, MINUS, BOT))
                return node(R.OrRMinus, conc, [prem, prem])
            prem = node(R.TopLc, Sequent(g, d.add(a).add(b), MINUS, c))
            return node(R.OrLc, conc, [prem], principal=c)
        case Imp():
            if plus:
                if not bot_a and bot_b:  # T -> F closes through both arms
                    p1 = node(R.TopRPlus, Sequent(conc.gamma, d, PLUS, TOP))
                    p2 = node(R.BotLa, Sequent(g.add(BOT), d, PLUS, c))
                    return node(R.ImpLa, conc, [p1, p2], principal=c)
                inner_rule = R.BotLa if bot_a and bot_b else R.TopRPlus
                succ = BOT if bot_a and bot_b else TOP
                prem = node(inner_rule, Sequent(conc.gamma.add(a), d, PLUS, succ))
                return node(R.ImpRPlus, conc, [prem])
            if not bot_a and bot_b:
                p1 = node(R.TopRPlus, Sequent(g, conc.delta, PLUS, TOP))
                p2 = node(R.BotRMinus, Sequent(g, conc.delta, MINUS, BOT))
                return node(R.ImpRMinus, conc, [p1, p2])
            inner_rule = R.BotLa if (bot_a and bot_b) else R.TopLc
            prem = node(inner_rule, Sequent(g.add(a), d.add(b), MINUS, c))
            return node(R.ImpLc, conc, [prem], principal=c)
        case Coimp():
            if plus:
                if not bot_a and bot_b:
                    p1 = node(R.TopRPlus, Sequent(conc.gamma, d, PLUS, TOP))
                    p2 = node(R.BotRMinus, Sequent(conc.gamma, d, MINUS, BOT))
                    return node(R.CoimpRPlus, conc, [p1, p2])
                inner_rule = R.BotLa if bot_a else R.TopLc
                prem = node(inner_rule, Sequent(g.add(a), d.add(b), PLUS, c))
                return node(R.CoimpLa, conc, [prem], principal=c)
            if bot_a:
                inner_rule = R.BotRMinus if bot_b else R.TopLc
                prem = node(inner_rule, Sequent(g, conc.delta.add(b), MINUS, BOT))
                return node(R.CoimpRMinus, conc, [prem])
            if bot_b:
                p1 = node(R.BotRMinus, Sequent(g, conc.delta, MINUS, BOT))
                p2 = node(R.TopLc, Sequent(g, d.add(TOP), MINUS, c))
                return node(R.CoimpLc, conc, [p1, p2], principal=c)
            prem = node(R.TopLc, Sequent(g, conc.delta.add(TOP), MINUS, TOP))
            return node(R.CoimpRMinus, conc, [prem])
    raise TypeError(f"not a formula: {c!r}")


def _identity_step(g: Context, d: Context, c: Formula, pol: Polarity) -> Derivation:
    a, b = c.left, c.right  # type: ignore[attr-defined]
    plus = pol is PLUS
    conc = Sequent(g.add(c), d, PLUS, c) if plus else Sequent(g, d.add(c), MINUS, c)
    match c:
        case And():
            if plus:
                pa = node(R.AndLa, Sequent(conc.gamma, d, PLUS, a),
                          [_identity(g.add(b), d, a, PLUS)], principal=c)
                pb = node(R.AndLa, Sequent(conc.gamma, d, PLUS, b),
                          [_identity(g.add(a), d, b, PLUS)], principal=c)
                return node(R.AndRPlus, conc, [pa, pb])
            pa = node(R.AndRMinus1, Sequent(g, d.add(a), MINUS, c),
                      [_identity(g, d, a, MINUS)])
            pb = node(R.AndRMinus2, Sequent(g, d.add(b), MINUS, c),
                      [_identity(g, d, b, MINUS)])
            return node(R.AndLc, conc, [pa, pb], principal=c)
        case Or():
            if plus:
                pa = node(R.OrRPlus1, Sequent(g.add(a), d, PLUS, c),
                          [_identity(g, d, a, PLUS)])
                pb = node(R.OrRPlus2, Sequent(g.add(b), d, PLUS, c),
                          [_identity(g, d, b, PLUS)])
                return node(R.OrLa, conc, [pa, pb], principal=c)
            pa = node(R.OrLc, Sequent(g, conc.delta, MINUS, a),
                      [_identity(g, d.add(b), a, MINUS)], principal=c)
            pb = node(R.OrLc, Sequent(g, conc.delta, MINUS, b),
                      [_identity(g, d.add(a), b, MINUS)], principal=c)
            return node(R.OrRMinus, conc, [pa, pb])
        case Imp():
            if plus:
                inner = node(R.ImpLa, Sequent(conc.gamma.add(a), d, PLUS, b),
                             [_identity(g.add(c), d, a, PLUS),
                              _identity(g.add(a), d, b, PLUS)], principal=c)
                return node(R.ImpRPlus, conc, [inner])
            inner = node(R.ImpRMinus, Sequent(g.add(a), d.add(b), MINUS, c),
                         [_identity(g, d.add(b), a, PLUS),
                          _identity(g.add(a), d, b, MINUS)])
            return node(R.ImpLc, conc, [inner], principal=c)
        case Coimp():
            if plus:
                inner = node(R.CoimpRPlus, Sequent(g.add(a), d.add(b), PLUS, c),
                             [_identity(g, d.add(b), a, PLUS),
                              _identity(g.add(a), d, b, MINUS)])
                return node(R.CoimpLa, conc, [inner], principal=c)
            inner = node(R.CoimpLc, Sequent(g, conc.delta.add(b), MINUS, a),
                         [_identity(g, d.add(c), b, MINUS),
                          _identity(g, d.add(b), a, MINUS)], principal=c)
            return node(R.CoimpRMinus, conc, [inner])
    raise TypeError(f"not a compound formula: {c!r}")


# --- weakening -------------------------------------------------------------------

def weaken(d: Derivation, extra: Formula, side: Side) -> Derivation:
    """Add ``extra`` to the assumptions (side a) or counterassumptions (side c)
    of the endsequent, preserving the tree shape and therefore the height."""
    _require_input(d, "weaken")
    return _checked(_weaken(d, extra, side), "weaken")


def _weaken(d: Derivation, extra: Formula, side: Side) -> Derivation:
    s = d.conclusion
    conc = (Sequent(s.gamma.add(extra), s.delta, s.polarity, s.succedent)
            if side is Side.A
            else Sequent(s.gamma, s.delta.add(extra), s.polarity, s.succedent))
    return Derivation(conc, d.rule, tuple(_weaken(p, extra, side) for p in d.premises),
                      d.annotation)


def weaken_context(d: Derivation, gamma_extra: Context = Context(),
                   delta_extra: Context = Context()) -> Derivation:
    """Multiset fold of ``weaken`` over both sides (the W^{a/c} steps)."""
    _require_input(d, "weaken_context")
    out = d
    for f in gamma_extra.expand():
        out = _weaken(out, f, Side.A)
    for f in delta_extra.expand():
        out = _weaken(out, f, Side.C)
    return _checked(out, "weaken_context")


class SpecialWeakening(enum.Enum):
    """Which invertible-weakening occurrence to drop."""

    TOP_IN_GAMMA = "TopInGamma"
    BOT_IN_DELTA = "BotInDelta"


def unweaken_special(d: Derivation, which: SpecialWeakening) -> Derivation:
    """Remove one T from the assumptions or one F from the counterassumptions
    of the endsequent.  Such an occurrence is never principal, so it can be
    dropped at every node without touching the tree shape or height."""
    _require_input(d, "unweaken_special")
    s = d.conclusion
    if which is SpecialWeakening.TOP_IN_GAMMA:
        if TOP not in s.gamma:
            raise TransformError("unweaken_special: no T among the assumptions")
        out = _unweaken(d, TOP, Side.A)
    else:
        if BOT not in s.delta:
            raise TransformError("unweaken_special: no F among the counterassumptions")
        out = _unweaken(d, BOT, Side.C)
    return _checked(out, "unweaken_special")


def _unweaken(d: Derivation, f: Formula, side: Side) -> Derivation:
    s = d.conclusion
    conc = (Sequent(s.gamma.remove(f), s.delta, s.polarity, s.succedent)
            if side is Side.A
            else Sequent(s.gamma, s.delta.remove(f), s.polarity, s.succedent))
    return Derivation(conc, d.rule, tuple(_unweaken(p, f, side) for p in d.premises),
                      d.annotation)


# --- inversion -------------------------------------------------------------------

def invert(d: Derivation, side: Side, target: Formula) -> tuple[Derivation, ...]:
    """Invert the left-rule decomposition of ``target`` on the given side of
    the endsequent.  Returns one derivation, or two for the case-splitting
    shapes (a conjunction among counterassumptions, a disjunction among
    assumptions).  Heights never increase.

    There is no inversion toward the repeated-premise side of the arrow rules:
    an implication among the assumptions inverts only to its consequent, a
    co-implication among the counterassumptions only to its first operand.
    """
    _require_input(d, "invert")
    if not isinstance(target, (And, Or, Imp, Coimp)):
        raise TransformError(
            f"invert: unsupported target {format_formula(target)} (must be compound)")
    present = target in (d.conclusion.gamma if side is Side.A else d.conclusion.delta)
    if not present:
        raise TransformError(
            f"invert: {format_formula(target)} does not occur on side {side.value}")
    outs = _invert(d, side, target)
    return tuple(_checked(o, "invert") for o in outs)


def _invert_transforms(side: Side, target: Formula) -> list[Callable[[Sequent], Sequent]]:
    """Per-output endsequent rewrites for the eight inversion cases."""
    a, b = target.left, target.right  # type: ignore[attr-defined]

    def mk(ga: list[Formula], da: list[Formula]) -> Callable[[Sequent], Sequent]:
        def tr(s: Sequent) -> Sequent:
            g, d = s.gamma, s.delta
            if side is Side.A:
                g = g.remove(target)
            else:
                d = d.remove(target)
            for f in ga:
                g = g.add(f)
            for f in da:
                d = d.add(f)
            return Sequent(g, d, s.polarity, s.succedent)
        return tr

    match (side, target):
        case (Side.A, And()):
            return [mk([a, b], [])]
        case (Side.C, And()):
            return [mk([], [a]), mk([], [b])]
        case (Side.A, Or()):
            return [mk([a], []), mk([b], [])]
        case (Side.C, Or()):
            return [mk([], [a, b])]
        case (Side.A, Imp()):
            return [mk([b], [])]
        case (Side.C, Imp()):
            return [mk([a], [b])]
        case (Side.A, Coimp()):
            return [mk([a], [b])]
        case (Side.C, Coimp()):
            return [mk([], [a])]
    raise TransformError("invert: unsupported target")


_PRINCIPAL_RULE_A = {And: R.AndLa, Or: R.OrLa, Imp: R.ImpLa, Coimp: R.CoimpLa}
_PRINCIPAL_RULE_C = {And: R.AndLc, Or: R.OrLc, Imp: R.ImpLc, Coimp: R.CoimpLc}


def _principal_here(d: Derivation, side: Side, target: Formula) -> bool:
    """Does the root rule decompose an occurrence of ``target`` on ``side``?"""
    table = _PRINCIPAL_RULE_A if side is Side.A else _PRINCIPAL_RULE_C
    if d.rule is not table.get(type(target)):
        return False
    if d.annotation is not None and d.annotation.principal is not None:
        return d.annotation.principal == target
    expected = premises_for(d.conclusion, d.rule, target)
    return expected == tuple(p.conclusion for p in d.premises)


def _invert(d: Derivation, side: Side, target: Formula) -> list[Derivation]:
    transforms = _invert_transforms(side, target)
    if not d.premises:
        return [Derivation(tr(d.conclusion), d.rule, (), d.annotation) for tr in transforms]
    if _principal_here(d, side, target):
        match (side, target):
            case (Side.A, And()) | (Side.C, Or()) | (Side.C, Imp()) | (Side.A, Coimp()):
                return [d.premises[0]]
            case (Side.C, And()) | (Side.A, Or()):
                return [d.premises[0], d.premises[1]]
            case (Side.A, Imp()) | (Side.C, Coimp()):
                # only the right premise of the arrow left rules is invertible
                return [d.premises[1]]
    sub = [_invert(p, side, target) for p in d.premises]
    return [
        Derivation(tr(d.conclusion), d.rule,
                   tuple(sub[i][k] for i in range(len(sub))), d.annotation)
        for k, tr in enumerate(transforms)
    ]


# --- contraction -----------------------------------------------------------------

def contract(d: Derivation, dup: Formula, side: Side) -> Derivation:
    """Collapse two occurrences of ``dup`` on the given side into one, without
    increasing the height."""
    _require_input(d, "contract")
    ctx = d.conclusion.gamma if side is Side.A else d.conclusion.delta
    if ctx.count(dup) < 2:
        raise TransformError(
            f"contract: fewer than two occurrences of {format_formula(dup)} "
            f"on side {side.value}")
    return _checked(_contract(d, dup, side), "contract")


def _drop_one(s: Sequent, f: Formula, side: Side) -> Sequent:
    if side is Side.A:
        return Sequent(s.gamma.remove(f), s.delta, s.polarity, s.succedent)
    return Sequent(s.gamma, s.delta.remove(f), s.polarity, s.succedent)


def _contract(d: Derivation, dup: Formula, side: Side) -> Derivation:
    conc = _drop_one(d.conclusion, dup, side)
    if not d.premises:
        return Derivation(conc, d.rule, (), d.annotation)
    if isinstance(dup, (And, Or, Imp, Coimp)) and _principal_here(d, side, dup):
        return _contract_principal(d, dup, side, conc)
    return Derivation(conc, d.rule,
                      tuple(_contract(p, dup, side) for p in d.premises), d.annotation)


def _contract_principal(d: Derivation, dup: Formula, side: Side, conc: Sequent) -> Derivation:
    """The root decomposes one copy of ``dup`` while another copy is parked in
    the context: invert the parked copy inside the premise(s), contract the
    doubled operands, and reapply the rule."""
    a, b = dup.left, dup.right  # type: ignore[attr-defined]
    ann = Annotation(principal=dup)
    match (side, dup):
        case (Side.A, And()):
            p = _invert(d.premises[0], side, dup)[0]
            p = _contract(_contract(p, a, Side.A), b, Side.A)
            return Derivation(conc, R.AndLa, (p,), ann)
        case (Side.A, Or()):
            p1 = _contract(_invert(d.premises[0], side, dup)[0], a, Side.A)
            p2 = _contract(_invert(d.premises[1], side, dup)[1], b, Side.A)
            return Derivation(conc, R.OrLa, (p1, p2), ann)
        case (Side.A, Imp()):
            # the left premise repeats the principal, so it holds both copies
            p1 = _contract(d.premises[0], dup, Side.A)
            p2 = _contract(_invert(d.premises[1], side, dup)[0], b, Side.A)
            return Derivation(conc, R.ImpLa, (p1, p2), ann)
        case (Side.A, Coimp()):
            p = _invert(d.premises[0], side, dup)[0]
            p = _contract(_contract(p, a, Side.A), b, Side.C)
            return Derivation(conc, R.CoimpLa, (p,), ann)
        case (Side.C, And()):
            p1 = _contract(_invert(d.premises[0], side, dup)[0], a, Side.C)
            p2 = _contract(_invert(d.premises[1], side, dup)[1], b, Side.C)
            return Derivation(conc, R.AndLc, (p1, p2), ann)
        case (Side.C, Or()):
            p = _invert(d.premises[0], side, dup)[0]
            p = _contract(_contract(p, a, Side.C), b, Side.C)
            return Derivation(conc, R.OrLc, (p,), ann)
        case (Side.C, Imp()):
            p = _invert(d.premises[0], side, dup)[0]
            p = _contract(_contract(p, a, Side.A), b, Side.C)
            return Derivation(conc, R.ImpLc, (p,), ann)
        case (Side.C, Coimp()):
            p1 = _contract(d.premises[0], dup, Side.C)
            p2 = _contract(_invert(d.premises[1], side, dup)[0], a, Side.C)
            return Derivation(conc, R.CoimpLc, (p1, p2), ann)
    raise TransformError("contract: unreachable principal case")


def contract_context(d: Derivation, dups: Context, side: Side) -> Derivation:
    """Fold of ``contract`` over a whole multiset (the C^{a/c} closing steps)."""
    out = d
    for f in dups.expand():
        out = _contract(out, f, side)
    return _checked(out, "contract_context")


# --- cut elimination --------------------------------------------------------------

@dataclass
class TraceStep:
    """One dispatch of the elimination machine, linked to its parent cut."""

    index: int
    parent: Optional[int]
    case: str
    variant: str            # "a" or "c"
    weight: int
    cut_height: int

    def line(self) -> str:
        return (f"case={self.case} weight={self.weight} "
                f"cutheight={self.cut_height} variant={self.variant}")


@dataclass
class CutTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def edges(self) -> list[tuple[TraceStep, TraceStep]]:
        by_index = {s.index: s for s in self.steps}
        return [(by_index[s.parent], s) for s in self.steps if s.parent is not None]

    def lines(self) -> list[str]:
        return [s.line() for s in self.steps]

    def cases(self) -> set[str]:
        return {s.case for s in self.steps}


_CASE_BY_LEFT_RULE = {
    R.AndLa: "-3.1-", R.AndLc: "-3.2-", R.OrLa: "-3.3-", R.OrLc: "-3.4-",
    R.ImpLa: "-3.5-", R.ImpLc: "-3.6-", R.CoimpLa: "-3.7-", R.CoimpLc: "-3.8-",
}

_CASE_BY_RIGHT_RULE = {
    R.AndLa: "-4.1-", R.AndLc: "-4.2-", R.OrLa: "-4.3-", R.OrLc: "-4.4-",
    R.ImpLa: "-4.5-", R.ImpLc: "-4.6-", R.CoimpLa: "-4.7-", R.CoimpLc: "-4.8-",
    R.AndRPlus: "-4.9-", R.AndRMinus1: "-4.10.1-", R.AndRMinus2: "-4.10.2-",
    R.OrRPlus1: "-4.11.1-", R.OrRPlus2: "-4.11.2-", R.OrRMinus: "-4.12-",
    R.ImpRPlus: "-4.13-", R.ImpRMinus: "-4.14-", R.CoimpRPlus: "-4.15-",
    R.CoimpRMinus: "-4.16-",
}

_CASE_PRINCIPAL = {And: "-5.1-", Or: "-5.2-", Imp: "-5.3-", Coimp: "-5.4-"}

#: every case label of the elimination machine, for coverage accounting
ELIMINATION_CASES: tuple[str, ...] = tuple(
    ["-1.1-", "-1.2-", "-1.3-", "-2.1-", "-2.2-", "-2.3-"]
    + [f"-3.{i}-" for i in range(1, 9)]
    + [f"-4.{i}-" for i in range(1, 10)]
    + ["-4.10.1-", "-4.10.2-", "-4.11.1-", "-4.11.2-"]
    + [f"-4.{i}-" for i in range(12, 17)]
    + [f"-5.{i}-" for i in range(1, 5)]
)

# priority for re-axiomatizing a conclusion that several zero-premise rules
# close: context-based closures first
_AXIOM_PRIORITY = (R.BotLa, R.TopLc, R.TopRPlus, R.BotRMinus, R.RfPlus, R.RfMinus)


def _axiom_for(s: Sequent) -> Optional[R]:
    for rule in _AXIOM_PRIORITY:
        if _zero_premise_failure(s, rule) is None:
            return rule
    return None


def _cut_target(left: Derivation, right: Derivation, dfm: Formula, variant: R) -> Sequent:
    lg, ld = left.conclusion.gamma, left.conclusion.delta
    gp, dp = _prime_contexts(right, dfm, variant)
    return Sequent(lg.union(gp), ld.union(dp), right.conclusion.polarity,
                   right.conclusion.succedent)


def _prime_contexts(right: Derivation, dfm: Formula, variant: R) -> tuple[Context, Context]:
    """Gamma' and Delta': the right premise minus its cut-formula occurrence."""
    if variant is R.CutA:
        return right.conclusion.gamma.remove(dfm), right.conclusion.delta
    return right.conclusion.gamma, right.conclusion.delta.remove(dfm)


def eliminate_cut(left: Derivation, right: Derivation, cut_formula: Formula,
                  variant: R, trace: Optional[CutTrace] = None) -> Derivation:
    """Eliminate one cut between two cut-free derivations.

    ``variant`` is CutA (left concludes ``|-+ D``, D among the right premise's
    assumptions) or CutC (left ``|-- D``, D among the counterassumptions).
    Returns a cut-free derivation of ``(Gamma, Gamma'; Delta, Delta') |-* C``.

    Every recursive sub-cut strictly decreases the (weight, cut-height) pair;
    pass ``trace`` to record the dispatched case per rewrite.
    """
    if variant not in (R.CutA, R.CutC):
        raise TransformError(f"variant must be CutA or CutC, got {variant}")
    _require_input(left, "eliminate_cut(left)")
    _require_input(right, "eliminate_cut(right)")
    want_pol = PLUS if variant is R.CutA else MINUS
    if left.conclusion.polarity is not want_pol or left.conclusion.succedent != cut_formula:
        raise TransformError(
            f"eliminate_cut: left premise must conclude |-{want_pol.sign} "
            f"{format_formula(cut_formula)}, got {left.conclusion}")
    side_ctx = right.conclusion.gamma if variant is R.CutA else right.conclusion.delta
    if cut_formula not in side_ctx:
        where = "assumptions" if variant is R.CutA else "counterassumptions"
        raise TransformError(
            f"eliminate_cut: cut formula {format_formula(cut_formula)} missing "
            f"from the right premise's {where}")
    out = _Eliminator(trace).run(left, right, cut_formula, variant, None, None)
    target = _cut_target(left, right, cut_formula, variant)
    if out.conclusion != target:
        raise InternalCheckError(
            f"eliminate_cut endsequent mismatch: wanted {target}, got {out.conclusion}")
    return out


class _Eliminator:
    def __init__(self, trace: Optional[CutTrace]):
        self.trace = trace
        self._counter = 0

    def run(self, left: Derivation, right: Derivation, dfm: Formula, variant: R,
            parent: Optional[int], parent_measure: Optional[tuple[int, int]]) -> Derivation:
        measure = (weight(dfm), left.height + right.height)
        if parent_measure is not None and not measure < parent_measure:
            raise InternalCheckError(
                f"elimination measure did not decrease: {parent_measure} -> {measure}")
        index = self._counter
        self._counter += 1
        case, build = self._select(left, right, dfm, variant)
        if self.trace is not None:
            self.trace.steps.append(TraceStep(
                index, parent, case, "a" if variant is R.CutA else "c",
                measure[0], measure[1]))
        out = build(index, measure)
        if _VALIDATE:
            report = check_derivation(out)
            if not report.valid or out.cut_count:
                raise InternalCheckError(f"case {case} produced a bad tree: {report}")
        return out

    def _select(self, left: Derivation, right: Derivation, dfm: Formula,
                variant: R) -> tuple[str, Callable[[int, tuple[int, int]], Derivation]]:
        target = _cut_target(left, right, dfm, variant)

        if right.rule in ZERO_PREMISE:
            case = {(R.CutA, PLUS): "-1.2-", (R.CutA, MINUS): "-1.3-",
                    (R.CutC, PLUS): "-2.2-", (R.CutC, MINUS): "-2.3-"}[
                (variant, right.conclusion.polarity)]
            closer = _axiom_for(target)
            if closer is not None:
                return case, lambda i, m: node(closer, target)
            if target.succedent == dfm and (
                    (variant is R.CutA and target.polarity is PLUS)
                    or (variant is R.CutC and target.polarity is MINUS)):
                gp, dp = _prime_contexts(right, dfm, variant)
                return case, lambda i, m: weaken_context(left, gp, dp)
            # the right axiom closed through the cut occurrence itself
            # (D = F via BotLa under CutA, D = T via TopLc under CutC); the
            # left premise then necessarily ends in a left rule, so the cut
            # is permuted into it exactly as in the -3.x- cases below
            if left.rule not in LEFT_RULES:
                raise InternalCheckError(
                    f"fall-through with a non-left-rule left premise {left.rule}")
        elif left.rule in ZERO_PREMISE:
            case = "-1.1-" if variant is R.CutA else "-2.1-"
            return case, lambda i, m: self._left_axiom(left, right, dfm, variant, target)

        if left.rule in LEFT_RULES:
            case = _CASE_BY_LEFT_RULE[left.rule]
            return case, lambda i, m: self._permute_left(i, m, left, right, dfm, variant)
        if not self._principal_in_right(right, dfm, variant):
            case = _CASE_BY_RIGHT_RULE[right.rule]
            return case, lambda i, m: self._permute_right(i, m, left, right, dfm, variant)
        case = _CASE_PRINCIPAL[type(dfm)]
        return case, lambda i, m: self._principal(i, m, left, right, dfm, variant)

    @staticmethod
    def _principal_in_right(right: Derivation, dfm: Formula, variant: R) -> bool:
        side = Side.A if variant is R.CutA else Side.C
        return isinstance(dfm, (And, Or, Imp, Coimp)) and _principal_here(right, side, dfm)

    # -1.1- / -2.1-: the left premise is an axiom
    def _left_axiom(self, left: Derivation, right: Derivation, dfm: Formula,
                    variant: R, target: Sequent) -> Derivation:
        lg, ld = left.conclusion.gamma, left.conclusion.delta
        rule = left.rule
        if rule in (R.RfPlus, R.RfMinus):
            if variant is R.CutA:
                return weaken_context(right, lg.remove(dfm), ld)
            return weaken_context(right, lg, ld.remove(dfm))
        if rule is R.BotLa:
            return node(R.BotLa, target)
        if rule is R.TopLc:
            return node(R.TopLc, target)
        if rule is R.TopRPlus:
            trimmed = unweaken_special(right, SpecialWeakening.TOP_IN_GAMMA)
            return weaken_context(trimmed, lg, ld)
        if rule is R.BotRMinus:
            trimmed = unweaken_special(right, SpecialWeakening.BOT_IN_DELTA)
            return weaken_context(trimmed, lg, ld)
        raise InternalCheckError(f"unexpected axiom rule {rule} on the left premise")

    # -3.x-: the cut formula is not principal on the left; permute the cut
    # above the left rule
    def _permute_left(self, index: int, measure: tuple[int, int], left: Derivation,
                      right: Derivation, dfm: Formula, variant: R) -> Derivation:
        target = _cut_target(left, right, dfm, variant)
        gp, dp = _prime_contexts(right, dfm, variant)
        principal = infer_principal(left)
        if principal is None:
            raise InternalCheckError(f"cannot identify the principal of {left.rule}")

        def rec(premise: Derivation) -> Derivation:
            return self.run(premise, right, dfm, variant, index, measure)

        rule = left.rule
        if rule in (R.AndLa, R.OrLc, R.ImpLc, R.CoimpLa):
            new_premises = (rec(left.premises[0]),)
        elif rule in (R.AndLc, R.OrLa):
            new_premises = (rec(left.premises[0]), rec(left.premises[1]))
        elif rule in (R.ImpLa, R.CoimpLc):
            # the first premise does not mention the cut formula; it is only
            # weakened by the carried-over context
            carried = weaken_context(left.premises[0], gp, dp)
            new_premises = (carried, rec(left.premises[1]))
        else:
            raise InternalCheckError(f"not a left rule: {rule}")
        return node(rule, target, new_premises, principal=principal)

    # -4.x-: principal on the left only; permute the cut above the right rule
    def _permute_right(self, index: int, measure: tuple[int, int], left: Derivation,
                       right: Derivation, dfm: Formula, variant: R) -> Derivation:
        target = _cut_target(left, right, dfm, variant)
        new_premises = tuple(
            self.run(left, q, dfm, variant, index, measure) for q in right.premises)
        return Derivation(target, right.rule, new_premises, right.annotation)

    # -5.x-: principal on both sides; cut on strict subformulas and close the
    # doubled contexts with contraction
    def _principal(self, index: int, measure: tuple[int, int], left: Derivation,
                   right: Derivation, dfm: Formula, variant: R) -> Derivation:
        a, b = dfm.left, dfm.right  # type: ignore[attr-defined]
        lg, ld = left.conclusion.gamma, left.conclusion.delta
        gp, dp = _prime_contexts(right, dfm, variant)

        def rec(l: Derivation, r: Derivation, f: Formula, v: R) -> Derivation:
            return self.run(l, r, f, v, index, measure)

        def close(d: Derivation, dup_gamma: Context, dup_delta: Context) -> Derivation:
            out = contract_context(d, dup_gamma, Side.A)
            return contract_context(out, dup_delta, Side.C)

        if variant is R.CutA:
            if isinstance(dfm, And):                      # -5.1-
                self._expect(left.rule is R.AndRPlus, left)
                inner = rec(left.premises[0], right.premises[0], a, R.CutA)
                outer = rec(left.premises[1], inner, b, R.CutA)
                return close(outer, lg, ld)
            if isinstance(dfm, Or):                       # -5.2-
                self._expect(left.rule in (R.OrRPlus1, R.OrRPlus2), left)
                if left.rule is R.OrRPlus1:
                    return rec(left.premises[0], right.premises[0], a, R.CutA)
                return rec(left.premises[0], right.premises[1], b, R.CutA)
            if isinstance(dfm, Imp):                      # -5.3-
                self._expect(left.rule is R.ImpRPlus, left)
                cut1 = rec(left, right.premises[0], dfm, R.CutA)
                cut2 = rec(left.premises[0], right.premises[1], b, R.CutA)
                cut3 = rec(cut1, cut2, a, R.CutA)
                return close(cut3, lg.union(gp), ld.union(dp))
            if isinstance(dfm, Coimp):                    # -5.4-: CutA is
                self._expect(left.rule is R.CoimpRPlus, left)   # replaced by CutC
                inner = rec(left.premises[0], right.premises[0], a, R.CutA)
                outer = rec(left.premises[1], inner, b, R.CutC)
                return close(outer, lg, ld)
        else:
            if isinstance(dfm, And):                      # -5.1-
                self._expect(left.rule in (R.AndRMinus1, R.AndRMinus2), left)
                if left.rule is R.AndRMinus1:
                    return rec(left.premises[0], right.premises[0], a, R.CutC)
                return rec(left.premises[0], right.premises[1], b, R.CutC)
            if isinstance(dfm, Or):                       # -5.2-
                self._expect(left.rule is R.OrRMinus, left)
                inner = rec(left.premises[0], right.premises[0], a, R.CutC)
                outer = rec(left.premises[1], inner, b, R.CutC)
                return close(outer, lg, ld)
            if isinstance(dfm, Imp):                      # -5.3-: CutC is
                self._expect(left.rule is R.ImpRMinus, left)    # replaced by CutA
                inner = rec(left.premises[0], right.premises[0], a, R.CutA)
                outer = rec(left.premises[1], inner, b, R.CutC)
                return close(outer, lg, ld)
            if isinstance(dfm, Coimp):                    # -5.4-
                self._expect(left.rule is R.CoimpRMinus, left)
                cut1 = rec(left, right.premises[0], dfm, R.CutC)
                cut2 = rec(left.premises[0], right.premises[1], a, R.CutC)
                cut3 = rec(cut1, cut2, b, R.CutC)
                return close(cut3, lg.union(gp), ld.union(dp))
        raise InternalCheckError(f"principal case fell through for {format_formula(dfm)}")

    @staticmethod
    def _expect(ok: bool, left: Derivation) -> None:
        if not ok:
            raise InternalCheckError(
                f"left premise root {left.rule} does not introduce the cut formula")
