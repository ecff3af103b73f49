"""Sequents over multiset contexts, the 24-rule table plus the two cut rules,
the derivation checker, backward rule enumeration, and the duality mapping.

A sequent ``(gamma; delta) |-* C`` reads: from the verification of everything
in gamma and the falsification of everything in delta, derive the verification
(``*`` = ``+``) or falsification (``*`` = ``-``) of C.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .syntax import (
    BOT,
    TOP,
    And,
    Atom,
    Bottom,
    Coimp,
    Formula,
    FormulaSyntaxError,
    Imp,
    Or,
    Top,
    TokenStream,
    parse_formula_tokens,
    format_formula,
    sort_key,
    tokenize,
)
from . import syntax as _syn


class Polarity(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> str:
        return self.value

    def flip(self) -> "Polarity":
        return Polarity.MINUS if self is Polarity.PLUS else Polarity.PLUS


PLUS = Polarity.PLUS
MINUS = Polarity.MINUS


class Side(enum.Enum):
    """Context side: assumptions (``a``) or counterassumptions (``c``)."""

    A = "a"
    C = "c"


# --- multiset contexts -------------------------------------------------------

@dataclass(frozen=True)
class Context:
    """Finite multiset of formulas, kept as canonically sorted (formula, count)
    pairs so that equality and hashing are count-map equality."""

    pairs: tuple[tuple[Formula, int], ...] = ()

    @staticmethod
    def of(*formulas: Formula) -> "Context":
        return Context.from_iter(formulas)

    @staticmethod
    def from_iter(formulas: Iterable[Formula]) -> "Context":
        counts: dict[Formula, int] = {}
        for f in formulas:
            counts[f] = counts.get(f, 0) + 1
        return Context._from_counts(counts)

    @staticmethod
    def _from_counts(counts: dict[Formula, int]) -> "Context":
        pairs = tuple(
            (f, c) for f, c in sorted(counts.items(), key=lambda fc: sort_key(fc[0])) if c > 0
        )
        return Context(pairs)

    def count(self, f: Formula) -> int:
        for g, c in self.pairs:
            if g == f:
                return c
        return 0

    def __contains__(self, f: Formula) -> bool:
        return self.count(f) > 0

    def __len__(self) -> int:
        return sum(c for _, c in self.pairs)

    def is_empty(self) -> bool:
        return not self.pairs

    def add(self, f: Formula, n: int = 1) -> "Context":
        counts = dict(self.pairs)
        counts[f] = counts.get(f, 0) + n
        return Context._from_counts(counts)

    def remove(self, f: Formula, n: int = 1) -> "Context":
        have = self.count(f)
        if have < n:
            raise KeyError(f"{format_formula(f)} not present {n} time(s)")
        counts = dict(self.pairs)
        counts[f] = have - n
        return Context._from_counts(counts)

    def union(self, other: "Context") -> "Context":
        counts = dict(self.pairs)
        for f, c in other.pairs:
            counts[f] = counts.get(f, 0) + c
        return Context._from_counts(counts)

    def distinct(self) -> Iterator[Formula]:
        for f, _ in self.pairs:
            yield f

    def expand(self) -> Iterator[Formula]:
        """Every occurrence, in canonical order."""
        for f, c in self.pairs:
            for _ in range(c):
                yield f

    def __str__(self) -> str:
        return ", ".join(format_formula(f) for f in self.expand())


EMPTY = Context()


@dataclass(frozen=True)
class Sequent:
    gamma: Context
    delta: Context
    polarity: Polarity
    succedent: Formula

    def __str__(self) -> str:
        return format_sequent(self)


def sequent(gamma: Iterable[Formula], delta: Iterable[Formula], polarity: Polarity,
            succedent: Formula) -> Sequent:
    return Sequent(Context.from_iter(gamma), Context.from_iter(delta), polarity, succedent)


def format_sequent(s: Sequent) -> str:
    g = str(s.gamma)
    d = str(s.delta)
    left = f"{g} ;" if g else ";"
    if d:
        left = f"{left} {d}"
    return f"{left} |-{s.polarity.sign} {format_formula(s.succedent)}"


def parse_sequent(text: str) -> Sequent:
    """Parse ``Gamma ; Delta |-+ C`` / ``|--``; empty sides are allowed and
    duplicate list entries produce multiset counts."""
    ts = TokenStream(tokenize(text))
    gamma = _parse_formula_list(ts, stop=(_syn.SEMI,))
    ts.expect(_syn.SEMI, "';'")
    delta = _parse_formula_list(ts, stop=(_syn.TURNSTILE_PLUS, _syn.TURNSTILE_MINUS))
    turn = ts.peek()
    if turn.kind == _syn.TURNSTILE_PLUS:
        pol = PLUS
    elif turn.kind == _syn.TURNSTILE_MINUS:
        pol = MINUS
    else:
        raise FormulaSyntaxError("expected '|-+' or '|--'", turn.pos)
    ts.next()
    succ = parse_formula_tokens(ts)
    tail = ts.peek()
    if tail.kind != _syn.END:
        raise FormulaSyntaxError(f"trailing input {tail.text!r}", tail.pos)
    return Sequent(Context.from_iter(gamma), Context.from_iter(delta), pol, succ)


def _parse_formula_list(ts: TokenStream, stop: tuple[str, ...]) -> list[Formula]:
    out: list[Formula] = []
    if ts.peek().kind in stop:
        return out
    out.append(parse_formula_tokens(ts))
    while ts.peek().kind == _syn.COMMA:
        ts.next()
        out.append(parse_formula_tokens(ts))
    return out


def parse_context_pair(text: str) -> tuple[Context, Context]:
    """Parse ``Gamma ; Delta`` with no turnstile (used by the identity command)."""
    ts = TokenStream(tokenize(text))
    gamma = _parse_formula_list(ts, stop=(_syn.SEMI,))
    ts.expect(_syn.SEMI, "';'")
    delta = _parse_formula_list(ts, stop=(_syn.END,))
    tail = ts.peek()
    if tail.kind != _syn.END:
        raise FormulaSyntaxError(f"trailing input {tail.text!r}", tail.pos)
    return Context.from_iter(gamma), Context.from_iter(delta)


# --- the rule table ----------------------------------------------------------

class RuleId(enum.Enum):
    RfPlus = "RfPlus"
    RfMinus = "RfMinus"
    BotLa = "BotLa"
    TopLc = "TopLc"
    BotRMinus = "BotRMinus"
    TopRPlus = "TopRPlus"
    AndRPlus = "AndRPlus"
    AndRMinus1 = "AndRMinus1"
    AndRMinus2 = "AndRMinus2"
    AndLa = "AndLa"
    AndLc = "AndLc"
    OrRPlus1 = "OrRPlus1"
    OrRPlus2 = "OrRPlus2"
    OrRMinus = "OrRMinus"
    OrLa = "OrLa"
    OrLc = "OrLc"
    ImpRPlus = "ImpRPlus"
    ImpRMinus = "ImpRMinus"
    ImpLa = "ImpLa"
    ImpLc = "ImpLc"
    CoimpRPlus = "CoimpRPlus"
    CoimpRMinus = "CoimpRMinus"
    CoimpLa = "CoimpLa"
    CoimpLc = "CoimpLc"
    CutA = "CutA"
    CutC = "CutC"


R = RuleId

ZERO_PREMISE = frozenset(
    (R.RfPlus, R.RfMinus, R.BotLa, R.TopLc, R.BotRMinus, R.TopRPlus)
)
CUT_RULES = frozenset((R.CutA, R.CutC))
LEFT_RULES_A = frozenset((R.AndLa, R.OrLa, R.ImpLa, R.CoimpLa))
LEFT_RULES_C = frozenset((R.AndLc, R.OrLc, R.ImpLc, R.CoimpLc))
LEFT_RULES = LEFT_RULES_A | LEFT_RULES_C
RIGHT_RULES = frozenset(
    (R.AndRPlus, R.AndRMinus1, R.AndRMinus2, R.OrRPlus1, R.OrRPlus2, R.OrRMinus,
     R.ImpRPlus, R.ImpRMinus, R.CoimpRPlus, R.CoimpRMinus)
)
PRIMITIVE_RULES = ZERO_PREMISE | LEFT_RULES | RIGHT_RULES

ARITY = {
    R.RfPlus: 0, R.RfMinus: 0, R.BotLa: 0, R.TopLc: 0, R.BotRMinus: 0, R.TopRPlus: 0,
    R.AndRPlus: 2, R.AndRMinus1: 1, R.AndRMinus2: 1, R.AndLa: 1, R.AndLc: 2,
    R.OrRPlus1: 1, R.OrRPlus2: 1, R.OrRMinus: 2, R.OrLa: 2, R.OrLc: 1,
    R.ImpRPlus: 1, R.ImpRMinus: 2, R.ImpLa: 2, R.ImpLc: 1,
    R.CoimpRPlus: 2, R.CoimpRMinus: 1, R.CoimpLa: 1, R.CoimpLc: 2,
    R.CutA: 2, R.CutC: 2,
}

# connective decomposed by each logical rule
_CONNECTIVE = {
    R.AndRPlus: And, R.AndRMinus1: And, R.AndRMinus2: And, R.AndLa: And, R.AndLc: And,
    R.OrRPlus1: Or, R.OrRPlus2: Or, R.OrRMinus: Or, R.OrLa: Or, R.OrLc: Or,
    R.ImpRPlus: Imp, R.ImpRMinus: Imp, R.ImpLa: Imp, R.ImpLc: Imp,
    R.CoimpRPlus: Coimp, R.CoimpRMinus: Coimp, R.CoimpLa: Coimp, R.CoimpLc: Coimp,
}


@dataclass(frozen=True)
class ContextSplit:
    """The (gamma, delta) / (gamma', delta') partition of a cut conclusion;
    not recoverable from the conclusion alone, so cut nodes must carry it."""

    gamma: Context
    delta: Context
    gamma_prime: Context
    delta_prime: Context


@dataclass(frozen=True)
class Annotation:
    principal: Optional[Formula] = None
    cut_formula: Optional[Formula] = None
    context_split: Optional[ContextSplit] = None


@dataclass(frozen=True)
class Derivation:
    conclusion: Sequent
    rule: RuleId
    premises: tuple["Derivation", ...] = ()
    annotation: Optional[Annotation] = None
    height: int = field(init=False, compare=False, repr=False, default=0)
    cut_count: int = field(init=False, compare=False, repr=False, default=0)

    def __post_init__(self):
        h = 0 if not self.premises else 1 + max(p.height for p in self.premises)
        c = sum(p.cut_count for p in self.premises)
        if self.rule in CUT_RULES:
            c += 1
        object.__setattr__(self, "height", h)
        object.__setattr__(self, "cut_count", c)


def node(rule: RuleId, conclusion: Sequent, premises: Iterable[Derivation] = (),
         principal: Optional[Formula] = None,
         annotation: Optional[Annotation] = None) -> Derivation:
    if annotation is None and principal is not None:
        annotation = Annotation(principal=principal)
    return Derivation(conclusion, rule, tuple(premises), annotation)


def height_of(d: Derivation) -> int:
    """Greatest number of successive rule applications; 0 at zero-premise nodes."""
    return d.height


def cut_height(d: Derivation) -> int:
    """Sum of the premise heights of a cut node."""
    if d.rule not in CUT_RULES:
        raise ValueError(f"cut_height needs a cut node, got {d.rule.value}")
    return d.premises[0].height + d.premises[1].height


# --- schema machinery ---------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: RuleId
    message: str

    def __str__(self) -> str:
        return f"{self.rule.value}: {self.message}"


def _zero_premise_failure(s: Sequent, rule: RuleId) -> Optional[str]:
    """None if the zero-premise rule closes s, else what is missing."""
    if rule is R.RfPlus:
        if s.polarity is not PLUS:
            return "wrong polarity: needs |-+"
        if not isinstance(s.succedent, Atom):
            return "succedent must be atomic"
        if s.succedent not in s.gamma:
            return "atomic succedent not among the assumptions"
        return None
    if rule is R.RfMinus:
        if s.polarity is not MINUS:
            return "wrong polarity: needs |--"
        if not isinstance(s.succedent, Atom):
            return "succedent must be atomic"
        if s.succedent not in s.delta:
            return "atomic succedent not among the counterassumptions"
        return None
    if rule is R.BotLa:
        return None if BOT in s.gamma else "F not among the assumptions"
    if rule is R.TopLc:
        return None if TOP in s.delta else "T not among the counterassumptions"
    if rule is R.TopRPlus:
        if s.polarity is not PLUS:
            return "wrong polarity: needs |-+"
        return None if s.succedent == TOP else "succedent must be T"
    if rule is R.BotRMinus:
        if s.polarity is not MINUS:
            return "wrong polarity: needs |--"
        return None if s.succedent == BOT else "succedent must be F"
    raise ValueError(f"not a zero-premise rule: {rule}")


def premises_for(conclusion: Sequent, rule: RuleId,
                 principal: Optional[Formula] = None) -> Optional[tuple[Sequent, ...]]:
    """Premise sequents the schema demands of this conclusion, or None when the
    rule does not apply (wrong polarity / shape / missing principal occurrence).

    Right rules ignore ``principal`` (the succedent is the principal); left
    rules require the principal occurrence on their side.
    """
    g, d, pol, c = conclusion.gamma, conclusion.delta, conclusion.polarity, conclusion.succedent

    if rule in ZERO_PREMISE:
        return () if _zero_premise_failure(conclusion, rule) is None else None

    if rule in RIGHT_RULES:
        conn = _CONNECTIVE[rule]
        if not isinstance(c, conn):
            return None
        a, b = c.left, c.right
        if rule is R.AndRPlus and pol is PLUS:
            return (Sequent(g, d, PLUS, a), Sequent(g, d, PLUS, b))
        if rule is R.AndRMinus1 and pol is MINUS:
            return (Sequent(g, d, MINUS, a),)
        if rule is R.AndRMinus2 and pol is MINUS:
            return (Sequent(g, d, MINUS, b),)
        if rule is R.OrRPlus1 and pol is PLUS:
            return (Sequent(g, d, PLUS, a),)
        if rule is R.OrRPlus2 and pol is PLUS:
            return (Sequent(g, d, PLUS, b),)
        if rule is R.OrRMinus and pol is MINUS:
            return (Sequent(g, d, MINUS, a), Sequent(g, d, MINUS, b))
        if rule is R.ImpRPlus and pol is PLUS:
            return (Sequent(g.add(a), d, PLUS, b),)
        if rule is R.ImpRMinus and pol is MINUS:
            return (Sequent(g, d, PLUS, a), Sequent(g, d, MINUS, b))
        if rule is R.CoimpRPlus and pol is PLUS:
            return (Sequent(g, d, PLUS, a), Sequent(g, d, MINUS, b))
        if rule is R.CoimpRMinus and pol is MINUS:
            return (Sequent(g, d.add(b), MINUS, a),)
        return None

    if rule in LEFT_RULES:
        conn = _CONNECTIVE[rule]
        if principal is None or not isinstance(principal, conn):
            return None
        a, b = principal.left, principal.right
        if rule in LEFT_RULES_A:
            if principal not in g:
                return None
            g0 = g.remove(principal)
            if rule is R.AndLa:
                return (Sequent(g0.add(a).add(b), d, pol, c),)
            if rule is R.OrLa:
                return (Sequent(g0.add(a), d, pol, c), Sequent(g0.add(b), d, pol, c))
            if rule is R.ImpLa:
                # the principal A -> B is repeated in the left premise
                return (Sequent(g, d, PLUS, a), Sequent(g0.add(b), d, pol, c))
            if rule is R.CoimpLa:
                return (Sequent(g0.add(a), d.add(b), pol, c),)
        else:
            if principal not in d:
                return None
            d0 = d.remove(principal)
            if rule is R.AndLc:
                return (Sequent(g, d0.add(a), pol, c), Sequent(g, d0.add(b), pol, c))
            if rule is R.OrLc:
                return (Sequent(g, d0.add(a).add(b), pol, c),)
            if rule is R.ImpLc:
                return (Sequent(g.add(a), d0.add(b), pol, c),)
            if rule is R.CoimpLc:
                # the principal A -< B is repeated in the left premise
                return (Sequent(g, d, MINUS, b), Sequent(g, d0.add(a), pol, c))
        return None

    raise ValueError(f"premises_for does not handle {rule}")


def check_rule_instance(conclusion: Sequent, rule: RuleId,
                        premise_conclusions: list[Sequent] | tuple[Sequent, ...],
                        annotation: Optional[Annotation] = None) -> Optional[Violation]:
    """None when the node instantiates the rule schema exactly, else the first
    failed constraint."""
    premise_conclusions = tuple(premise_conclusions)
    if len(premise_conclusions) != ARITY[rule]:
        return Violation(rule, f"arity: expected {ARITY[rule]} premises, got {len(premise_conclusions)}")

    if rule in ZERO_PREMISE:
        why = _zero_premise_failure(conclusion, rule)
        return None if why is None else Violation(rule, why)

    if rule in CUT_RULES:
        return _check_cut(conclusion, rule, premise_conclusions, annotation)

    # logical rule
    if annotation is not None and annotation.principal is not None:
        candidates: list[Formula] = [annotation.principal]
    elif rule in RIGHT_RULES:
        candidates = [conclusion.succedent]
    else:
        side = conclusion.gamma if rule in LEFT_RULES_A else conclusion.delta
        conn = _CONNECTIVE[rule]
        candidates = [f for f in side.distinct() if isinstance(f, conn)]
        if not candidates:
            return Violation(rule, "no principal occurrence of the right shape")

    last: Optional[Violation] = None
    for cand in candidates:
        expected = premises_for(conclusion, rule, cand)
        if expected is None:
            last = Violation(rule, "conclusion does not fit the rule schema "
                                   f"(principal {format_formula(cand)})")
            continue
        if expected == premise_conclusions:
            return None
        last = Violation(
            rule,
            "premises do not match the schema: expected "
            + " | ".join(format_sequent(e) for e in expected)
            + ", got "
            + " | ".join(format_sequent(p) for p in premise_conclusions),
        )
    return last


def _check_cut(conclusion: Sequent, rule: RuleId,
               premises: tuple[Sequent, ...], annotation: Optional[Annotation]) -> Optional[Violation]:
    if annotation is None or annotation.cut_formula is None or annotation.context_split is None:
        return Violation(rule, "cut nodes must carry cut_formula and context_split")
    dfm = annotation.cut_formula
    sp = annotation.context_split
    if conclusion.gamma != sp.gamma.union(sp.gamma_prime):
        return Violation(rule, "context split does not recompose the assumptions")
    if conclusion.delta != sp.delta.union(sp.delta_prime):
        return Violation(rule, "context split does not recompose the counterassumptions")
    if rule is R.CutA:
        left = Sequent(sp.gamma, sp.delta, PLUS, dfm)
        right = Sequent(sp.gamma_prime.add(dfm), sp.delta_prime, conclusion.polarity,
                        conclusion.succedent)
    else:
        left = Sequent(sp.gamma, sp.delta, MINUS, dfm)
        right = Sequent(sp.gamma_prime, sp.delta_prime.add(dfm), conclusion.polarity,
                        conclusion.succedent)
    if premises[0] != left:
        return Violation(rule, f"left premise must be {format_sequent(left)}, "
                               f"got {format_sequent(premises[0])}")
    if premises[1] != right:
        return Violation(rule, f"right premise must be {format_sequent(right)}, "
                               f"got {format_sequent(premises[1])}")
    return None


@dataclass(frozen=True)
class CheckReport:
    valid: bool
    height: int
    cut_count: int
    first_violation: Optional[tuple[str, Violation]] = None

    def __str__(self) -> str:
        if self.valid:
            return f"valid, height {self.height}, cuts {self.cut_count}"
        path, v = self.first_violation  # type: ignore[misc]
        where = path or "root"
        return f"INVALID at {where}: {v} (height {self.height}, cuts {self.cut_count})"


def check_derivation(d: Derivation) -> CheckReport:
    """Validate every node against its rule schema; never raises."""
    violation = _first_violation(d, "")
    return CheckReport(violation is None, d.height, d.cut_count, violation)


def _first_violation(d: Derivation, path: str) -> Optional[tuple[str, Violation]]:
    v = check_rule_instance(d.conclusion, d.rule, [p.conclusion for p in d.premises],
                            d.annotation)
    if v is not None:
        return (path, v)
    for i, p in enumerate(d.premises):
        sub = _first_violation(p, f"{path}.premises[{i}]" if path else f"premises[{i}]")
        if sub is not None:
            return sub
    return None


def infer_principal(d: Derivation) -> Optional[Formula]:
    """The formula the root rule introduces: annotated, or the succedent for
    right rules, or the unique context occurrence whose decomposition matches
    the premises for left rules."""
    if d.annotation is not None and d.annotation.principal is not None:
        return d.annotation.principal
    if d.rule in RIGHT_RULES:
        return d.conclusion.succedent
    if d.rule in LEFT_RULES:
        side = d.conclusion.gamma if d.rule in LEFT_RULES_A else d.conclusion.delta
        conn = _CONNECTIVE[d.rule]
        actual = tuple(p.conclusion for p in d.premises)
        for f in side.distinct():
            if isinstance(f, conn) and premises_for(d.conclusion, d.rule, f) == actual:
                return f
    return None


# --- backward reading of the rule table ---------------------------------------

@dataclass(frozen=True)
class Expansion:
    rule: RuleId
    annotation: Optional[Annotation]
    premises: tuple[Sequent, ...]


_RIGHT_BY_SHAPE = {
    (And, PLUS): (R.AndRPlus,),
    (And, MINUS): (R.AndRMinus1, R.AndRMinus2),
    (Or, PLUS): (R.OrRPlus1, R.OrRPlus2),
    (Or, MINUS): (R.OrRMinus,),
    (Imp, PLUS): (R.ImpRPlus,),
    (Imp, MINUS): (R.ImpRMinus,),
    (Coimp, PLUS): (R.CoimpRPlus,),
    (Coimp, MINUS): (R.CoimpRMinus,),
}

_LEFT_A_BY_SHAPE = {And: R.AndLa, Or: R.OrLa, Imp: R.ImpLa, Coimp: R.CoimpLa}
_LEFT_C_BY_SHAPE = {And: R.AndLc, Or: R.OrLc, Imp: R.ImpLc, Coimp: R.CoimpLc}


def backward_expansions(s: Sequent) -> list[Expansion]:
    """Every primitive-rule instance (no cuts) concluding exactly s: the
    zero-premise closers, the right rule(s) for the succedent, and one left
    rule per distinct compound occurrence in either context."""
    out: list[Expansion] = []
    for rule in (R.RfPlus, R.RfMinus, R.BotLa, R.TopLc, R.BotRMinus, R.TopRPlus):
        if _zero_premise_failure(s, rule) is None:
            out.append(Expansion(rule, None, ()))
    shape = (type(s.succedent), s.polarity)
    for rule in _RIGHT_BY_SHAPE.get(shape, ()):
        prem = premises_for(s, rule)
        if prem is not None:
            out.append(Expansion(rule, None, prem))
    for f in s.gamma.distinct():
        rule = _LEFT_A_BY_SHAPE.get(type(f))
        if rule is not None:
            prem = premises_for(s, rule, f)
            if prem is not None:
                out.append(Expansion(rule, Annotation(principal=f), prem))
    for f in s.delta.distinct():
        rule = _LEFT_C_BY_SHAPE.get(type(f))
        if rule is not None:
            prem = premises_for(s, rule, f)
            if prem is not None:
                out.append(Expansion(rule, Annotation(principal=f), prem))
    return out


# --- duality -------------------------------------------------------------------

DUAL_RULE = {
    R.RfPlus: R.RfMinus, R.RfMinus: R.RfPlus,
    R.BotLa: R.TopLc, R.TopLc: R.BotLa,
    R.BotRMinus: R.TopRPlus, R.TopRPlus: R.BotRMinus,
    R.AndRPlus: R.OrRMinus, R.OrRMinus: R.AndRPlus,
    R.AndRMinus1: R.OrRPlus1, R.OrRPlus1: R.AndRMinus1,
    R.AndRMinus2: R.OrRPlus2, R.OrRPlus2: R.AndRMinus2,
    R.AndLa: R.OrLc, R.OrLc: R.AndLa,
    R.AndLc: R.OrLa, R.OrLa: R.AndLc,
    R.ImpRPlus: R.CoimpRMinus, R.CoimpRMinus: R.ImpRPlus,
    R.ImpRMinus: R.CoimpRPlus, R.CoimpRPlus: R.ImpRMinus,
    R.ImpLa: R.CoimpLc, R.CoimpLc: R.ImpLa,
    R.ImpLc: R.CoimpLa, R.CoimpLa: R.ImpLc,
    R.CutA: R.CutC, R.CutC: R.CutA,
}

# mixed-polarity right rules: the dual schema lists its premises in the
# opposite order, so the premise tuple is reversed when dualizing
_DUAL_SWAPS_PREMISES = frozenset((R.ImpRMinus, R.CoimpRPlus))


def dual_formula(f: Formula) -> Formula:
    match f:
        case Atom():
            return f
        case Bottom():
            return TOP
        case Top():
            return BOT
        case And(l, r):
            return Or(dual_formula(l), dual_formula(r))
        case Or(l, r):
            return And(dual_formula(l), dual_formula(r))
        case Imp(l, r):
            return Coimp(dual_formula(r), dual_formula(l))
        case Coimp(l, r):
            return Imp(dual_formula(r), dual_formula(l))
    raise TypeError(f"not a formula: {f!r}")


def dual_context(ctx: Context) -> Context:
    return Context.from_iter(dual_formula(f) for f in ctx.expand())


def dual_sequent(s: Sequent) -> Sequent:
    return Sequent(dual_context(s.delta), dual_context(s.gamma), s.polarity.flip(),
                   dual_formula(s.succedent))


def dual_derivation(d: Derivation) -> Derivation:
    premises = tuple(dual_derivation(p) for p in d.premises)
    if d.rule in _DUAL_SWAPS_PREMISES:
        premises = premises[::-1]
    ann = None
    if d.annotation is not None:
        sp = d.annotation.context_split
        ann = Annotation(
            principal=dual_formula(d.annotation.principal) if d.annotation.principal else None,
            cut_formula=dual_formula(d.annotation.cut_formula) if d.annotation.cut_formula else None,
            context_split=ContextSplit(
                gamma=dual_context(sp.delta),
                delta=dual_context(sp.gamma),
                gamma_prime=dual_context(sp.delta_prime),
                delta_prime=dual_context(sp.gamma_prime),
            ) if sp is not None else None,
        )
    return Derivation(dual_sequent(d.conclusion), DUAL_RULE[d.rule], premises, ann)
