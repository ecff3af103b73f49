import pytest
from hypothesis import given, settings

from bint.syntax import BOT, And, Atom, parse_formula
from bint.kernel import (
    MINUS, Annotation, Context, ContextSplit, RuleId as R, Violation,
    backward_expansions, check_derivation, check_rule_instance, cut_height,
    dual_derivation, dual_formula, dual_sequent, format_sequent, infer_principal,
    node, parse_sequent,
)
from bint.transform import derive_identity
from conftest import contexts, formulas, polarities, sequents

p, q = Atom("p"), Atom("q")


# --- contexts ------------------------------------------------------------------

def test_context_is_a_multiset():
    a = Context.of(p, q, p)
    b = Context.of(q, p, p)
    assert a == b
    assert a.count(p) == 2 and len(a) == 3
    assert a.remove(p).count(p) == 1
    with pytest.raises(KeyError):
        Context.of(q).remove(p)


def test_context_union_adds_counts():
    assert Context.of(p).union(Context.of(p, q)).count(p) == 2


@given(contexts, formulas(max_leaves=2))
def test_context_add_remove_inverse(ctx, f):
    assert ctx.add(f).remove(f) == ctx


# --- sequent text ----------------------------------------------------------------

def test_sequent_round_trip():
    s = parse_sequent("p, p, q ; r |-+ p -> q")
    assert s.gamma.count(p) == 2
    assert parse_sequent(format_sequent(s)) == s


def test_empty_sides():
    s = parse_sequent("; |-- F")
    assert s.gamma.is_empty() and s.delta.is_empty() and s.polarity is MINUS


@given(sequents)
def test_sequent_format_parses_back(s):
    assert parse_sequent(format_sequent(s)) == s


# --- rule instance checking --------------------------------------------------------

def test_rf_plus_instance():
    s = parse_sequent("p ; |-+ p")
    assert check_rule_instance(s, R.RfPlus, []) is None


def test_shared_context_enforced():
    conc = parse_sequent("; |-+ p /\\ q")
    bad = [parse_sequent("; |-+ p"), parse_sequent("; q |-+ q")]
    v = check_rule_instance(conc, R.AndRPlus, bad)
    assert isinstance(v, Violation)


def test_imp_la_repeats_principal():
    conc = parse_sequent("p -> q ; |-+ q")
    good = [parse_sequent("p -> q ; |-+ p"), parse_sequent("q ; |-+ q")]
    assert check_rule_instance(conc, R.ImpLa, good) is None
    # dropping the repetition violates the schema
    bad = [parse_sequent("; |-+ p"), parse_sequent("q ; |-+ q")]
    assert check_rule_instance(conc, R.ImpLa, bad) is not None


def test_polarity_constraints():
    assert check_rule_instance(parse_sequent("p ; |-- p"), R.RfPlus, []) is not None
    assert check_rule_instance(parse_sequent("; |-- T"), R.TopRPlus, []) is not None
    assert check_rule_instance(parse_sequent("; |-- F"), R.BotRMinus, []) is None


def test_non_atomic_axiom_rejected():
    assert check_rule_instance(parse_sequent("p /\\ q ; |-+ p /\\ q"), R.RfPlus, []) is not None


def test_arity_checked():
    v = check_rule_instance(parse_sequent("p ; |-+ p"), R.RfPlus, [parse_sequent("p ; |-+ p")])
    assert v is not None and "arity" in v.message


# --- derivation checking ------------------------------------------------------------

def test_axiom_height_zero():
    d = node(R.RfPlus, parse_sequent("p ; |-+ p"))
    report = check_derivation(d)
    assert report.valid and report.height == 0 and report.cut_count == 0


def test_two_step_low_weight_identity():
    d = node(R.AndLa, parse_sequent("F /\\ F ; |-+ F /\\ F"),
             [node(R.BotLa, parse_sequent("F, F ; |-+ F /\\ F"))],
             principal=And(BOT, BOT))
    report = check_derivation(d)
    assert report.valid and report.height == 1 and report.cut_count == 0


def _cut_node():
    rf = node(R.RfPlus, parse_sequent("p ; |-+ p"))
    split = ContextSplit(Context.of(p), Context(), Context(), Context())
    conc = parse_sequent("p ; |-+ p")
    return node(R.CutA, conc, [rf, rf],
                annotation=Annotation(cut_formula=p, context_split=split))


def test_cut_node_checks_and_counts():
    d = _cut_node()
    report = check_derivation(d)
    assert report.valid and report.cut_count == 1
    assert cut_height(d) == 0


def test_cut_height_requires_cut():
    with pytest.raises(ValueError):
        cut_height(node(R.RfPlus, parse_sequent("p ; |-+ p")))


def test_cut_without_split_rejected():
    rf = node(R.RfPlus, parse_sequent("p ; |-+ p"))
    d = node(R.CutA, parse_sequent("p ; |-+ p"), [rf, rf])
    assert not check_derivation(d).valid


def test_cut_with_wrong_split_rejected():
    rf = node(R.RfPlus, parse_sequent("p ; |-+ p"))
    bad_split = ContextSplit(Context.of(Atom("q")), Context(), Context(), Context())
    d = node(R.CutA, parse_sequent("p ; |-+ p"), [rf, rf],
             annotation=Annotation(cut_formula=p, context_split=bad_split))
    report = check_derivation(d)
    assert not report.valid
    assert "recompose" in report.first_violation[1].message


def test_violation_path_reported():
    bad = node(R.AndRPlus, parse_sequent("; |-+ p /\\ q"),
               [node(R.RfPlus, parse_sequent("; |-+ p")),
                node(R.RfPlus, parse_sequent("; |-+ q"))])
    report = check_derivation(bad)
    assert not report.valid
    path, violation = report.first_violation
    assert "premises" in path and violation.rule is R.RfPlus


# --- backward expansions -------------------------------------------------------------

def test_top_closes():
    out = backward_expansions(parse_sequent("; |-+ T"))
    assert any(e.rule is R.TopRPlus and e.premises == () for e in out)


def test_disjunction_choices():
    out = backward_expansions(parse_sequent("p ; |-+ p \\/ q"))
    got = {(e.rule, e.premises) for e in out}
    assert (R.OrRPlus1, (parse_sequent("p ; |-+ p"),)) in got
    assert (R.OrRPlus2, (parse_sequent("p ; |-+ q"),)) in got


def test_imp_lc_backward():
    out = backward_expansions(parse_sequent("; p -> q |-- r"))
    assert any(e.rule is R.ImpLc and e.premises == (parse_sequent("p ; q |-- r"),)
               for e in out)


@given(sequents)
@settings(max_examples=150)
def test_expansions_pass_the_checker(s):
    for e in backward_expansions(s):
        assert check_rule_instance(s, e.rule, e.premises, e.annotation) is None


def test_infer_principal():
    d = node(R.AndLa, parse_sequent("p /\\ q ; |-+ p"),
             [node(R.RfPlus, parse_sequent("p, q ; |-+ p"))])
    assert infer_principal(d) == And(p, q)


# --- duality ---------------------------------------------------------------------------

def test_dual_formula_table():
    f = parse_formula("(p -> q) /\\ (F -< T)")
    assert dual_formula(f) == parse_formula("(q -< p) \\/ (F -> T)")


@given(formulas())
def test_dual_formula_involution(f):
    assert dual_formula(dual_formula(f)) == f


@given(sequents)
def test_dual_sequent_involution(s):
    assert dual_sequent(dual_sequent(s)) == s


def test_dual_sequent_swaps_zones_and_polarity():
    s = parse_sequent("p ; q |-+ r")
    assert format_sequent(dual_sequent(s)) == "q ; p |-- r"


@given(contexts, contexts, formulas(max_leaves=3), polarities)
@settings(max_examples=60)
def test_dual_derivation_of_identity_is_valid(g, d, c, pol):
    deriv = derive_identity(g, d, c, pol)
    dual = dual_derivation(deriv)
    report = check_derivation(dual)
    assert report.valid
    assert dual.height == deriv.height
    assert dual.conclusion == dual_sequent(deriv.conclusion)


def test_dual_derivation_on_corpus(derivation_corpus):
    for d in derivation_corpus:
        dd = dual_derivation(d)
        assert check_derivation(dd).valid
        assert dd.height == d.height


def test_height_is_monotone(derivation_corpus):
    def walk(d):
        if d.premises:
            assert d.height == 1 + max(c.height for c in d.premises)
            for c in d.premises:
                walk(c)
        else:
            assert d.height == 0
    for d in derivation_corpus:
        walk(d)
