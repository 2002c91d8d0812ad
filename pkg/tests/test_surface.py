import re

import pytest

from ert import syntax as S
from ert.checker import Checker
from ert.contexts import EMPTY, ghost, term
from ert.diagnostics import ErtError, Stuck
from ert.surface import Env, Resolver, elaborate_beta, load, parse, parse_category, show
from ert.surface.printer import context_names
from ert.syntax import App, Eq, Lam, Nat, Natrec, Var, Zero, numeral

from conftest import sample

CH = Checker()


def squash(s):
    return re.sub(r"\s+", " ", s).strip()


def test_parse_single_def():
    decls = parse("def z : Nat := zero")
    assert len(decls) == 1 and decls[0].name == "z"


def test_parse_theorem_with_gen_and_rfl():
    res = load("thm r : forall n:Nat, n = n := glam |n:Nat|, rfl n")
    d = res.get("r")
    assert d.body == S.Gen(Nat(), S.Rfl(Var(0)))
    src = "thm r : forall x0 : Nat, x0 =[Nat] x0 := glam |x0 : Nat|, rfl x0"
    assert squash(f"thm r : {show(d.sig)} := {show(d.body)}") == squash(src)


def test_unclosed_paren_points_at_the_paren():
    res = load("def bad : Nat := (")
    (diag,) = res.diagnostics
    assert (diag.span.line, diag.span.col) == (1, "def bad : Nat := (".index("(") + 1)


def test_unbound_name():
    res = load("def bad : Nat := q")
    (diag,) = res.diagnostics
    assert "q" in diag.message


def test_later_declarations_survive_an_error():
    res = load("def a : Nat := q\ndef b : Nat := 1\ndef c : Nat := a")
    assert [d.name for d in res.decls] == ["b"]
    assert len(res.diagnostics) == 2


def test_resolve_nested_lambda():
    assert load("def k : Nat -> Nat -> Nat := \\x : Nat. \\y : Nat. x").get("k").body == Lam(Nat(), Lam(Nat(), Var(1)))


def test_reference_to_prior_declaration_is_inlined():
    src = "def one : Nat := 1\ndef two : Nat := succ one"
    hand = "def two : Nat := succ 1"
    inlined, expanded = load(src), load(hand)
    assert inlined.ok and expanded.ok
    assert S.as_numeral(inlined.get("two").body) == 2
    assert inlined.get("two").body == expanded.get("two").body


def test_inlined_definition_under_binders_shifts():
    src = "def id : Nat -> Nat := \\x : Nat. x\ndef f : Nat -> Nat := \\y : Nat. id y"
    res = load(src)
    assert res.ok
    body = res.get("f").body
    assert S.scope_ok(body, 0)
    CH.check_term(EMPTY, body, res.get("f").sig)


def test_kind_misuse_is_reported():
    res = load("thm t : top := <>\ndef n : Nat := t")
    assert not res.ok


# ----------------------------------------------------------------------
# by beta


def test_by_beta_single_beta_ty():
    goal = Eq(Nat(), App(Lam(Nat(), Var(0)), Zero()), Zero())
    assert elaborate_beta(EMPTY, goal) == S.BetaTy(Nat(), Var(0), Zero())


def test_by_beta_single_beta_zero():
    z, s = numeral(2), S.App(S.Succ(), Var(0))
    goal = Eq(Nat(), Natrec(Nat(), Zero(), z, s), z)
    assert elaborate_beta(EMPTY, goal) == S.BetaZero(Nat(), z, s)


def _axioms(p):
    """Axiom instances of a chain, left to right."""
    match p:
        case S.SubstPr(_, _, _, rest, first):
            return _axioms(first) + _axioms(rest)
        case S.Rfl():
            return []
    return [type(p).__name__]


def test_by_beta_zero_left_is_a_chain(corpus):
    add = corpus["arith.ert"].get("add").body
    ctx = EMPTY.extend(ghost(Nat()))
    goal = Eq(Nat(), App(App(add, Zero()), Var(0)), Var(0))
    pf = elaborate_beta(ctx, goal)
    CH.check_proof(ctx, pf, goal)
    steps = _axioms(pf)
    assert len(steps) >= 3 and "BetaZero" in steps and steps[0] == "BetaTy"


def test_by_beta_refuses_unequal_normal_forms():
    with pytest.raises(Stuck):
        elaborate_beta(EMPTY, Eq(Nat(), Zero(), numeral(1)))


def test_by_beta_needs_an_equation():
    with pytest.raises(ErtError):
        elaborate_beta(EMPTY, S.Top())


def test_by_beta_output_always_rechecks(decls):
    """Every by-beta site in the corpus elaborated to a proof the checker accepts."""
    for d in decls:
        if d.kind == "thm":
            CH.check_proof(EMPTY, d.body, d.sig)


# ----------------------------------------------------------------------
# printing and re-parsing


def reparse(e, ctx, classifier=None):
    names = context_names(ctx)
    env = Env()
    for name, h in zip(names, ctx):
        env = env.bind(name, h)
    cat = S.category(e)
    node = parse_category(show(e, names), cat)
    r = Resolver()
    if cat == "type":
        return r.ty(env, node)
    if cat == "prop":
        return r.pr(env, node)
    if cat == "term":
        return r.tm(env, node)
    return r.pf(env, node, classifier)


def test_print_parse_round_trip_on_declarations(decls):
    for d in decls:
        assert reparse(d.sig, EMPTY) == d.sig, d.name
        assert reparse(d.body, EMPTY, d.sig) == d.body, d.name


def test_print_parse_round_trip_on_subderivations(judgments):
    for name, j in sample(judgments, 600, seed=8):
        assert reparse(j.subject, j.ctx, j.classifier) == j.subject, name


def test_printer_names_are_context_aware():
    ctx = EMPTY.extend(term(Nat()), term(Nat()))
    assert show(Lam(Nat(), App(Var(1), Var(2))), context_names(ctx)).replace(" ", "") == "\\x2:Nat.x1x0"
