import random

from ert import stlc as T
from ert import syntax as S
from ert.contexts import EMPTY, LOGICAL, ghost, prop, term, upgrade
from ert.erasure import erase_ctx, erase_subst, erase_term, erase_type
from ert.stlc import SError, SLam, SUnit, SZero, TFn, TNat, TUnit
from ert.syntax import Eq, Intersect, Nat, Subset, Top, Var, Zero, apply_subst

from conftest import sample, substitutions


def test_erase_type_examples():
    # forall n, (v : Unit) -> {x : Nat | x = n}
    ty = Intersect(Nat(), S.DepFn(S.Unit(), Subset(Nat(), Eq(Nat(), Var(0), Var(2)))))
    assert erase_type(ty) == TFn(TUnit(), TFn(TUnit(), TNat()))
    assert erase_type(Subset(Nat(), Top())) == TNat()
    assert erase_type(Nat()) == TNat()
    assert erase_type(S.Precond(Top(), Nat())) == TFn(TUnit(), TNat())
    assert erase_type(S.Union(Nat(), S.Unit())) == TUnit()


def test_erase_term_examples():
    assert erase_term(S.SetIntro(Zero(), S.Rfl(Zero()))) == SZero()
    assert erase_term(S.Absurd(S.VarPr(0)), EMPTY.extend(prop(S.Bot())), Nat()) == SError(TNat())
    assert erase_term(S.LamIr(Nat(), Zero())) == SLam(TUnit(), SZero())
    assert erase_term(S.AppPr(Var(0), S.TrueIntro())) == T.SApp(T.SVar(0), SUnit())


def test_erase_ctx_examples():
    assert erase_ctx(EMPTY) == ()
    assert erase_ctx(EMPTY.extend(term(Nat()), prop(Top()))) == (TNat(), TUnit())
    assert erase_ctx(EMPTY.extend(ghost(Nat()))) == (TUnit(),)


def _term_judgments(judgments):
    for name, j in judgments:
        if j.kind == "term":
            ctx = upgrade(j.ctx) if j.mode == LOGICAL else j.ctx
            yield name, ctx, j.subject, j.classifier


def test_erasure_preserves_typing_on_every_corpus_derivation(judgments):
    count = 0
    for name, ctx, a, ty in _term_judgments(judgments):
        found = T.typecheck(erase_ctx(ctx), erase_term(a, ctx, ty))
        assert found == erase_type(ty), name
        count += 1
    assert count > 3000


def test_erasure_commutes_with_substitution(judgments):
    rng = random.Random(7)
    pairs = 0
    for name, ctx, a, ty in sample(list(_term_judgments(judgments)), 400, seed=4):
        for how, delta, sigma in substitutions(ctx, rng):
            left = erase_term(apply_subst(sigma, a), delta, apply_subst(sigma, ty))
            right = T.substitute(erase_subst(sigma, ctx, delta), erase_term(a, ctx, ty))
            assert left == right, (name, how)
            pairs += 1
    assert pairs >= 500


def test_erasure_of_stlc_image_is_stable():
    # a source term already in the simply typed fragment erases to its own shape
    src = S.Lam(Nat(), S.App(S.Succ(), Var(0)))
    once = erase_term(src)
    assert once == SLam(TNat(), T.SApp(T.SSucc(), T.SVar(0)))
    assert erase_term(S.Lam(Nat(), S.App(S.Succ(), Var(0)))) == once
