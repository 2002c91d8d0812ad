import random

import pytest

from ert import syntax as S
from ert.checker import Checker
from ert.contexts import COMPUTATIONAL, EMPTY, LOGICAL, PROP, ghost, prop, term, upgrade
from ert.diagnostics import ErtError, GhostInComputationalPosition
from ert.surface import desugar_trans
from ert.syntax import App, Bot, Eq, ForallP, Lam, Nat, Rfl, Subset, Top, TrueIntro, Var, Zero

from conftest import recheck, sample, substitutions

CH = Checker()


# ----------------------------------------------------------------------
# examples


def test_wf_ctx_examples():
    CH.wf_ctx(EMPTY)
    CH.wf_ctx(EMPTY.extend(term(Nat()), prop(Eq(Nat(), Var(0), Zero()))))
    with pytest.raises(ErtError):
        CH.wf_ctx(EMPTY.extend(prop(Eq(Nat(), Var(0), Zero()))))


def test_wf_type_examples():
    CH.wf_type(EMPTY, Nat())
    CH.wf_type(EMPTY, Subset(Nat(), Eq(Nat(), Var(0), Zero())))
    with pytest.raises(ErtError):
        CH.wf_type(EMPTY, Subset(Nat(), Eq(Nat(), Var(3), Zero())))


def test_wf_prop_examples():
    CH.wf_prop(EMPTY, Top())
    CH.wf_prop(EMPTY.extend(ghost(Nat())), Eq(Nat(), Var(0), Zero()))
    CH.wf_prop(EMPTY, ForallP(Nat(), Eq(Nat(), Var(0), Var(0))))


def test_infer_term_examples():
    assert CH.infer_term(EMPTY.extend(term(Nat())), Var(0)) == Nat()
    assert CH.infer_term(EMPTY, App(Lam(Nat(), Var(0)), Zero())) == Nat()
    with pytest.raises(GhostInComputationalPosition) as err:
        CH.infer_term(EMPTY.extend(ghost(Nat())), Var(0))
    assert err.value.rule == "Var"


def test_check_term_examples():
    CH.check_term(EMPTY, S.Pair(Zero(), Zero()), S.DepPair(Nat(), Nat()))
    with pytest.raises(GhostInComputationalPosition):
        CH.check_term(EMPTY, S.LamIr(Nat(), Var(0)), S.Intersect(Nat(), Nat()))
    CH.check_term(EMPTY, S.SetIntro(Zero(), Rfl(Zero())), Subset(Nat(), Eq(Nat(), Var(0), Zero())))


def test_ghost_is_fine_in_logical_mode():
    ctx = EMPTY.extend(ghost(Nat()))
    assert CH.infer_term(ctx, Var(0), LOGICAL) == Nat()


def test_inner_ghost_binder_stays_ghost_in_logical_mode():
    # the left side of this equation is not a well-formed term anywhere
    bad = S.AppIr(S.LamIr(Nat(), Var(0)), Zero())
    with pytest.raises(GhostInComputationalPosition):
        CH.infer_term(EMPTY, bad, LOGICAL)
    with pytest.raises(GhostInComputationalPosition):
        CH.infer_proof(EMPTY, S.BetaIr(Nat(), Var(0), Zero()))


def test_infer_proof_examples():
    x = EMPTY.extend(term(Nat()))
    assert CH.infer_proof(x, Rfl(Var(0))) == Eq(Nat(), Var(0), Var(0))
    beta = CH.infer_proof(EMPTY, S.BetaTy(Nat(), Var(0), Zero()))
    assert beta == Eq(Nat(), App(Lam(Nat(), Var(0)), Zero()), Zero())
    assert CH.infer_proof(EMPTY, S.Uniq(S.UnitVal())) == Eq(S.Unit(), S.UnitVal(), S.UnitVal())


def test_check_proof_examples():
    CH.check_proof(EMPTY, S.Wit(Zero(), Rfl(Zero())), S.ExistsP(Nat(), Eq(Nat(), Var(0), Zero())))
    with pytest.raises(ErtError):
        CH.check_proof(EMPTY, TrueIntro(), Bot())


def test_zero_right_checks_by_induction(corpus):
    d = corpus["arith.ert"].get("zero_right")
    assert any(isinstance(n, S.IndPr) for n in _nodes(d.body))
    CH.check_proof(EMPTY, d.body, d.sig)
    # the statement is forall n, n + 0 = n
    assert isinstance(d.sig, ForallP) and isinstance(d.sig.body, Eq)


def _nodes(e):
    yield e
    for _, c, _ in S.children(e):
        yield from _nodes(c)


def test_type_equality_is_syntactic():
    # 0 + 0 and 0 are equal by beta but not as refinements
    ctx = EMPTY.extend(term(Subset(Nat(), Eq(Nat(), Var(0), Zero()))))
    other = Subset(Nat(), Eq(Nat(), Var(0), App(Lam(Nat(), Var(0)), Zero())))
    with pytest.raises(ErtError):
        CH.check_term(ctx, Var(0), other)


def test_derived_trans_rule():
    # a, b, c : Nat, p : a = b, q : b = c
    hyp = Eq(Nat(), Var(2), Var(1))
    ctx = EMPTY.extend(term(Nat()), term(Nat()), term(Nat()), prop(hyp), prop(hyp))
    a, b, c = Var(4), Var(3), Var(2)
    p, q = S.VarPr(1), S.VarPr(0)
    pf = desugar_trans(Nat(), [a, b, c], [p, q])
    assert pf == S.SubstPr(Eq(Nat(), Var(5), Var(0)), b, c, q, p)
    assert CH.infer_proof(ctx, pf) == Eq(Nat(), a, c)


def test_three_link_chain():
    # x0..x3 : Nat and a proof of x_k = x_(k+1) for each k
    link = prop(Eq(Nat(), Var(3), Var(2)))
    ctx = EMPTY.extend(*(term(Nat()) for _ in range(4))).extend(link, link, link)
    xs = [Var(6 - k) for k in range(4)]
    pf = desugar_trans(Nat(), xs, [S.VarPr(2), S.VarPr(1), S.VarPr(0)])
    assert CH.infer_proof(ctx, pf) == Eq(Nat(), xs[0], xs[3])


def test_single_link_chain_is_the_evidence():
    assert desugar_trans(Nat(), [Zero(), Zero()], [Rfl(Zero())]) == Rfl(Zero())


# ----------------------------------------------------------------------
# generated substitutions over corpus derivations


SUBST_SAMPLE = 700


def test_substitution_preserves_judgments(judgments):
    """Every checked judgment survives every generated substitution."""
    rng = random.Random(3)
    tried = instantiated = 0
    for name, j in sample(judgments, SUBST_SAMPLE, seed=11):
        if j.kind == "ctx":
            continue
        for how, delta, sigma in substitutions(j.ctx, rng):
            CH.wf_ctx(delta)
            try:
                recheck(j, delta, sigma)
            except ErtError as err:
                raise AssertionError(f"{how} broke {j.kind} judgment in {name}: {err}") from err
            tried += 1
            instantiated += how == "instantiate"
    assert tried >= 2000
    assert instantiated >= 200


def test_regularity_of_synthesized_classifiers(judgments):
    """Whatever synthesizes is itself well formed."""
    synthesized = 0
    for name, j in judgments:
        if j.kind == "term":
            ctx = upgrade(j.ctx) if j.mode == LOGICAL else j.ctx
            CH.wf_type(ctx, j.classifier)
            try:
                found = CH.infer_term(j.ctx, j.subject, j.mode)
            except ErtError:
                continue
            CH.wf_type(ctx, found)
            synthesized += 1
        elif j.kind == "proof":
            CH.wf_prop(j.ctx, j.classifier)
            try:
                found = CH.infer_proof(j.ctx, j.subject)
            except ErtError:
                continue
            CH.wf_prop(j.ctx, found)
            synthesized += 1
    assert synthesized > 1000


def test_inference_is_deterministic(judgments):
    for name, j in sample(judgments, 400, seed=5):
        if j.kind == "term":
            try:
                first = Checker().infer_term(j.ctx, j.subject, j.mode)
            except ErtError as err:
                with pytest.raises(type(err)):
                    Checker().infer_term(j.ctx, j.subject, j.mode)
                continue
            assert Checker().infer_term(j.ctx, j.subject, j.mode) == first
        elif j.kind == "proof":
            try:
                first = Checker().infer_proof(j.ctx, j.subject)
            except ErtError:
                continue
            assert Checker().infer_proof(j.ctx, j.subject) == first


def test_every_judgment_rechecks(judgments):
    for name, j in sample(judgments, 800, seed=2):
        recheck(j)


def test_modes_recorded(judgments):
    modes = {j.mode for _, j in judgments if j.kind == "term"}
    assert modes == {COMPUTATIONAL, LOGICAL}
    assert any(h.kind == PROP for _, j in judgments for h in j.ctx)
