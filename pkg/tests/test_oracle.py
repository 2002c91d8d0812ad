import itertools
import random

from ert import stlc as T
from ert import syntax as S
from ert.checker import Checker
from ert.contexts import EMPTY, ghost, insert, prop, term
from ert.erasure import erase_term, erase_type
from ert.gen import BETA, Gen
from ert.oracle import (
    Auditor, AuditConfig, Fuel, Oracle, candidates, ctx_member, downgrade_env, enumerate_envs, prop_holds,
    type_member,
)
from ert.stlc import ERROR, NatV, UnitV
from ert.syntax import Bot, Eq, Nat, Subset, Subst, Top, Var, Zero, apply_subst

from conftest import sample

ZERO_REFINED = Subset(Nat(), Eq(Nat(), Var(0), Zero()))


def test_downgrade_examples():
    assert downgrade_env(EMPTY, ()) == ()
    assert downgrade_env(EMPTY.extend(ghost(Nat())), (NatV(3),)) == (UnitV(),)
    assert downgrade_env(EMPTY.extend(term(Nat())), (NatV(3),)) == (NatV(3),)


def test_type_member_examples():
    assert type_member(EMPTY, Nat(), (), NatV(7)).holds
    assert type_member(EMPTY, ZERO_REFINED, (), NatV(1)).fails
    assert type_member(EMPTY, ZERO_REFINED, (), NatV(0)).holds
    for ty in (Nat(), S.Unit(), ZERO_REFINED, S.DepFn(Nat(), Nat())):
        assert type_member(EMPTY, ty, (), ERROR).fails


def test_prop_holds_examples(corpus):
    assert prop_holds(EMPTY, Top(), ()).holds
    assert prop_holds(EMPTY, Bot(), ()).fails
    zero_right = corpus["arith.ert"].get("zero_right").sig
    v = prop_holds(EMPTY, zero_right, (), Fuel(nat_bound=16))
    assert v.holds and v.note == "bounded"


def test_false_statement_fails(corpus):
    add = corpus["arith.ert"].get("add").body
    # forall n, n + 1 = n
    bad = S.ForallP(Nat(), Eq(Nat(), S.App(S.App(add, Var(0)), S.numeral(1)), Var(0)))
    v = prop_holds(EMPTY, bad, ())
    assert v.fails


def test_ctx_member_examples():
    assert ctx_member(EMPTY, ()).holds
    assert ctx_member(EMPTY.extend(term(Nat())), (NatV(3),)).holds
    assert ctx_member(EMPTY.extend(prop(Bot())), (UnitV(),)).fails


def test_enumerate_envs_examples():
    assert list(enumerate_envs(EMPTY)) == [()]
    nat = EMPTY.extend(term(Nat()))
    assert list(enumerate_envs(nat, Fuel(nat_bound=2))) == [(NatV(0),), (NatV(1),), (NatV(2),)]
    pinned = nat.extend(prop(Eq(Nat(), Var(0), Zero())))
    assert list(enumerate_envs(pinned, Fuel(nat_bound=2))) == [(NatV(0), UnitV())]


def test_function_candidates_include_identity_and_successor():
    vals, complete = candidates(T.TFn(T.TNat(), T.TNat()), Fuel())
    assert not complete
    assert any(isinstance(v, T.SuccV) for v in vals)
    assert len(vals) == 2 + Fuel().pool


def test_zero_depth_gives_unknown_not_fails():
    v = type_member(EMPTY, S.DepFn(Nat(), Nat()), (), T.SuccV(), Fuel(depth=0))
    assert v.unknown


def test_beta_conclusions_hold():
    ch, oracle = Checker(), Oracle(Fuel(nat_bound=8, depth=2))
    for name, build in BETA.items():
        g = Gen(seed=len(name))
        for _ in range(10):
            phi = ch.infer_proof(EMPTY, build(g))
            assert oracle.prop_holds(EMPTY, phi, ()).holds, name


def test_semantic_substitution_spot_check(judgments):
    """A weakened type at an extended environment means what it meant before."""
    oracle = Oracle(Fuel(nat_bound=3, depth=1))
    rng = random.Random(1)
    compared = 0
    types = [j for _, j in judgments if j.kind == "type"]
    for j in sample(types, 60, seed=3):
        pos = rng.randint(0, len(j.ctx))
        delta = insert(j.ctx, pos, term(Nat()))
        moved = apply_subst(Subst.shift(1, pos), j.subject)
        vals, _ = candidates(erase_type(j.subject), oracle.fuel)
        slot = len(delta) - 1 - pos
        for d in itertools.islice(oracle.enumerate_envs(delta), 4):
            g = d[:slot] + d[slot + 1:]
            for v in (vals or [])[:6]:
                a = oracle.type_member(delta, moved, d, v)
                b = oracle.type_member(j.ctx, j.subject, g, v)
                if a.unknown or b.unknown:
                    continue
                assert a.kind == b.kind
                compared += 1
    assert compared > 100


def test_regularity_holds_on_a_small_program():
    oracle = Oracle()
    body = S.SetIntro(Zero(), S.Rfl(Zero()))
    v = T.evaluate((), erase_term(body, EMPTY, ZERO_REFINED))
    assert oracle.type_member(EMPTY, ZERO_REFINED, (), v).holds


def test_unchecked_audit_catches_a_false_refinement():
    from ert.surface import load

    res = load("def one_is_zero : {x : Nat | x = 0} := {1, rfl 1}", check=False)
    report = Auditor(AuditConfig()).audit(res.decls, checked=False)
    assert report.fails >= 1
