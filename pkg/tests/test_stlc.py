import pytest

from ert import stlc as T
from ert.contexts import EMPTY, term
from ert.diagnostics import ErtError
from ert.erasure import erase_ctx, erase_term, erase_type
from ert.gen import Gen
from ert.stlc import (
    ERROR, NatV, SApp, SError, SLam, SLet, SNatrec, SSucc, SVar, SZero, TFn, TNat, evaluate, typecheck, value_eq,
)


def nat(n):
    t = SZero()
    for _ in range(n):
        t = SApp(SSucc(), t)
    return t


def unary_add(m, n):
    """Addition by repeated successor, written independently of the interpreter."""
    out = n
    for _ in range(m):
        out += 1
    return out


def test_typecheck_examples():
    assert typecheck((), SLam(TNat(), SVar(0))) == TFn(TNat(), TNat())
    assert typecheck((), SError(TNat())) == TNat()
    with pytest.raises(ErtError):
        typecheck((), SApp(SZero(), SZero()))


def test_eval_examples():
    z, s = nat(3), SApp(SSucc(), SVar(0))
    assert evaluate((), SNatrec(SZero(), z, s)) == evaluate((), z)
    assert evaluate((), SApp(SLam(TNat(), SVar(0)), SError(TNat()))) is ERROR
    assert evaluate((), SNatrec(nat(2), z, s)) == NatV(5)


def test_value_eq_examples():
    assert value_eq(NatV(5), NatV(5)) is True
    assert value_eq(ERROR, NatV(0)) is False
    assert value_eq(ERROR, ERROR) is True


def test_value_eq_on_functions_is_pass_at_fuel():
    # \x. x + 0 against \x. x, both over Nat: no counterexample on 0..8
    plus_zero = SLam(TNat(), SNatrec(SZero(), SVar(0), SApp(SSucc(), SVar(0))))
    ident = SLam(TNat(), SVar(0))
    assert value_eq(evaluate((), plus_zero), evaluate((), ident), fuel=8) is None
    assert value_eq(evaluate((), SSucc()), evaluate((), ident), fuel=8) is False


def test_two_plus_three_through_the_corpus(corpus):
    res = corpus["arith.ert"]
    five = res.get("five")
    assert evaluate((), erase_term(five.body, EMPTY, five.sig)) == NatV(unary_add(2, 3))


def test_corpus_addition_matches_unary_oracle(corpus):
    add = corpus["arith.ert"].get("add")
    f = erase_term(add.body, EMPTY, add.sig)
    for m in range(7):
        for n in range(7):
            assert evaluate((), SApp(SApp(f, nat(m)), nat(n))) == NatV(unary_add(m, n))


def test_left_identity_through_let():
    for v in (SZero(), nat(4), SLam(TNat(), SVar(0))):
        assert evaluate((), SLet(v, SVar(0))) == evaluate((), v)
    assert evaluate((), SLet(SError(TNat()), SVar(0))) is ERROR


def test_errors_propagate_through_binders():
    assert evaluate((), SNatrec(SError(TNat()), SZero(), SVar(0))) is ERROR
    assert evaluate((), SApp(SError(TFn(TNat(), TNat())), SZero())) is ERROR


# ----------------------------------------------------------------------
# substitution, syntactic and semantic, on generated programs


def _programs(seed, count):
    """Open programs ``Gamma |- t : A`` with closed instantiations for Gamma."""
    g = Gen(seed, shape=2, depth=3)
    for _ in range(count):
        tys = [g.type(1) for _ in range(g.rng.randint(1, 3))]
        ctx = EMPTY.extend(*(term(a) for a in tys))
        result = g.result()
        body = g.term(result, [(True, a) for a in tys])
        args = [g.closed(a) for a in tys]
        yield ctx, body, result, args


def test_substitution_preserves_stlc_typing():
    for ctx, body, result, args in _programs(1, 150):
        t = erase_term(body, ctx, result)
        assert typecheck(erase_ctx(ctx), t) == erase_type(result)
        closed = [erase_term(a, EMPTY, h.payload) for a, h in zip(args, ctx)]
        k = len(closed)
        inst = T.substitute(lambda i: closed[k - 1 - i] if i < k else i - k, t)
        assert typecheck((), inst) == erase_type(result)


def test_semantic_substitution():
    """Evaluating after substituting equals evaluating in the substituted environment."""
    for ctx, body, result, args in _programs(2, 150):
        t = erase_term(body, ctx, result)
        closed = [erase_term(a, EMPTY, h.payload) for a, h in zip(args, ctx)]
        env = [evaluate((), c) for c in closed]
        k = len(closed)
        inst = T.substitute(lambda i: closed[k - 1 - i] if i < k else i - k, t)
        assert value_eq(evaluate((), inst), evaluate(env, t), fuel=8) is True


def test_evaluation_is_deterministic_and_total():
    for ctx, body, result, args in _programs(3, 100):
        closed = [erase_term(a, EMPTY, h.payload) for a, h in zip(args, ctx)]
        env = [evaluate((), c) for c in closed]
        t = erase_term(body, ctx, result)
        first = evaluate(env, t)
        assert not T.is_error(first)
        assert evaluate(env, t) == first


def test_show():
    assert T.show(SLam(TNat(), SVar(0))).startswith("\\")
    assert T.show_value(NatV(3)) == "3"
    assert T.show_type(TFn(TNat(), TNat())) == "Nat -> Nat"
