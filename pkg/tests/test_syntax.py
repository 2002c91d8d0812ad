from dataclasses import fields

from hypothesis import given, settings
from hypothesis import strategies as st

from ert import syntax as S
from ert.syntax import (
    App, Eq, ForallP, Lam, Nat, Natrec, Pair, Subst, Unit, Var, Zero, alpha_eq, apply_subst, lift,
    scope_ok, subst0,
)

# ----------------------------------------------------------------------
# random well-scoped-or-not trees over a representative slice of the grammar

types = st.recursive(
    st.sampled_from([Nat(), Unit()]),
    lambda inner: st.one_of(
        st.builds(S.DepFn, inner, inner),
        st.builds(S.DepPair, inner, inner),
        st.builds(S.Coprod, inner, inner),
    ),
    max_leaves=4,
)


def _terms(inner):
    return st.one_of(
        st.builds(Lam, types, inner),
        st.builds(App, inner, inner),
        st.builds(Pair, inner, inner),
        st.builds(S.Inl, inner),
        st.builds(S.LamIr, types, inner),
        st.builds(Natrec, types, inner, inner, inner),
        st.builds(S.SetIntro, inner, st.builds(S.Rfl, inner)),
        st.builds(S.LetPair, types, inner, inner, st.none() | types),
        st.builds(S.LamPr, st.builds(Eq, types, inner, inner), inner),
    )


terms = st.recursive(
    st.one_of(st.builds(Var, st.integers(0, 5)), st.just(Zero()), st.just(S.UnitVal()), st.just(S.Succ())),
    _terms,
    max_leaves=12,
)

props = st.one_of(
    st.builds(Eq, types, terms, terms),
    st.builds(ForallP, types, st.builds(Eq, types, terms, terms)),
)


def substs():
    """Substitutions mapping 0..5 to indices or small terms, shifting the rest."""
    img = st.one_of(st.integers(0, 6), terms)
    return st.builds(
        lambda table, k: Subst(lambda i: table[i] if i < len(table) else i + k),
        st.lists(img, min_size=6, max_size=6),
        st.integers(0, 3),
    )


# ----------------------------------------------------------------------
# a named-variable oracle for shifting


def named_lift(e, cutoff, amount):
    """Shift by renaming free names, with bound names resolved by binder identity."""
    named = _named(e, [])
    renamed = _rename(named, cutoff, amount)
    return _unname(renamed, [])


def _named(e, stack):
    # tagged tree: ("var", kind, name) or (cls, [(field child, binder names)])
    if isinstance(e, (Var, S.VarPr)):
        i = e.idx
        return ("var", type(e), stack[-1 - i] if i < len(stack) else ("free", i - len(stack)))
    kids = []
    for fname, c, b in S.children(e):
        names = [object() for _ in range(b)]
        kids.append((fname, names, _named(c, stack + names)))
    return (e, kids)


def _rename(t, cutoff, amount):
    if t[0] == "var":
        _, kind, name = t
        if isinstance(name, tuple) and name[0] == "free" and name[1] >= cutoff:
            return ("var", kind, ("free", name[1] + amount))
        return t
    e, kids = t
    return (e, [(f, names, _rename(c, cutoff, amount)) for f, names, c in kids])


def _unname(t, stack):
    if t[0] == "var":
        _, kind, name = t
        if isinstance(name, tuple) and name[0] == "free":
            return kind(len(stack) + name[1])
        return kind(len(stack) - 1 - next(k for k in range(len(stack)) if stack[k] is name))
    e, kids = t
    vals = {f: _unname(c, stack + names) for f, names, c in kids}
    return type(e)(**{f.name: vals.get(f.name, getattr(e, f.name)) for f in fields(e)})


# ----------------------------------------------------------------------
# examples


def test_lift_free_variable():
    assert lift(Var(0), 0, 1) == Var(1)


def test_lift_leaves_bound_variable():
    assert lift(Lam(Nat(), Var(0)), 0, 5) == Lam(Nat(), Var(0))


def test_lift_under_binder_matches_named_oracle():
    e = Lam(Nat(), Var(1))
    assert named_lift(e, 0, 2) == Lam(Nat(), Var(3))
    assert lift(e, 0, 2) == Lam(Nat(), Var(3))


def test_identity_substitution():
    e = Lam(Nat(), App(Var(1), Var(0)))
    assert apply_subst(Subst.identity(), e) == e


def test_single_point_substitution():
    assert subst0(App(Var(0), Var(0)), Zero()) == App(Zero(), Zero())


def test_alpha_eq_examples():
    e = Lam(Nat(), Var(0))
    assert alpha_eq(e, e)
    assert not alpha_eq(Lam(Nat(), Var(0)), Lam(Unit(), Var(0)))


def test_named_binders_collapse():
    from ert.surface import load

    res = load("def i : Nat -> Nat := \\x : Nat. x\ndef j : Nat -> Nat := \\y : Nat. y")
    assert alpha_eq(res.get("i").body, res.get("j").body)


def test_resolution_of_nested_lambda():
    from ert.surface import load

    res = load("def k : Nat -> Nat -> Nat := \\x : Nat. \\y : Nat. x")
    assert res.get("k").body == Lam(Nat(), Lam(Nat(), Var(1)))


def test_kind_error_on_proof_for_term():
    import pytest

    with pytest.raises(S.KindError):
        subst0(Var(0), S.TrueIntro())


def test_numerals_round_trip():
    for n in range(10):
        assert S.as_numeral(S.numeral(n)) == n
    assert S.as_numeral(Var(0)) is None


# ----------------------------------------------------------------------
# properties


@given(terms, st.integers(0, 4), st.integers(0, 4))
def test_lift_agrees_with_named_oracle(e, cutoff, amount):
    assert lift(e, cutoff, amount) == named_lift(e, cutoff, amount)


@given(terms, st.integers(0, 6))
def test_lift_by_zero_is_identity(e, c):
    assert lift(e, c, 0) == e


@settings(max_examples=300)
@given(st.one_of(terms, props))
def test_lift_then_substitute_cancels(e):
    assert subst0(lift(e, 0, 1), Zero()) == e
    assert subst0(lift(e, 0, 1), Var(7)) == e


@settings(max_examples=1000)
@given(terms, substs(), substs())
def test_composition_matches_sequential_application(e, sigma, tau):
    assert apply_subst(sigma, apply_subst(tau, e)) == apply_subst(tau.then(sigma), e)


@given(terms, terms, terms)
def test_alpha_eq_is_an_equivalence(a, b, c):
    assert alpha_eq(a, a)
    assert alpha_eq(a, b) == alpha_eq(b, a)
    if alpha_eq(a, b) and alpha_eq(b, c):
        assert alpha_eq(a, c)
    assert alpha_eq(a, lift(subst0(lift(a, 0, 1), Zero()), 0, 0))


@given(terms)
def test_scope_validator_counts_free_indices(e):
    free = S.free_indices(e)
    n = max(free) + 1 if free else 0
    assert scope_ok(e, n)
    if n:
        assert not scope_ok(e, n - 1)


def test_scope_ok_on_corpus(decls):
    for d in decls:
        assert scope_ok(d.sig, 0), d.name
        assert scope_ok(d.body, 0), d.name


def test_corpus_categories(decls):
    for d in decls:
        if d.kind == "def":
            assert S.category(d.sig) == "type" and S.category(d.body) == "term"
        else:
            assert S.category(d.sig) == "prop" and S.category(d.body) == "proof"
