import pytest
from hypothesis import given
from hypothesis import strategies as st

from ert.checker import Checker
from ert.contexts import (
    COMPUTATIONAL, EMPTY, LOGICAL, TERM, Context, ghost, is_upgrade_of, prop, term, upgrade,
)
from ert.diagnostics import GhostInComputationalPosition
from ert.syntax import Eq, Nat, Top, Unit, Var, Zero

from conftest import recheck, sample

CH = Checker()

hyps = st.one_of(
    st.builds(term, st.sampled_from([Nat(), Unit()])),
    st.builds(ghost, st.sampled_from([Nat(), Unit()])),
    st.just(prop(Top())),
)
contexts = st.lists(hyps, max_size=6).map(lambda hs: Context(tuple(hs)))


def test_upgrade_examples():
    assert upgrade(EMPTY) == EMPTY
    assert upgrade(EMPTY.extend(ghost(Nat()), prop(Top()))) == EMPTY.extend(term(Nat()), prop(Top()))


def test_is_upgrade_of_examples():
    g = EMPTY.extend(ghost(Nat()))
    assert is_upgrade_of(g, g)
    assert is_upgrade_of(g, EMPTY.extend(term(Nat())))
    assert not is_upgrade_of(EMPTY.extend(term(Nat())), g)


def test_lookup_examples():
    assert EMPTY.extend(term(Nat())).lookup(0, COMPUTATIONAL) == term(Nat())
    g = EMPTY.extend(ghost(Nat()))
    with pytest.raises(GhostInComputationalPosition):
        g.lookup(0, COMPUTATIONAL)
    assert g.lookup(0, LOGICAL) == term(Nat())


def test_lookup_shifts_payload_to_current_scope():
    ctx = EMPTY.extend(term(Nat()), prop(Eq(Nat(), Var(0), Zero())), term(Unit()))
    assert ctx.lookup(1).payload == Eq(Nat(), Var(2), Zero())


@given(contexts)
def test_upgrade_is_idempotent(ctx):
    assert upgrade(upgrade(ctx)) == upgrade(ctx)


@given(contexts)
def test_every_context_upgrades_to_its_upgrade(ctx):
    assert is_upgrade_of(ctx, upgrade(ctx))
    assert is_upgrade_of(ctx, ctx)
    assert is_upgrade_of(upgrade(ctx), ctx) == (not ctx.has_ghosts())


def _downgrade(ctx):
    """Every computational hypothesis turned ghost: the least upgraded context with the same upgrade."""
    return Context(tuple(ghost(h.payload) if h.kind == TERM else h for h in ctx))


def test_upgrade_preserves_every_corpus_judgment(judgments):
    for name, j in judgments:
        if j.kind == "ctx":
            continue
        assert is_upgrade_of(j.ctx, upgrade(j.ctx))
        recheck(j, upgrade(j.ctx))


def test_downgrade_preserves_logical_corpus_judgments(judgments):
    """Types, propositions and proofs never need a computational hypothesis."""
    tried = 0
    for name, j in judgments:
        if j.kind not in ("type", "prop", "proof"):
            continue
        low = _downgrade(j.ctx)
        assert upgrade(low) == upgrade(j.ctx)
        recheck(j, low)
        tried += 1
    assert tried > 1000


def test_downgrade_does_not_extend_to_terms(judgments):
    """Terms are excluded from downgrading: some corpus term needs its computational variable."""
    broke = 0
    for name, j in sample([x for x in judgments if x[1].kind == "term" and x[1].mode == COMPUTATIONAL], 300):
        if not any(h.kind == TERM for h in j.ctx):
            continue
        try:
            recheck(j, _downgrade(j.ctx))
        except GhostInComputationalPosition:
            broke += 1
    assert broke > 0


def test_wf_ctx_of_every_corpus_context(judgments):
    seen = set()
    for _, j in judgments:
        if id(j.ctx) not in seen:
            seen.add(id(j.ctx))
            CH.wf_ctx(j.ctx)
