"""Telescopic contexts of computational, ghost and propositional hypotheses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagnostics import ErtError, GhostInComputationalPosition
from .syntax import Subst, apply_subst, lift

TERM = "computational"
GHOST = "ghost"
PROP = "propositional"

COMPUTATIONAL = "computational"
LOGICAL = "logical"


@dataclass(frozen=True)
class Hypothesis:
    kind: str
    payload: object

    def __post_init__(self):
        if self.kind not in (TERM, GHOST, PROP):
            raise ValueError(f"unknown hypothesis kind {self.kind!r}")


def term(ty):
    return Hypothesis(TERM, ty)


def ghost(ty):
    return Hypothesis(GHOST, ty)


def prop(ph):
    return Hypothesis(PROP, ph)


@dataclass(frozen=True)
class Context:
    """Hypotheses outermost first; de Bruijn index 0 is the last entry."""

    hyps: tuple = ()

    def __len__(self):
        return len(self.hyps)

    def __iter__(self) -> Iterator[Hypothesis]:
        return iter(self.hyps)

    def extend(self, *hs: Hypothesis) -> "Context":
        return Context(self.hyps + hs)

    def entry(self, i: int) -> Hypothesis:
        """Hypothesis for index ``i`` with its payload in its own prefix scope."""
        return self.hyps[len(self.hyps) - 1 - i]

    def prefix(self, i: int) -> "Context":
        """The context in which index ``i``'s payload is scoped."""
        return Context(self.hyps[: len(self.hyps) - 1 - i])

    def lookup(self, i: int, mode: str = COMPUTATIONAL) -> Hypothesis:
        if not 0 <= i < len(self.hyps):
            raise ErtError("Var", f"unbound variable #{i}", ctx=self)
        h = self.entry(i)
        if h.kind == GHOST:
            if mode == COMPUTATIONAL:
                raise GhostInComputationalPosition(i, ctx=self)
            h = Hypothesis(TERM, h.payload)
        return Hypothesis(h.kind, lift(h.payload, 0, i + 1))

    def has_ghosts(self) -> bool:
        return any(h.kind == GHOST for h in self.hyps)


EMPTY = Context()


def upgrade(ctx: Context) -> Context:
    """Turn every ghost hypothesis computational."""
    return Context(tuple(Hypothesis(TERM, h.payload) if h.kind == GHOST else h for h in ctx))


def is_upgrade_of(gamma: Context, delta: Context) -> bool:
    """True iff ``delta`` arises from ``gamma`` by upgrading some ghosts."""
    if len(gamma) != len(delta):
        return False
    for g, d in zip(gamma, delta):
        if g == d:
            continue
        if not (g.kind == GHOST and d.kind == TERM and g.payload == d.payload):
            return False
    return True


def insert(ctx: Context, pos: int, hyp: Hypothesis) -> Context:
    """Weaken by inserting ``hyp`` so that it becomes index ``pos``.

    ``hyp`` must be scoped in the prefix below ``pos``; later payloads are
    shifted past the new slot.
    """
    n = len(ctx)
    cut = n - pos
    out = list(ctx.hyps[:cut]) + [hyp]
    for k, h in enumerate(ctx.hyps[cut:]):
        out.append(Hypothesis(h.kind, lift(h.payload, k, 1)))
    return Context(tuple(out))


def instantiate_at(ctx: Context, pos: int, img) -> tuple:
    """Remove hypothesis ``pos`` by substituting ``img`` for it.

    ``img`` lives in the prefix scope of ``pos``.  Returns the new context
    and the substitution from ``ctx`` to it.
    """
    n = len(ctx)
    cut = n - 1 - pos
    out = list(ctx.hyps[:cut])
    for k, h in enumerate(ctx.hyps[cut + 1:]):
        sigma = Subst(lambda i, k=k: _point(i, k, img))
        out.append(Hypothesis(h.kind, apply_subst(sigma, h.payload)))
    sigma = Subst(lambda i: _point(i, pos, img))
    return Context(tuple(out)), sigma


def _point(i, k, img):
    if i < k:
        return i
    if i == k:
        return lift(img, 0, k)
    return i - 1


def render(ctx: Context) -> str:
    from .surface.printer import show_hyps

    return show_hyps(ctx)
