"""Seeded random generation of simply shaped types, closed terms and beta instances.

Generated types never depend on variables, so they can be moved under any
binder unchanged.  Terms are well typed by construction; the beta instance
builders still go through the checker, and callers should too.
"""

from __future__ import annotations

import random

from . import syntax as S
from .syntax import numeral

MAX_NAT = 8


class Gen:
    """Random source for types and terms.

    ``shape`` bounds the nesting of sums, pairs and arrows; ``depth`` bounds
    term size.  Contexts are lists of ``(usable, type)`` pairs, outermost
    first; unusable slots are ghosts or proofs and are never referenced.
    """

    def __init__(self, seed=0, shape=3, depth=3, max_nat=MAX_NAT):
        self.rng = random.Random(seed)
        self.shape, self.depth, self.max_nat = shape, depth, max_nat

    def choice(self, xs):
        return self.rng.choice(xs)

    def nat(self):
        return self.rng.randint(0, self.max_nat)

    def type(self, shape=None, arrows=True):
        shape = self.shape if shape is None else shape
        base = [S.Unit(), S.Nat(), S.Nat()]
        if shape <= 0:
            return self.choice(base)
        pick = self.rng.randrange(6 if arrows else 5)
        if pick < 2:
            return self.choice(base)
        if pick == 2:
            return S.Coprod(self.type(shape - 1, arrows), self.type(shape - 1, arrows))
        if pick in (3, 4):
            return S.DepPair(self.type(shape - 1, arrows), self.type(shape - 1, arrows))
        return S.DepFn(self.type(shape - 1, False), self.type(shape - 1, False))

    def result(self):
        """A first-order type, so equality of its values is decidable."""
        return self.type(self.shape, arrows=False)

    def term(self, ty, ctx=(), depth=None):
        """A term of ``ty`` in ``ctx``."""
        depth = self.depth if depth is None else depth
        ctx = list(ctx)
        hits = [len(ctx) - 1 - k for k, (ok, t) in enumerate(ctx) if ok and t == ty]
        if hits and self.rng.random() < 0.4:
            return S.Var(self.choice(hits))
        if depth > 0 and self.rng.random() < 0.3:
            return self._elim(ty, ctx, depth - 1)
        return self._intro(ty, ctx, depth)

    def _intro(self, ty, ctx, depth):
        d = max(depth - 1, 0)
        match ty:
            case S.Unit():
                return S.UnitVal()
            case S.Nat():
                if depth > 0 and self.rng.random() < 0.3:
                    return S.App(S.Succ(), self.term(ty, ctx, d))
                return numeral(self.rng.randint(0, 3))
            case S.Coprod(l, r):
                if self.rng.random() < 0.5:
                    return S.Inl(self.term(l, ctx, d))
                return S.Inr(self.term(r, ctx, d))
            case S.DepPair(l, r):
                return S.Pair(self.term(l, ctx, d), self.term(r, ctx, d))
            case S.DepFn(dom, cod):
                if cod == S.Nat() and dom == S.Nat() and self.rng.random() < 0.2:
                    return S.Succ()
                return S.Lam(dom, self.term(cod, ctx + [(True, dom)], d))
        raise TypeError(f"cannot generate {ty!r}")

    def _elim(self, ty, ctx, depth):
        pick = self.rng.randrange(4)
        if pick == 0:
            a = self.type(1)
            body = ann(ty, self.term(ty, ctx + [(True, a)], depth))
            return S.App(S.Lam(a, body), self.term(a, ctx, depth))
        if pick == 1:
            l, r = self.type(1), self.type(1)
            return S.Cases(S.Coprod(l, r), ty, self.term(S.Coprod(l, r), ctx, depth),
                           self.term(ty, ctx + [(True, l)], depth), self.term(ty, ctx + [(True, r)], depth))
        if pick == 2:
            l, r = self.type(1), self.type(1)
            body = self.term(ty, ctx + [(True, l), (True, r)], depth)
            return S.LetPair(S.DepPair(l, r), self.term(S.DepPair(l, r), ctx, depth), body, ty)
        n = numeral(self.rng.randint(0, 3))
        return S.Natrec(ty, n, self.term(ty, ctx, depth), self.term(ty, ctx + [(False, S.Nat()), (True, ty)], depth))

    def closed(self, ty):
        return self.term(ty, ())


def ann(ty, t):
    """``(\\x:ty. x) t``: makes ``t`` synthesize ``ty`` without changing its value."""
    return S.App(S.Lam(ty, S.Var(0)), t)


# ----------------------------------------------------------------------
# beta instances, one builder per axiom


def _eq_self(ty):
    """A proposition about the bound variable that always holds."""
    return S.Eq(ty, S.Var(0), S.Var(0))


def beta_ty(g: Gen):
    a, b = g.type(2), g.result()
    return S.BetaTy(a, ann(b, g.term(b, [(True, a)])), g.closed(a))


def beta_ir(g: Gen):
    a, b = g.type(2), g.result()
    return S.BetaIr(a, ann(b, g.term(b, [(False, a)])), g.closed(a))


def beta_pr(g: Gen):
    b = g.result()
    if g.rng.random() < 0.5:
        hyp, pf = S.Top(), S.TrueIntro()
    else:
        n = numeral(g.nat())
        hyp, pf = S.Eq(S.Nat(), n, n), S.Rfl(n)
    return S.BetaPr(hyp, ann(b, g.term(b, [(False, S.Unit())])), pf)


def _beta_sum(g: Gen, left):
    l, r, c = g.type(2), g.type(2), g.result()
    lbody = g.term(c, [(True, l)])
    rbody = g.term(c, [(True, r)])
    if left:
        return S.BetaLeft(S.Coprod(l, r), c, lbody, rbody, g.closed(l))
    return S.BetaRight(S.Coprod(l, r), c, lbody, rbody, g.closed(r))


def beta_left(g: Gen):
    return _beta_sum(g, True)


def beta_right(g: Gen):
    return _beta_sum(g, False)


def beta_zero(g: Gen):
    c = g.result()
    return S.BetaZero(c, g.closed(c), g.term(c, [(False, S.Nat()), (True, c)]))


def beta_succ(g: Gen):
    c = g.result()
    return S.BetaSucc(c, numeral(g.nat()), g.closed(c), g.term(c, [(False, S.Nat()), (True, c)]))


def beta_pair(g: Gen):
    l, r, c = g.type(2), g.type(2), g.result()
    body = g.term(c, [(True, l), (True, r)])
    return S.BetaPair(S.DepPair(l, r), c, g.closed(l), g.closed(r), body)


def beta_set(g: Gen):
    a, c = g.type(2), g.result()
    v = g.closed(a)
    body = g.term(c, [(True, a), (False, S.Unit())])
    return S.BetaSet(S.Subset(a, _eq_self(a)), c, v, S.Rfl(v), body)


def beta_repr(g: Gen):
    a, b, c = g.type(2), g.type(2), g.result()
    body = g.term(c, [(False, a), (True, b)])
    return S.BetaRepr(S.Union(a, b), c, g.closed(a), g.closed(b), body)


BETA = {
    "beta_ty": beta_ty, "beta_pr": beta_pr, "beta_ir": beta_ir,
    "beta_left": beta_left, "beta_right": beta_right,
    "beta_zero": beta_zero, "beta_succ": beta_succ,
    "beta_pair": beta_pair, "beta_set": beta_set, "beta_repr": beta_repr,
}
