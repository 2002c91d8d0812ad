"""Erasure of refined types, contexts and terms to the simply typed target.

Every source binder keeps a slot in the erased context, so ghost and proof
hypotheses become unit-typed slots and indices line up.  The unary lets that
replace set and union eliminations, and the target ``natrec`` whose step binds
only the recursive result, drop one source slot each; that slot is filled with
``()`` by substitution.
"""

from __future__ import annotations

from . import stlc as T
from . import syntax as S
from .contexts import TERM, Context


def erase_type(a) -> T.SType:
    match a:
        case S.Unit():
            return T.TUnit()
        case S.Nat():
            return T.TNat()
        case S.DepFn(d, c):
            return T.TFn(erase_type(d), erase_type(c))
        case S.DepPair(d, c):
            return T.TProd(erase_type(d), erase_type(c))
        case S.Coprod(l, r):
            return T.TSum(erase_type(l), erase_type(r))
        case S.Precond(_, b) | S.Intersect(_, b):
            return T.TFn(T.TUnit(), erase_type(b))
        case S.Subset(b, _):
            return erase_type(b)
        case S.Union(_, b):
            return erase_type(b)
    raise TypeError(f"not a type: {a!r}")


def erase_ctx(ctx: Context) -> tuple:
    """Computational hypotheses keep their erased type; the rest become Unit."""
    return tuple(erase_type(h.payload) if h.kind == TERM else T.TUnit() for h in ctx)


def erase_term(a, ctx=None, ty=None) -> T.SExpr:
    """Erase ``a``.

    With the source context and expected type, error stops and injections get
    their target type annotations; without them those annotations may be
    missing, which leaves erasure total on any well-scoped tree.
    """
    env = erase_ctx(ctx) if ctx is not None else ()
    expect = erase_type(ty) if ty is not None else None
    return _erase(a, env, expect)[0]


def erase_subst(sigma: S.Subst, source: Context, target: Context):
    """Pointwise erasure of ``sigma : source -> target``.

    Ghost and proof slots are never read computationally, so they map to ().
    """
    env = erase_ctx(target)
    cache = {}

    def fn(i):
        if i not in cache:
            v = sigma(i)
            if isinstance(v, int):
                cache[i] = v
            elif i < len(source) and source.entry(i).kind == TERM and isinstance(v, S.RTerm):
                cache[i] = _erase(v, env, erase_type(source.entry(i).payload))[0]
            else:
                cache[i] = T.SUnit()
        return cache[i]

    return fn


def _drop_inner(t):
    """Term over ``G, dropped`` to term over ``G``: the dropped slot becomes ()."""
    return T.subst0(t, T.SUnit())


def _drop_second(t):
    """Term over ``G, dropped, y`` to term over ``G, y``."""
    return T.substitute(lambda i: 0 if i == 0 else (T.SUnit() if i == 1 else i - 1), t)


def _lookup(env, i):
    return env[len(env) - 1 - i] if i < len(env) else None


def _erase(a, env, expect):
    """Returns ``(term, type or None)``; ``expect`` propagates annotations."""
    match a:
        case S.Var(i):
            return T.SVar(i), _lookup(env, i)
        case S.UnitVal():
            return T.SUnit(), T.TUnit()
        case S.Zero():
            return T.SZero(), T.TNat()
        case S.Succ():
            return T.SSucc(), T.TFn(T.TNat(), T.TNat())
        case S.Lam(ty, body):
            dom = erase_type(ty)
            b, bt = _erase(body, env + (dom,), _cod(expect))
            return T.SLam(dom, b), (T.TFn(dom, bt) if bt else None)
        case S.LamPr(_, body) | S.LamIr(_, body):
            b, bt = _erase(body, env + (T.TUnit(),), _cod(expect))
            return T.SLam(T.TUnit(), b), (T.TFn(T.TUnit(), bt) if bt else None)
        case S.App(f, x):
            ft, fty = _erase(f, env, None)
            xt, _ = _erase(x, env, fty.dom if isinstance(fty, T.TFn) else None)
            return T.SApp(ft, xt), _cod(fty)
        case S.AppPr(f, _) | S.AppIr(f, _):
            ft, fty = _erase(f, env, None)
            return T.SApp(ft, T.SUnit()), _cod(fty)
        case S.Pair(l, r):
            lt, lty = _erase(l, env, expect.left if isinstance(expect, T.TProd) else None)
            rt, rty = _erase(r, env, expect.right if isinstance(expect, T.TProd) else None)
            return T.SPair(lt, rt), (T.TProd(lty, rty) if lty and rty else expect)
        case S.Inl(x) | S.Inr(x):
            left = isinstance(a, S.Inl)
            side = None
            if isinstance(expect, T.TSum):
                side = expect.left if left else expect.right
            xt, _ = _erase(x, env, side)
            ann = expect if isinstance(expect, T.TSum) else None
            return (T.SInl(xt, ann) if left else T.SInr(xt, ann)), ann
        case S.SetIntro(v, _):
            return _erase(v, env, expect)
        case S.ReprPair(_, w):
            return _erase(w, env, expect)
        case S.Absurd(_):
            return T.SError(expect), expect
        case S.LetPair(annot, scrut, body, motive):
            sty = erase_type(annot)
            st, _ = _erase(scrut, env, sty)
            out = erase_type(motive) if motive is not None else expect
            bt, bty = _erase(body, env + (sty.left, sty.right), out)
            return T.SLetPair(st, bt), bty or out
        case S.LetSet(annot, scrut, body, motive):
            sty = erase_type(annot)
            st, _ = _erase(scrut, env, sty)
            out = erase_type(motive) if motive is not None else expect
            bt, bty = _erase(body, env + (sty, T.TUnit()), out)
            return T.SLet(st, _drop_inner(bt)), bty or out
        case S.LetRepr(annot, scrut, body, motive):
            sty = erase_type(annot)
            st, _ = _erase(scrut, env, sty)
            out = erase_type(motive) if motive is not None else expect
            bt, bty = _erase(body, env + (T.TUnit(), sty), out)
            return T.SLet(st, _drop_second(bt)), bty or out
        case S.Cases(annot, motive, scrut, left, right):
            sty = erase_type(annot)
            out = erase_type(motive)
            st, _ = _erase(scrut, env, sty)
            lt, _ = _erase(left, env + (sty.left,), out)
            rt, _ = _erase(right, env + (sty.right,), out)
            return T.SCases(st, lt, rt), out
        case S.Natrec(motive, scrut, z, s):
            out = erase_type(motive)
            st, _ = _erase(scrut, env, T.TNat())
            zt, _ = _erase(z, env, out)
            s2, _ = _erase(s, env + (T.TUnit(), out), out)
            return T.SNatrec(st, zt, _drop_second(s2)), out
    raise TypeError(f"not a term: {a!r}")


def _cod(ty):
    return ty.cod if isinstance(ty, T.TFn) else None
