"""Simply typed target language with error stops.

Evaluation follows a call-by-value denotation in the exception monad:
environments hold outcomes, binders always push successful values, and every
elimination sequences its subterms with ``bind`` so an error stop propagates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .diagnostics import ErtError

# types


class SType:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class TVoid(SType):
    pass


@dataclass(frozen=True, slots=True)
class TUnit(SType):
    pass


@dataclass(frozen=True, slots=True)
class TNat(SType):
    pass


@dataclass(frozen=True, slots=True)
class TFn(SType):
    dom: SType
    cod: SType


@dataclass(frozen=True, slots=True)
class TProd(SType):
    left: SType
    right: SType


@dataclass(frozen=True, slots=True)
class TSum(SType):
    left: SType
    right: SType


# terms


class SExpr:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class SVar(SExpr):
    idx: int


@dataclass(frozen=True, slots=True)
class SUnit(SExpr):
    pass


@dataclass(frozen=True, slots=True)
class SError(SExpr):
    ty: Optional[SType] = None


@dataclass(frozen=True, slots=True)
class SLam(SExpr):
    ty: SType
    body: SExpr


@dataclass(frozen=True, slots=True)
class SApp(SExpr):
    fn: SExpr
    arg: SExpr


@dataclass(frozen=True, slots=True)
class SPair(SExpr):
    left: SExpr
    right: SExpr


@dataclass(frozen=True, slots=True)
class SLetPair(SExpr):
    scrut: SExpr
    body: SExpr


@dataclass(frozen=True, slots=True)
class SInl(SExpr):
    arg: SExpr
    ty: Optional[SType] = None


@dataclass(frozen=True, slots=True)
class SInr(SExpr):
    arg: SExpr
    ty: Optional[SType] = None


@dataclass(frozen=True, slots=True)
class SCases(SExpr):
    scrut: SExpr
    left: SExpr
    right: SExpr


@dataclass(frozen=True, slots=True)
class SZero(SExpr):
    pass


@dataclass(frozen=True, slots=True)
class SSucc(SExpr):
    pass


@dataclass(frozen=True, slots=True)
class SNatrec(SExpr):
    scrut: SExpr
    zero: SExpr
    succ: SExpr


@dataclass(frozen=True, slots=True)
class SLet(SExpr):
    bound: SExpr
    body: SExpr


_BINDS = {
    SLam: {"body": 1},
    SLetPair: {"body": 2},
    SCases: {"left": 1, "right": 1},
    SNatrec: {"succ": 1},
    SLet: {"body": 1},
}
_LEAVES = (SVar, SUnit, SError, SZero, SSucc)


def _map(t, fn):
    binds = _BINDS.get(type(t), {})
    match t:
        case SLam(ty, body):
            return SLam(ty, fn(body, 1))
        case SInl(a, ty):
            return SInl(fn(a, 0), ty)
        case SInr(a, ty):
            return SInr(fn(a, 0), ty)
    vals = [fn(getattr(t, f), binds.get(f, 0)) for f in t.__dataclass_fields__]
    return type(t)(*vals)


def shift(t: SExpr, cutoff: int = 0, amount: int = 1) -> SExpr:
    if amount == 0:
        return t
    if isinstance(t, SVar):
        return SVar(t.idx + amount) if t.idx >= cutoff else t
    if isinstance(t, _LEAVES):
        return t
    return _map(t, lambda c, b: shift(c, cutoff + b, amount))


def substitute(sigma, t: SExpr) -> SExpr:
    """Apply ``sigma``: index -> int (renaming) or SExpr."""
    if isinstance(t, SVar):
        v = sigma(t.idx)
        return SVar(v) if isinstance(v, int) else v
    if isinstance(t, _LEAVES):
        return t
    return _map(t, lambda c, b: substitute(_up(sigma, b), c))


def _up(sigma, n):
    if n == 0:
        return sigma

    def fn(i):
        if i < n:
            return i
        v = sigma(i - n)
        return v + n if isinstance(v, int) else shift(v, 0, n)

    return fn


def occurs(t: SExpr, i: int) -> bool:
    """Does index ``i`` occur free in ``t``?"""
    if isinstance(t, SVar):
        return t.idx == i
    if isinstance(t, _LEAVES):
        return False
    binds = _BINDS.get(type(t), {})
    return any(occurs(getattr(t, f), i + binds.get(f, 0))
               for f in t.__dataclass_fields__ if isinstance(getattr(t, f), SExpr))


def subst0(t: SExpr, img: SExpr) -> SExpr:
    return substitute(lambda i: img if i == 0 else i - 1, t)


# typing


def typecheck(ctx, t: SExpr) -> SType:
    """Synthesize the type of ``t``; ``ctx`` lists types outermost first."""
    ctx = tuple(ctx)
    match t:
        case SVar(i):
            if not 0 <= i < len(ctx):
                raise ErtError("stlc-var", f"unbound variable #{i}")
            return ctx[len(ctx) - 1 - i]
        case SUnit():
            return TUnit()
        case SError(ty):
            if ty is None:
                raise ErtError("stlc-error", "error stop without a type annotation")
            return ty
        case SZero():
            return TNat()
        case SSucc():
            return TFn(TNat(), TNat())
        case SLam(ty, body):
            return TFn(ty, typecheck(ctx + (ty,), body))
        case SApp(f, a):
            ft = typecheck(ctx, f)
            if not isinstance(ft, TFn):
                raise ErtError("stlc-app", "application of a non-function", found=ft)
            _expect(ctx, a, ft.dom, "stlc-app")
            return ft.cod
        case SPair(l, r):
            return TProd(typecheck(ctx, l), typecheck(ctx, r))
        case SLetPair(e, body):
            et = typecheck(ctx, e)
            if not isinstance(et, TProd):
                raise ErtError("stlc-let-pair", "destructuring a non-pair", found=et)
            return typecheck(ctx + (et.left, et.right), body)
        case SInl(a, ty) | SInr(a, ty):
            if not isinstance(ty, TSum):
                raise ErtError("stlc-inj", "injection without a sum type annotation")
            _expect(ctx, a, ty.left if isinstance(t, SInl) else ty.right, "stlc-inj")
            return ty
        case SCases(e, l, r):
            et = typecheck(ctx, e)
            if not isinstance(et, TSum):
                raise ErtError("stlc-cases", "case split on a non-sum", found=et)
            lt = typecheck(ctx + (et.left,), l)
            _expect(ctx + (et.right,), r, lt, "stlc-cases")
            return lt
        case SNatrec(e, z, s):
            _expect(ctx, e, TNat(), "stlc-natrec")
            zt = typecheck(ctx, z)
            _expect(ctx + (zt,), s, zt, "stlc-natrec")
            return zt
        case SLet(a, body):
            return typecheck(ctx + (typecheck(ctx, a),), body)
    raise ErtError("stlc", f"not an STLC term: {t!r}")


def _expect(ctx, t, ty, rule):
    found = typecheck(ctx, t)
    if found != ty:
        raise ErtError(rule, "type mismatch", expected=ty, found=found)


# values and evaluation


class Value:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class UnitV(Value):
    pass


@dataclass(frozen=True, slots=True)
class NatV(Value):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("naturals are nonnegative")


@dataclass(frozen=True, slots=True)
class InlV(Value):
    v: Value


@dataclass(frozen=True, slots=True)
class InrV(Value):
    v: Value


@dataclass(frozen=True, slots=True)
class PairV(Value):
    left: Value
    right: Value


@dataclass(frozen=True, slots=True)
class ClosV(Value):
    env: tuple
    dom: SType
    body: SExpr


@dataclass(frozen=True, slots=True)
class SuccV(Value):
    """The successor function as a first-class value."""


@dataclass(frozen=True, slots=True)
class ErrorStop:
    """The failed outcome of the exception monad."""


ERROR = ErrorStop()


def is_error(o) -> bool:
    return isinstance(o, ErrorStop)


def evaluate(env, t: SExpr):
    """Denotation of ``t`` at ``env`` (outcomes, outermost first)."""
    env = tuple(env)
    match t:
        case SVar(i):
            return env[len(env) - 1 - i]
        case SUnit():
            return UnitV()
        case SError():
            return ERROR
        case SZero():
            return NatV(0)
        case SSucc():
            return SuccV()
        case SLam(ty, body):
            return ClosV(env, ty, body)
        case SApp(f, a):
            fv = evaluate(env, f)
            if is_error(fv):
                return fv
            av = evaluate(env, a)
            if is_error(av):
                return av
            return apply(fv, av)
        case SPair(l, r):
            lv = evaluate(env, l)
            if is_error(lv):
                return lv
            rv = evaluate(env, r)
            if is_error(rv):
                return rv
            return PairV(lv, rv)
        case SLetPair(e, body):
            ev = evaluate(env, e)
            if is_error(ev):
                return ev
            return evaluate(env + (ev.left, ev.right), body)
        case SInl(a):
            av = evaluate(env, a)
            return av if is_error(av) else InlV(av)
        case SInr(a):
            av = evaluate(env, a)
            return av if is_error(av) else InrV(av)
        case SCases(e, l, r):
            ev = evaluate(env, e)
            if is_error(ev):
                return ev
            if isinstance(ev, InlV):
                return evaluate(env + (ev.v,), l)
            return evaluate(env + (ev.v,), r)
        case SNatrec(e, z, s):
            ev = evaluate(env, e)
            if is_error(ev):
                return ev
            acc = evaluate(env, z)
            for _ in range(ev.n):
                if is_error(acc):
                    return acc
                acc = evaluate(env + (acc,), s)
            return acc
        case SLet(a, body):
            av = evaluate(env, a)
            if is_error(av):
                return av
            return evaluate(env + (av,), body)
    raise ErtError("stlc-eval", f"not an STLC term: {t!r}")


def apply(f: Value, a: Value):
    if isinstance(f, SuccV):
        return NatV(a.n + 1)
    return evaluate(f.env + (a,), f.body)


# extensional equality


def values_of(ty: SType, bound: int):
    """All values of ``ty`` with naturals up to ``bound``; None at function types.

    Returns ``(values, complete)``.
    """
    match ty:
        case TVoid():
            return [], True
        case TUnit():
            return [UnitV()], True
        case TNat():
            return [NatV(n) for n in range(bound + 1)], False
        case TProd(l, r):
            lv, lc = values_of(l, bound)
            rv, rc = values_of(r, bound)
            if lv is None or rv is None:
                return None, False
            return [PairV(a, b) for a, b in itertools.product(lv, rv)], lc and rc
        case TSum(l, r):
            lv, lc = values_of(l, bound)
            rv, rc = values_of(r, bound)
            if lv is None or rv is None:
                return None, False
            return [InlV(a) for a in lv] + [InrV(b) for b in rv], lc and rc
    return None, False


def value_eq(a, b, fuel: int = 8, depth: int = 3):
    """True, False, or None (no counterexample found but the domain is infinite)."""
    if is_error(a) or is_error(b):
        return is_error(a) and is_error(b)
    match a, b:
        case UnitV(), UnitV():
            return True
        case NatV(m), NatV(n):
            return m == n
        case InlV(x), InlV(y):
            return value_eq(x, y, fuel, depth)
        case InrV(x), InrV(y):
            return value_eq(x, y, fuel, depth)
        case PairV(x1, y1), PairV(x2, y2):
            return _conj([value_eq(x1, x2, fuel, depth), value_eq(y1, y2, fuel, depth)])
    if isinstance(a, (ClosV, SuccV)) and isinstance(b, (ClosV, SuccV)):
        if a == b:
            return True
        if depth <= 0:
            return None
        dom = a.dom if isinstance(a, ClosV) else TNat()
        inputs, complete = values_of(dom, fuel)
        if inputs is None:
            return None
        verdicts = []
        for x in inputs:
            v = value_eq(apply(a, x), apply(b, x), fuel, depth - 1)
            if v is False:
                return False
            verdicts.append(v)
        result = _conj(verdicts)
        return result if complete or result is not True else None
    return False


def _conj(vs):
    if any(v is False for v in vs):
        return False
    if any(v is None for v in vs):
        return None
    return True


# printing


def show_type(ty: SType) -> str:
    match ty:
        case TVoid():
            return "Void"
        case TUnit():
            return "Unit"
        case TNat():
            return "Nat"
        case TFn(d, c):
            return f"{_atom_type(d, (TFn,))} -> {show_type(c)}"
        case TProd(l, r):
            return f"{_atom_type(l, (TFn, TSum, TProd))} * {_atom_type(r, (TFn, TSum))}"
        case TSum(l, r):
            return f"{_atom_type(l, (TFn, TSum))} + {_atom_type(r, (TFn,))}"
    return "?"


def _atom_type(ty, wrap):
    s = show_type(ty)
    return f"({s})" if isinstance(ty, wrap) else s


def show_value(v) -> str:
    match v:
        case ErrorStop():
            return "error"
        case UnitV():
            return "()"
        case NatV(n):
            return str(n)
        case InlV(x):
            return f"inl {_atom_value(x)}"
        case InrV(x):
            return f"inr {_atom_value(x)}"
        case PairV(x, y):
            return f"({show_value(x)}, {show_value(y)})"
        case ClosV() | SuccV():
            return "<closure>"
    return "?"


def _atom_value(v):
    s = show_value(v)
    return f"({s})" if isinstance(v, (InlV, InrV)) else s


def show(t: SExpr, names=()) -> str:
    """Render an STLC term with generated variable names."""
    def go(t, names, prec=0):
        match t:
            case SVar(i):
                return names[len(names) - 1 - i] if i < len(names) else f"#{i - len(names)}"
            case SUnit():
                return "()"
            case SError(ty):
                return "error" if ty is None else f"(error : {show_type(ty)})"
            case SZero():
                return "0"
            case SSucc():
                return "succ"
            case SLam(ty, body):
                x = f"x{len(names)}" if occurs(body, 0) else "_"
                s = f"\\{x}:{show_type(ty)}. {go(body, names + [x])}"
                return f"({s})" if prec > 0 else s
            case SApp(f, a):
                s = f"{go(f, names, 1)} {go(a, names, 2)}"
                return f"({s})" if prec > 1 else s
            case SPair(l, r):
                return f"({go(l, names)}, {go(r, names)})"
            case SLetPair(e, body):
                x, y = f"x{len(names)}", f"x{len(names) + 1}"
                s = f"let ({x}, {y}) = {go(e, names)} in {go(body, names + [x, y])}"
                return f"({s})" if prec > 0 else s
            case SInl(a, _):
                s = f"inl {go(a, names, 2)}"
                return f"({s})" if prec > 1 else s
            case SInr(a, _):
                s = f"inr {go(a, names, 2)}"
                return f"({s})" if prec > 1 else s
            case SCases(e, l, r):
                x = f"x{len(names)}"
                s = (f"cases {go(e, names, 2)} (inl {x} => {go(l, names + [x])})"
                     f" (inr {x} => {go(r, names + [x])})")
                return f"({s})" if prec > 0 else s
            case SNatrec(e, z, s_):
                y = f"x{len(names)}"
                s = f"natrec {go(e, names, 2)} {go(z, names, 2)} ({y} => {go(s_, names + [y])})"
                return f"({s})" if prec > 0 else s
            case SLet(a, body):
                x = f"x{len(names)}"
                s = f"let {x} = {go(a, names)} in {go(body, names + [x])}"
                return f"({s})" if prec > 0 else s
        return "?"

    return go(t, list(names))
