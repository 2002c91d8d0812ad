"""Bounded refined denotations, used as a test oracle.

Types denote sets of erased values, propositions denote sets of
environments.  Quantifiers range over enumerated inhabitants: naturals up to
``nat_bound``, every unit, pair and injection built from those, and a small
pool of functions.  Each unfolding of a function, intersection, precondition
or propositional quantifier spends one unit of ``depth``.

Verdicts are three-valued.  ``Holds`` with a ``bounded`` note means no
counterexample exists among the enumerated candidates but the candidate set
was truncated; ``Unknown`` means the question could not be settled at all
(depth exhausted, a domain that cannot be enumerated, or an undecided
equality between functions).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from . import stlc as T
from . import syntax as S
from .checker import Checker
from .contexts import EMPTY, GHOST, LOGICAL, PROP, Context, prop, term, upgrade
from .erasure import erase_term, erase_type
from .stlc import ERROR, UnitV, apply, evaluate, is_error

HOLDS, FAILS, UNKNOWN = "holds", "fails", "unknown"


@dataclass(frozen=True)
class Fuel:
    nat_bound: int = 8
    depth: int = 2
    pool: int = 3  # constant functions offered per function type

    def __post_init__(self):
        if self.nat_bound < 0 or self.depth < 0 or self.pool < 0:
            raise ValueError("fuel must be nonnegative")

    def deeper(self):
        return replace(self, depth=self.depth - 1)


@dataclass(frozen=True)
class Verdict:
    kind: str
    witness: object = None
    note: str = ""

    @property
    def holds(self):
        return self.kind == HOLDS

    @property
    def fails(self):
        return self.kind == FAILS

    @property
    def unknown(self):
        return self.kind == UNKNOWN


def Holds(note=""):
    return Verdict(HOLDS, None, note)


def Fails(witness, note=""):
    return Verdict(FAILS, witness, note)


def Unknown(note=""):
    return Verdict(UNKNOWN, None, note)


def _check(cond, witness):
    return Holds() if cond else Fails(witness)


def _both(first: Verdict, rest):
    """Conjunction; ``rest`` is a thunk only forced when ``first`` is not a failure."""
    if first.fails:
        return first
    second = rest()
    if second.fails or first.unknown:
        return second if second.fails else first
    if second.unknown:
        return second
    return Holds(first.note or second.note)


def _forall(cands, complete, fn, label="") -> Verdict:
    if cands is None:
        return Unknown(f"cannot enumerate {label}".strip())
    unknown = None
    bounded = not complete
    for x in cands:
        v = fn(x)
        if v.fails:
            return Fails((x, v.witness), v.note)
        if v.unknown and unknown is None:
            unknown = v
        bounded = bounded or v.note == "bounded"
    if unknown is not None:
        return unknown
    return Holds("bounded" if bounded else "")


def _exists(cands, complete, fn, label="") -> Verdict:
    if cands is None:
        return Unknown(f"cannot enumerate {label}".strip())
    unknown = None
    for x in cands:
        v = fn(x)
        if v.holds:
            return Holds(v.note)
        if v.unknown and unknown is None:
            unknown = v
    if unknown is not None:
        return unknown
    if not complete:
        return Unknown("no witness within the bound")
    return Fails("no witness")


def _quote(v):
    match v:
        case T.UnitV():
            return T.SUnit()
        case T.NatV(n):
            out = T.SZero()
            for _ in range(n):
                out = T.SApp(T.SSucc(), out)
            return out
        case T.PairV(a, b):
            qa, qb = _quote(a), _quote(b)
            return None if qa is None or qb is None else T.SPair(qa, qb)
        case T.InlV(a):
            qa = _quote(a)
            return None if qa is None else T.SInl(qa)
        case T.InrV(a):
            qa = _quote(a)
            return None if qa is None else T.SInr(qa)
    return None


def candidates(ty: T.SType, fuel: Fuel):
    """Raw values of an erased type: ``(values or None, complete)``."""
    match ty:
        case T.TFn(d, c):
            pool = []
            if d == c:
                pool.append(T.ClosV((), d, T.SVar(0)))
            if d == T.TNat() and c == T.TNat():
                pool.append(T.SuccV())
            outs, _ = candidates(c, fuel)
            for v in (outs or [])[: fuel.pool]:
                q = _quote(v)
                if q is not None:
                    pool.append(T.ClosV((), d, T.shift(q)))
            return (pool or None), False
        case T.TProd(l, r):
            lv, lc = candidates(l, fuel)
            rv, rc = candidates(r, fuel)
            if lv is None or rv is None:
                return None, False
            return [T.PairV(a, b) for a, b in itertools.product(lv, rv)], lc and rc
        case T.TSum(l, r):
            lv, lc = candidates(l, fuel)
            rv, rc = candidates(r, fuel)
            if lv is None or rv is None:
                return None, False
            return [T.InlV(a) for a in lv] + [T.InrV(b) for b in rv], lc and rc
    if ty == T.TNat() and fuel.nat_bound == 0:
        return None, False  # a zero bound switches enumeration of naturals off
    vals, complete = T.values_of(ty, fuel.nat_bound)
    return vals, complete


def _callable(v):
    return isinstance(v, (T.ClosV, T.SuccV))


class Oracle:
    """Holds the fuel and an erasure cache; every query is pure."""

    def __init__(self, fuel: Fuel = None):
        self.fuel = fuel or Fuel()
        self._erased = {}

    # -- erasure helpers -----------------------------------------------

    def _erase(self, a, ctx, ty):
        key = (id(a), id(ctx), id(ty))
        hit = self._erased.get(key)
        if hit is None or hit[0] is not a or hit[1] is not ctx or hit[2] is not ty:
            hit = (a, ctx, ty, erase_term(a, ctx, ty))
            self._erased[key] = hit
        return hit[3]

    # -- types -----------------------------------------------------------

    def type_member(self, ctx: Context, a, env, v, fuel: Fuel = None) -> Verdict:
        """Is the outcome ``v`` in the lifted denotation of ``a`` at ``env``?"""
        fuel = fuel or self.fuel
        if is_error(v):
            return Fails(v, "error outcome")
        return self.member(ctx, a, tuple(env), v, fuel)

    def member(self, ctx, a, env, v, fuel) -> Verdict:
        """Membership of a value (not an outcome)."""
        match a:
            case S.Unit():
                return _check(isinstance(v, T.UnitV), v)
            case S.Nat():
                return _check(isinstance(v, T.NatV), v)
            case S.DepFn(d, c):
                if not _callable(v):
                    return Fails(v)
                if fuel.depth <= 0:
                    return Unknown("depth")
                cands, complete = self.inhabitants(ctx, d, env, fuel)
                inner = ctx.extend(term(d))
                return _forall(cands, complete,
                               lambda x: self.type_member(inner, c, env + (x,), apply(v, x), fuel.deeper()), "domain")
            case S.DepPair(d, c):
                if not isinstance(v, T.PairV):
                    return Fails(v)
                return _both(self.member(ctx, d, env, v.left, fuel),
                             lambda: self.member(ctx.extend(term(d)), c, env + (v.left,), v.right, fuel))
            case S.Coprod(l, r):
                if isinstance(v, T.InlV):
                    return self.member(ctx, l, env, v.v, fuel)
                if isinstance(v, T.InrV):
                    return self.member(ctx, r, env, v.v, fuel)
                return Fails(v)
            case S.Precond(h, b):
                if not _callable(v):
                    return Fails(v)
                if fuel.depth <= 0:
                    return Unknown("depth")
                pre = self.prop_holds(ctx, h, env, fuel)
                if pre.fails:
                    return Holds()
                out = self.type_member(ctx.extend(prop(h)), b, env + (UnitV(),), apply(v, UnitV()), fuel.deeper())
                if pre.holds or out.holds:
                    return out
                return Unknown("precondition undecided")
            case S.Subset(b, p):
                return _both(self.member(ctx, b, env, v, fuel),
                             lambda: self.prop_holds(ctx.extend(term(b)), p, env + (v,), fuel))
            case S.Intersect(d, b):
                if not _callable(v):
                    return Fails(v)
                if fuel.depth <= 0:
                    return Unknown("depth")
                out = apply(v, UnitV())
                cands, complete = self.inhabitants(ctx, d, env, fuel)
                inner = ctx.extend(term(d))
                return _forall(cands, complete,
                               lambda x: self.type_member(inner, b, env + (x,), out, fuel.deeper()), "domain")
            case S.Union(d, b):
                cands, complete = self.inhabitants(ctx, d, env, fuel)
                inner = ctx.extend(term(d))
                return _exists(cands, complete, lambda x: self.member(inner, b, env + (x,), v, fuel), "witnesses")
        raise TypeError(f"not a type: {a!r}")

    def inhabitants(self, ctx, a, env, fuel=None):
        """Enumerated members of ``a`` at ``env``: ``(values or None, complete)``."""
        fuel = fuel or self.fuel
        raw, complete = candidates(erase_type(a), fuel)
        if raw is None:
            return None, False
        keep = []
        for v in raw:
            m = self.member(ctx, a, tuple(env), v, fuel)
            if m.holds:
                keep.append(v)
                complete = complete and m.note != "bounded"
            elif m.unknown:
                complete = False
        return keep, complete

    # -- propositions --------------------------------------------------

    def prop_holds(self, ctx: Context, p, env, fuel: Fuel = None) -> Verdict:
        fuel = fuel or self.fuel
        env = tuple(env)
        match p:
            case S.Top():
                return Holds()
            case S.Bot():
                return Fails(env)
            case S.Implies(h, c):
                hv = self.prop_holds(ctx, h, env, fuel)
                if hv.fails:
                    return Holds()
                cv = self.prop_holds(ctx.extend(prop(h)), c, env + (UnitV(),), fuel)
                if hv.holds or cv.holds:
                    return cv
                return Unknown("hypothesis undecided")
            case S.And(l, r):
                return _both(self.prop_holds(ctx, l, env, fuel),
                             lambda: self.prop_holds(ctx.extend(prop(l)), r, env + (UnitV(),), fuel))
            case S.Or(l, r):
                lv = self.prop_holds(ctx, l, env, fuel)
                if lv.holds:
                    return lv
                rv = self.prop_holds(ctx, r, env, fuel)
                if rv.holds or (lv.fails and rv.fails):
                    return rv
                return lv if lv.unknown else rv
            case S.ForallP(d, b):
                if fuel.depth <= 0:
                    return Unknown("depth")
                cands, complete = self.inhabitants(ctx, d, env, fuel)
                inner = ctx.extend(term(d))
                return _forall(cands, complete,
                               lambda x: self.prop_holds(inner, b, env + (x,), fuel.deeper()), "domain")
            case S.ExistsP(d, b):
                if fuel.depth <= 0:
                    return Unknown("depth")
                cands, complete = self.inhabitants(ctx, d, env, fuel)
                inner = ctx.extend(term(d))
                return _exists(cands, complete,
                               lambda x: self.prop_holds(inner, b, env + (x,), fuel.deeper()), "witnesses")
            case S.Eq(ty, a, b):
                up = upgrade(ctx)
                va = evaluate(env, self._erase(a, up, ty))
                vb = evaluate(env, self._erase(b, up, ty))
                same = T.value_eq(va, vb, fuel.nat_bound, fuel.depth)
                if same is None:
                    return Unknown("function equality undecided")
                return Holds() if same else Fails((va, vb))
        raise TypeError(f"not a proposition: {p!r}")

    # -- contexts ------------------------------------------------------

    def ctx_member(self, ctx: Context, env, fuel: Fuel = None) -> Verdict:
        fuel = fuel or self.fuel
        env = tuple(env)
        if len(env) != len(ctx):
            raise ValueError("environment length does not match the context")
        out = Holds()
        for i, h in enumerate(ctx):
            pre, g, v = Context(ctx.hyps[:i]), env[:i], env[i]
            if is_error(v):
                return Fails(env, "error in environment")
            if h.kind == PROP:
                here = self.prop_holds(pre, h.payload, g, fuel) if isinstance(v, T.UnitV) else Fails(v)
            else:
                here = self.member(pre, h.payload, g, v, fuel)
            out = _both(out, lambda: here)
            if out.fails:
                return Fails(env, out.note)
        return out

    def enumerate_envs(self, ctx: Context, fuel: Fuel = None):
        """Valid environments over the upgraded erased context, smallest values first."""
        fuel = fuel or self.fuel
        hyps = ctx.hyps

        def go(i, env):
            if i == len(hyps):
                yield env
                return
            h, pre = hyps[i], Context(hyps[:i])
            if h.kind == PROP:
                if self.prop_holds(pre, h.payload, env, fuel).holds:
                    yield from go(i + 1, env + (UnitV(),))
                return
            vals, _ = self.inhabitants(pre, h.payload, env, fuel)
            for v in vals or ():
                yield from go(i + 1, env + (v,))

        yield from go(0, ())


def downgrade_env(ctx: Context, env) -> tuple:
    """Forget ghost values: they become ()."""
    env = tuple(env)
    if len(env) != len(ctx):
        raise ValueError("environment length does not match the context")
    return tuple(UnitV() if h.kind == GHOST else v for h, v in zip(ctx, env))


def type_member(ctx, a, env, v, fuel=None):
    return Oracle(fuel).type_member(ctx, a, env, v)


def prop_holds(ctx, p, env, fuel=None):
    return Oracle(fuel).prop_holds(ctx, p, env)


def ctx_member(ctx, env, fuel=None):
    return Oracle(fuel).ctx_member(ctx, env)


def enumerate_envs(ctx, fuel=None):
    return Oracle(fuel).enumerate_envs(ctx)


# ----------------------------------------------------------------------
# audits


@dataclass(frozen=True)
class Finding:
    decl: str
    check: str  # convergence, regularity or validity
    subject: str
    verdict: Verdict
    envs: int


@dataclass
class Audit:
    findings: list = field(default_factory=list)

    def count(self, kind):
        return sum(1 for f in self.findings if f.verdict.kind == kind)

    @property
    def fails(self):
        return self.count(FAILS)


@dataclass(frozen=True)
class AuditConfig:
    fuel: Fuel = Fuel()
    max_envs: int = 24  # environments tried per judgment
    max_judgments: int = 400  # per declaration, after de-duplication


def _summarize(verdicts, n):
    fail = next((v for v in verdicts if v.fails), None)
    if fail is not None:
        return fail
    unk = next((v for v in verdicts if v.unknown), None)
    if unk is not None:
        return unk
    if n == 0:
        return Unknown("no valid environment")
    return Holds("bounded" if any(v.note == "bounded" for v in verdicts) else "")


class Auditor:
    """Convergence and semantic regularity over every judgment of a derivation."""

    def __init__(self, config: AuditConfig = None):
        self.config = config or AuditConfig()
        self.oracle = Oracle(self.config.fuel)

    def _envs(self, ctx):
        return list(itertools.islice(self.oracle.enumerate_envs(ctx), self.config.max_envs))

    def convergence(self, ctx, a):
        envs = self._envs(ctx)
        return _summarize([self.oracle.type_member(ctx, a, g, ERROR) for g in envs], len(envs)), len(envs)

    def regularity(self, ctx, a, ty, mode=None):
        """Evaluate the erasure at each downgraded environment and test membership."""
        if mode == LOGICAL:
            ctx = upgrade(ctx)
        envs = self._envs(ctx)
        erased = erase_term(a, ctx, ty)
        out = []
        for g in envs:
            v = evaluate(downgrade_env(ctx, g), erased)
            r = self.oracle.type_member(ctx, ty, g, v)
            out.append(Fails((g, r.witness), r.note) if r.fails else r)
        return _summarize(out, len(envs)), len(envs)

    def validity(self, ctx, p):
        envs = self._envs(ctx)
        out = [self.oracle.prop_holds(ctx, p, g) for g in envs]
        return _summarize([Fails((g, v.witness)) if v.fails else v for g, v in zip(envs, out)], len(envs)), len(envs)

    def judgments(self, decl, checked=True):
        """Judgments to audit: the whole derivation when checked, else the declaration itself."""
        if not checked:
            if decl.kind == "def":
                return [("type", EMPTY, decl.sig, None, None), ("term", EMPTY, decl.body, decl.sig, None)]
            return [("prop", EMPTY, decl.sig, None, None)]
        ch = Checker(record=True)
        if decl.kind == "def":
            ch.wf_type(EMPTY, decl.sig)
            ch.check_term(EMPTY, decl.body, decl.sig)
        else:
            ch.wf_prop(EMPTY, decl.sig)
            ch.check_proof(EMPTY, decl.body, decl.sig)
        seen, out = set(), []
        # the declaration's own judgment first, then the rest innermost-first
        for j in reversed(ch.log):
            if j.kind not in ("type", "term", "proof"):
                continue
            key = (j.kind, id(j.ctx), id(j.subject), id(j.classifier), j.mode)
            if key in seen:
                continue
            seen.add(key)
            out.append((j.kind, j.ctx, j.subject, j.classifier, j.mode))
        return out[: self.config.max_judgments]

    def audit(self, decls, checked=True, names=None) -> Audit:
        from .surface.printer import context_names, show

        report = Audit()
        for d in decls:
            if names is not None and d.name not in names:
                continue
            for kind, ctx, subj, cls, mode in self.judgments(d, checked):
                if kind == "type":
                    v, n = self.convergence(ctx, subj)
                    # convergence means the error outcome is never a member
                    v = Holds(v.note) if v.fails else (Fails(ERROR, "error accepted") if v.holds else v)
                    if n == 0:
                        v = Unknown("no valid environment")
                    check, shown = "convergence", show(subj, context_names(ctx), explicit_eq=False)
                elif kind == "term":
                    v, n = self.regularity(ctx, subj, cls, mode)
                    check, shown = "regularity", show(subj, context_names(ctx), explicit_eq=False)
                else:
                    v, n = self.validity(ctx, cls)
                    check, shown = "validity", show(cls, context_names(ctx), explicit_eq=False)
                report.findings.append(Finding(d.name, check, shown, v, n))
        return report
