"""Bidirectional checker for every judgment of the calculus.

Terms synthesize for variables, constants, abstractions, eliminations and
annotated lets; pairs, injections, set and union introductions and
``absurd`` only check.  Type equality is ``alpha_eq`` and nothing else.
Every term that occurs inside a type, a proposition or a proof is checked in
logical mode, so ghosts are usable there.  Logical mode upgrades the context
at the point of entry only: a ghost bound further inside the term (by a
ghost lambda, say) stays a ghost.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import syntax as S
from .contexts import (
    COMPUTATIONAL,
    EMPTY,
    LOGICAL,
    PROP,
    Context,
    ghost,
    prop,
    term,
    upgrade,
)
from .diagnostics import ErtError, NotSynthesizable
from .syntax import lift, lower, rebind, subst0

TERM_RULES = {
    S.Var: "Var", S.UnitVal: "Unit", S.Lam: "Lam", S.App: "App", S.Pair: "Pair",
    S.LetPair: "Let-Pair", S.Inl: "Inl", S.Inr: "Inr", S.Cases: "Cases",
    S.LamPr: "Lam-Pr", S.AppPr: "App-Pr", S.SetIntro: "Set", S.LetSet: "Let-Set",
    S.LamIr: "Lam-Ir", S.AppIr: "App-Ir", S.ReprPair: "Pair-Ir", S.LetRepr: "Let-Ir",
    S.Zero: "Zero", S.Succ: "Succ", S.Natrec: "Natrec", S.Absurd: "Absurd",
}

PROOF_RULES = {
    S.VarPr: "Var-Pr", S.TrueIntro: "True", S.AbsurdPr: "Absurd-Pr", S.ImpIntro: "Imp",
    S.ModusPonens: "MP", S.AndIntro: "And", S.LetAnd: "Let-And", S.OrlIntro: "Orl",
    S.OrrIntro: "Orr", S.CasesOr: "Cases-Or", S.Gen: "Gen", S.Spec: "Spec", S.Wit: "Wit",
    S.LetExists: "Let-Exists", S.LetPairPr: "Let-Pair-Pr", S.LetSetPr: "Let-Set-Pr",
    S.LetReprPr: "Let-Ir-Pr", S.SubstPr: "Subst", S.CasesPr: "Cases-Pr", S.IndPr: "Ind",
    S.Rfl: "Rfl", S.Uniq: "Uniq", S.Discr: "Discr", S.BetaPr: "β_pr", S.BetaTy: "β_ty",
    S.BetaIr: "β_ir", S.BetaLeft: "β_left", S.BetaRight: "β_right", S.BetaZero: "β_zero",
    S.BetaSucc: "β_succ", S.BetaPair: "β_pair", S.BetaSet: "β_set", S.BetaRepr: "β_repr",
    S.EtaTy: "η_ty", S.IrPr: "Ir-Pr", S.IrTy: "Ir-Ty", S.EtaIr: "η_ir", S.EtaPr: "η_pr",
}

TYPE_RULES = {
    S.Unit: "Unit-WF", S.Nat: "Nats-WF", S.DepFn: "Fn-WF", S.DepPair: "Pair-WF",
    S.Coprod: "Coprod-WF", S.Precond: "Pre-WF", S.Subset: "Set-WF",
    S.Intersect: "Intr-WF", S.Union: "Union-WF",
}

PROP_RULES = {
    S.Top: "True-WF", S.Bot: "False-WF", S.Implies: "Imp-WF", S.And: "And-WF",
    S.Or: "Or-WF", S.ForallP: "Univ-WF", S.ExistsP: "Exists-WF", S.Eq: "Eq-WF",
}

# Each let form: pattern built from the two new variables, and the kinds of
# the two hypotheses it introduces, as a function of the scrutinee annotation.
_PATTERNS = {
    S.LetPair: (lambda: S.Pair(S.Var(1), S.Var(0)), S.DepPair),
    S.LetSet: (lambda: S.SetIntro(S.Var(1), S.VarPr(0)), S.Subset),
    S.LetRepr: (lambda: S.ReprPair(S.Var(1), S.Var(0)), S.Union),
    S.LetPairPr: (lambda: S.Pair(S.Var(1), S.Var(0)), S.DepPair),
    S.LetSetPr: (lambda: S.SetIntro(S.Var(1), S.VarPr(0)), S.Subset),
    S.LetReprPr: (lambda: S.ReprPair(S.Var(1), S.Var(0)), S.Union),
    S.LetAnd: (lambda: S.AndIntro(S.VarPr(1), S.VarPr(0)), S.And),
    S.LetExists: (lambda: S.Wit(S.Var(1), S.VarPr(0)), S.ExistsP),
}


def rule_of(e) -> str:
    for table in (TERM_RULES, PROOF_RULES, TYPE_RULES, PROP_RULES):
        if type(e) in table:
            return table[type(e)]
    return "?"


def _fail(rule, msg, expected=None, found=None, ctx=None):
    raise ErtError(rule, msg, expected=expected, found=found, ctx=ctx)


def _want(rule, e, cls, what, ctx):
    if not isinstance(e, cls):
        _fail(rule, f"expected {what}", expected=what, found=e, ctx=ctx)
    return e


@dataclass(frozen=True)
class Judgment:
    kind: str  # ctx, type, prop, term or proof
    ctx: Context
    subject: object
    classifier: object = None
    mode: str = COMPUTATIONAL


class Checker:
    """Stateless apart from an optional log of successful judgments."""

    def __init__(self, record: bool = False):
        self.record = record
        self.log: list = []

    def _note(self, kind, ctx, subject, classifier, mode=COMPUTATIONAL):
        if self.record:
            self.log.append(Judgment(kind, ctx, subject, classifier, mode))

    # ------------------------------------------------------------------
    # contexts, types and propositions

    def wf_ctx(self, ctx: Context):
        built = EMPTY
        for h in ctx:
            if h.kind == PROP:
                self.wf_prop(built, h.payload)
            else:
                self.wf_type(built, h.payload)
            built = built.extend(h)
        self._note("ctx", ctx, None, None)

    def wf_type(self, ctx: Context, a):
        try:
            self._wf_type(ctx, a)
        except ErtError as err:
            err.trail.append(a)
            raise
        self._note("type", ctx, a, None)

    def _wf_type(self, ctx, a):
        match a:
            case S.Unit() | S.Nat():
                pass
            case S.DepFn(d, c) | S.DepPair(d, c) | S.Intersect(d, c) | S.Union(d, c):
                self.wf_type(ctx, d)
                self.wf_type(ctx.extend(term(d)), c)
            case S.Coprod(l, r):
                self.wf_type(ctx, l)
                self.wf_type(ctx, r)
            case S.Precond(h, b):
                self.wf_prop(ctx, h)
                self.wf_type(ctx.extend(prop(h)), b)
            case S.Subset(b, p):
                self.wf_type(ctx, b)
                self.wf_prop(ctx.extend(term(b)), p)
            case _:
                _fail("Type-WF", "not a type", found=a, ctx=ctx)

    def wf_prop(self, ctx: Context, p):
        try:
            self._wf_prop(ctx, p)
        except ErtError as err:
            err.trail.append(p)
            raise
        self._note("prop", ctx, p, None)

    def _wf_prop(self, ctx, p):
        match p:
            case S.Top() | S.Bot():
                pass
            case S.Implies(h, c) | S.And(h, c):
                self.wf_prop(ctx, h)
                self.wf_prop(ctx.extend(prop(h)), c)
            case S.Or(l, r):
                self.wf_prop(ctx, l)
                self.wf_prop(ctx, r)
            case S.ForallP(d, b) | S.ExistsP(d, b):
                self.wf_type(ctx, d)
                self.wf_prop(ctx.extend(term(d)), b)
            case S.Eq(ty, lhs, rhs):
                self.wf_type(ctx, ty)
                self.check_term(ctx, lhs, ty, LOGICAL)
                self.check_term(ctx, rhs, ty, LOGICAL)
            case _:
                _fail("Prop-WF", "not a proposition", found=p, ctx=ctx)

    # ------------------------------------------------------------------
    # terms

    @staticmethod
    def _enter(ctx, mode):
        if mode == LOGICAL and ctx.has_ghosts():
            ctx = upgrade(ctx)
        return ctx

    def infer_term(self, ctx: Context, a, mode: str = COMPUTATIONAL):
        ctx = self._enter(ctx, mode)
        try:
            ty = self._infer_term(ctx, a, COMPUTATIONAL)
        except ErtError as err:
            err.trail.append(a)
            raise
        self._note("term", ctx, a, ty, mode)
        return ty

    def check_term(self, ctx: Context, a, ty, mode: str = COMPUTATIONAL):
        ctx = self._enter(ctx, mode)
        try:
            self._check_term(ctx, a, ty, COMPUTATIONAL)
        except ErtError as err:
            err.trail.append(a)
            raise
        self._note("term", ctx, a, ty, mode)

    def _infer_term(self, ctx, a, mode):
        match a:
            case S.Var(i):
                h = ctx.lookup(i, mode)
                if h.kind == PROP:
                    _fail("Var", f"#{i} is a proof variable, not a term", ctx=ctx)
                return h.payload
            case S.UnitVal():
                return S.Unit()
            case S.Zero():
                return S.Nat()
            case S.Succ():
                return S.DepFn(S.Nat(), S.Nat())
            case S.Lam(ty, body):
                self.wf_type(ctx, ty)
                return S.DepFn(ty, self.infer_term(ctx.extend(term(ty)), body, mode))
            case S.LamPr(h, body):
                self.wf_prop(ctx, h)
                return S.Precond(h, self.infer_term(ctx.extend(prop(h)), body, mode))
            case S.LamIr(ty, body):
                self.wf_type(ctx, ty)
                return S.Intersect(ty, self.infer_term(ctx.extend(ghost(ty)), body, mode))
            case S.App(f, r):
                fty = _want("App", self.infer_term(ctx, f, mode), S.DepFn, "a function type", ctx)
                self.check_term(ctx, r, fty.dom, mode)
                return subst0(fty.cod, r)
            case S.AppPr(f, p):
                fty = _want("App-Pr", self.infer_term(ctx, f, mode), S.Precond, "a precondition type", ctx)
                self.check_proof(ctx, p, fty.hyp)
                return subst0(fty.body, p)
            case S.AppIr(f, x):
                fty = _want("App-Ir", self.infer_term(ctx, f, mode), S.Intersect, "an intersection type", ctx)
                self.check_term(ctx, x, fty.dom, LOGICAL)
                return subst0(fty.body, x)
            case S.LetPair() | S.LetSet() | S.LetRepr():
                return self._let_term(ctx, a, None, mode)
            case S.Cases(annot, motive, scrut, left, right):
                sum_ty = _want("Cases", annot, S.Coprod, "a sum type annotation", ctx)
                self.wf_type(ctx, sum_ty)
                self.wf_type(ctx.extend(term(sum_ty)), motive)
                self.check_term(ctx, scrut, sum_ty, mode)
                self.check_term(ctx.extend(term(sum_ty.left)), left, rebind(motive, S.Inl(S.Var(0)), 1), mode)
                self.check_term(ctx.extend(term(sum_ty.right)), right, rebind(motive, S.Inr(S.Var(0)), 1), mode)
                return subst0(motive, scrut)
            case S.Natrec(motive, scrut, z, s):
                self.wf_type(ctx.extend(term(S.Nat())), motive)
                self.check_term(ctx, scrut, S.Nat(), mode)
                self.check_term(ctx, z, subst0(motive, S.Zero()), mode)
                sctx = ctx.extend(ghost(S.Nat()), term(motive))
                self.check_term(sctx, s, rebind(motive, S.App(S.Succ(), S.Var(1)), 2), mode)
                return subst0(motive, scrut)
            case S.Pair() | S.Inl() | S.Inr() | S.SetIntro() | S.ReprPair() | S.Absurd():
                raise NotSynthesizable(TERM_RULES[type(a)], type(a).__name__)
        _fail("Term", "not a term", found=a, ctx=ctx)

    def _check_term(self, ctx, a, ty, mode):
        match a:
            case S.Pair(l, r):
                t = _want("Pair", ty, S.DepPair, "a dependent pair type", ctx)
                self.check_term(ctx, l, t.fst, mode)
                self.check_term(ctx, r, subst0(t.snd, l), mode)
                return
            case S.Inl(x):
                t = _want("Inl", ty, S.Coprod, "a sum type", ctx)
                self.check_term(ctx, x, t.left, mode)
                return
            case S.Inr(x):
                t = _want("Inr", ty, S.Coprod, "a sum type", ctx)
                self.check_term(ctx, x, t.right, mode)
                return
            case S.SetIntro(v, p):
                t = _want("Set", ty, S.Subset, "a subset type", ctx)
                self.check_term(ctx, v, t.base, mode)
                self.check_proof(ctx, p, subst0(t.pred, v))
                return
            case S.ReprPair(g, w):
                t = _want("Pair-Ir", ty, S.Union, "a union type", ctx)
                self.check_term(ctx, g, t.dom, LOGICAL)
                self.check_term(ctx, w, subst0(t.body, g), mode)
                return
            case S.Absurd(p):
                self.check_proof(ctx, p, S.Bot())
                return
            case S.Lam(dom, body) if isinstance(ty, S.DepFn):
                self._same("Lam", ty.dom, dom, ctx)
                self.check_term(ctx.extend(term(dom)), body, ty.cod, mode)
                return
            case S.LamPr(h, body) if isinstance(ty, S.Precond):
                self._same("Lam-Pr", ty.hyp, h, ctx)
                self.check_term(ctx.extend(prop(h)), body, ty.body, mode)
                return
            case S.LamIr(dom, body) if isinstance(ty, S.Intersect):
                self._same("Lam-Ir", ty.dom, dom, ctx)
                self.check_term(ctx.extend(ghost(dom)), body, ty.body, mode)
                return
            case S.LetPair() | S.LetSet() | S.LetRepr() if a.motive is None:
                self._let_term(ctx, a, ty, mode)
                return
        found = self.infer_term(ctx, a, mode)
        self._same(TERM_RULES.get(type(a), "Term"), ty, found, ctx)

    def _same(self, rule, expected, found, ctx):
        if not S.alpha_eq(expected, found):
            _fail(rule, "type mismatch" if S.category(expected) == "type" else "proposition mismatch",
                  expected=expected, found=found, ctx=ctx)

    def _let_body_ctx(self, ctx, a, rule):
        pattern, cls = _PATTERNS[type(a)]
        annot = _want(rule, a.annot, cls, f"a {cls.__name__} annotation", ctx)
        if cls is S.DepPair:
            hs = (term(annot.fst), term(annot.snd))
        elif cls is S.Subset:
            hs = (term(annot.base), prop(annot.pred))
        elif cls is S.Union:
            first = ghost if type(a) is S.LetRepr else term
            hs = (first(annot.dom), term(annot.body))
        elif cls is S.And:
            hs = (prop(annot.left), prop(annot.right))
        else:
            hs = (term(annot.dom), prop(annot.body))
        return annot, ctx.extend(*hs), pattern()

    def _let_term(self, ctx, a, expected, mode):
        rule = TERM_RULES[type(a)]
        annot, bctx, pattern = self._let_body_ctx(ctx, a, rule)
        self.wf_type(ctx, annot)
        self.check_term(ctx, a.scrut, annot, mode)
        if a.motive is not None:
            self.wf_type(ctx.extend(term(annot)), a.motive)
            self.check_term(bctx, a.body, rebind(a.motive, pattern, 2), mode)
            return subst0(a.motive, a.scrut)
        if expected is not None:
            self.check_term(bctx, a.body, lift(expected, 0, 2), mode)
            return expected
        found = self.infer_term(bctx, a.body, mode)
        res = lower(found, 2)
        if res is None:
            _fail(rule, "result type mentions the pattern variables; annotate a motive", found=found, ctx=bctx)
        return res

    # ------------------------------------------------------------------
    # proofs

    def infer_proof(self, ctx: Context, p):
        try:
            ph = self._infer_proof(ctx, p, None)
        except ErtError as err:
            err.trail.append(p)
            raise
        self._note("proof", ctx, p, ph)
        return ph

    def check_proof(self, ctx: Context, p, ph):
        try:
            self._check_proof(ctx, p, ph)
        except ErtError as err:
            err.trail.append(p)
            raise
        self._note("proof", ctx, p, ph)

    def _check_proof(self, ctx, p, ph):
        match p:
            case S.AndIntro(l, r):
                t = _want("And", ph, S.And, "a conjunction", ctx)
                self.check_proof(ctx, l, t.left)
                self.check_proof(ctx, r, subst0(t.right, l))
                return
            case S.OrlIntro(q):
                self.check_proof(ctx, q, _want("Orl", ph, S.Or, "a disjunction", ctx).left)
                return
            case S.OrrIntro(q):
                self.check_proof(ctx, q, _want("Orr", ph, S.Or, "a disjunction", ctx).right)
                return
            case S.Wit(x, q):
                t = _want("Wit", ph, S.ExistsP, "an existential", ctx)
                self.check_term(ctx, x, t.dom, LOGICAL)
                self.check_proof(ctx, q, subst0(t.body, x))
                return
            case S.AbsurdPr(q):
                self.check_proof(ctx, q, S.Bot())
                return
            case S.ImpIntro(h, body) if isinstance(ph, S.Implies):
                self._same("Imp", ph.hyp, h, ctx)
                self.check_proof(ctx.extend(prop(h)), body, ph.concl)
                return
            case S.Gen(dom, body) if isinstance(ph, S.ForallP):
                self._same("Gen", ph.dom, dom, ctx)
                self.check_proof(ctx.extend(ghost(dom)), body, ph.body)
                return
            case S.Rfl(x) if isinstance(ph, S.Eq):
                if not (S.alpha_eq(ph.lhs, x) and S.alpha_eq(ph.rhs, x)):
                    _fail("Rfl", "reflexivity proves only x = x", expected=ph, found=S.Eq(ph.ty, x, x), ctx=ctx)
                self.check_term(ctx, x, ph.ty, LOGICAL)
                return
            case (S.LetAnd() | S.LetExists() | S.LetPairPr() | S.LetSetPr() | S.LetReprPr()) if p.motive is None:
                self._let_proof(ctx, p, ph)
                return
            case (S.BetaPair() | S.BetaSet() | S.BetaRepr()) if p.motive is None and isinstance(ph, S.Eq):
                found = self._infer_proof(ctx, p, ph.ty)
                self._same(PROOF_RULES[type(p)], ph, found, ctx)
                return
        found = self.infer_proof(ctx, p)
        self._same(PROOF_RULES.get(type(p), "Proof"), ph, found, ctx)

    def _let_proof(self, ctx, p, expected):
        rule = PROOF_RULES[type(p)]
        annot, bctx, pattern = self._let_body_ctx(ctx, p, rule)
        if isinstance(p, (S.LetAnd, S.LetExists)):
            self.wf_prop(ctx, annot)
            self.check_proof(ctx, p.scrut, annot)
            zhyp = prop(annot)
        else:
            self.wf_type(ctx, annot)
            self.check_term(ctx, p.scrut, annot, LOGICAL)
            zhyp = term(annot)
        if p.motive is not None:
            self.wf_prop(ctx.extend(zhyp), p.motive)
            self.check_proof(bctx, p.body, rebind(p.motive, pattern, 2))
            return subst0(p.motive, p.scrut)
        if expected is not None:
            self.check_proof(bctx, p.body, lift(expected, 0, 2))
            return expected
        found = self.infer_proof(bctx, p.body)
        res = lower(found, 2)
        if res is None:
            _fail(rule, "result mentions the pattern variables; annotate a motive", found=found, ctx=bctx)
        return res

    def _infer_proof(self, ctx, p, hint):
        match p:
            case S.VarPr(i):
                h = ctx.lookup(i, LOGICAL)
                if h.kind != PROP:
                    _fail("Var-Pr", f"#{i} is a term variable, not a proof", ctx=ctx)
                return h.payload
            case S.TrueIntro():
                return S.Top()
            case S.ImpIntro(h, body):
                self.wf_prop(ctx, h)
                return S.Implies(h, self.infer_proof(ctx.extend(prop(h)), body))
            case S.ModusPonens(f, q):
                fp = _want("MP", self.infer_proof(ctx, f), S.Implies, "an implication", ctx)
                self.check_proof(ctx, q, fp.hyp)
                return subst0(fp.concl, q)
            case S.Gen(dom, body):
                self.wf_type(ctx, dom)
                return S.ForallP(dom, self.infer_proof(ctx.extend(ghost(dom)), body))
            case S.Spec(q, x):
                fp = _want("Spec", self.infer_proof(ctx, q), S.ForallP, "a universal", ctx)
                self.check_term(ctx, x, fp.dom, LOGICAL)
                return subst0(fp.body, x)
            case S.LetAnd() | S.LetExists() | S.LetPairPr() | S.LetSetPr() | S.LetReprPr():
                return self._let_proof(ctx, p, None)
            case S.CasesOr(annot, motive, scrut, left, right):
                t = _want("Cases-Or", annot, S.Or, "a disjunction annotation", ctx)
                self.wf_prop(ctx, t)
                self.wf_prop(ctx.extend(prop(t)), motive)
                self.check_proof(ctx, scrut, t)
                self.check_proof(ctx.extend(prop(t.left)), left, rebind(motive, S.OrlIntro(S.VarPr(0)), 1))
                self.check_proof(ctx.extend(prop(t.right)), right, rebind(motive, S.OrrIntro(S.VarPr(0)), 1))
                return subst0(motive, scrut)
            case S.CasesPr(annot, motive, scrut, left, right):
                t = _want("Cases-Pr", annot, S.Coprod, "a sum type annotation", ctx)
                self.wf_type(ctx, t)
                self.wf_prop(ctx.extend(term(t)), motive)
                self.check_term(ctx, scrut, t, LOGICAL)
                self.check_proof(ctx.extend(term(t.left)), left, rebind(motive, S.Inl(S.Var(0)), 1))
                self.check_proof(ctx.extend(term(t.right)), right, rebind(motive, S.Inr(S.Var(0)), 1))
                return subst0(motive, scrut)
            case S.SubstPr(motive, a, b, eq, base):
                ty = self._subst_type(ctx, a, b, eq)
                self.wf_prop(ctx.extend(term(ty)), motive)
                self.check_proof(ctx, base, subst0(motive, a))
                return subst0(motive, b)
            case S.IndPr(motive, scrut, z, s):
                self.wf_prop(ctx.extend(term(S.Nat())), motive)
                self.check_term(ctx, scrut, S.Nat(), LOGICAL)
                self.check_proof(ctx, z, subst0(motive, S.Zero()))
                sctx = ctx.extend(term(S.Nat()), prop(motive))
                self.check_proof(sctx, s, rebind(motive, S.App(S.Succ(), S.Var(1)), 2))
                return subst0(motive, scrut)
            case S.AndIntro() | S.OrlIntro() | S.OrrIntro() | S.Wit() | S.AbsurdPr():
                raise NotSynthesizable(PROOF_RULES[type(p)], type(p).__name__)
        return self._axiom(ctx, p, hint)

    def _subst_type(self, ctx, a, b, eq):
        try:
            found = self.infer_proof(ctx, eq)
        except NotSynthesizable:
            found = None
        if found is None:
            ty = self.infer_term(ctx, a, LOGICAL)
            self.check_term(ctx, b, ty, LOGICAL)
            self.check_proof(ctx, eq, S.Eq(ty, a, b))
            return ty
        e = _want("Subst", found, S.Eq, "an equality proof", ctx)
        self._same("Subst", S.Eq(e.ty, a, b), e, ctx)
        self.check_term(ctx, a, e.ty, LOGICAL)
        self.check_term(ctx, b, e.ty, LOGICAL)
        return e.ty

    # ------------------------------------------------------------------
    # axioms: conclusions computed from annotations, premises in logical mode

    def _axiom(self, ctx, p, hint):
        L = LOGICAL
        match p:
            case S.Rfl(x):
                ty = self.infer_term(ctx, x, L)
                return S.Eq(ty, x, x)
            case S.Uniq(x):
                self.check_term(ctx, x, S.Unit(), L)
                return S.Eq(S.Unit(), x, S.UnitVal())
            case S.Discr(x, y, q):
                return self._discr(ctx, x, y, q)
            case S.BetaPr(h, body, q):
                self.wf_prop(ctx, h)
                ty = self.infer_term(ctx.extend(prop(h)), body, L)
                self.check_proof(ctx, q, h)
                return S.Eq(subst0(ty, q), S.AppPr(S.LamPr(h, body), q), subst0(body, q))
            case S.BetaTy(dom, body, x) | S.BetaIr(dom, body, x):
                self.wf_type(ctx, dom)
                if isinstance(p, S.BetaIr):
                    # the binder stays a ghost, so the left side is well formed
                    ty = self.infer_term(upgrade(ctx).extend(ghost(dom)), body, COMPUTATIONAL)
                else:
                    ty = self.infer_term(ctx.extend(term(dom)), body, L)
                self.check_term(ctx, x, dom, L)
                lhs = S.App(S.Lam(dom, body), x) if isinstance(p, S.BetaTy) else S.AppIr(S.LamIr(dom, body), x)
                return S.Eq(subst0(ty, x), lhs, subst0(body, x))
            case S.BetaLeft(annot, motive, left, right, x) | S.BetaRight(annot, motive, left, right, x):
                rule = PROOF_RULES[type(p)]
                t = _want(rule, annot, S.Coprod, "a sum type annotation", ctx)
                self.wf_type(ctx, t)
                self.wf_type(ctx.extend(term(t)), motive)
                self.check_term(ctx.extend(term(t.left)), left, rebind(motive, S.Inl(S.Var(0)), 1), L)
                self.check_term(ctx.extend(term(t.right)), right, rebind(motive, S.Inr(S.Var(0)), 1), L)
                if isinstance(p, S.BetaLeft):
                    self.check_term(ctx, x, t.left, L)
                    inj, res = S.Inl(x), subst0(left, x)
                else:
                    self.check_term(ctx, x, t.right, L)
                    inj, res = S.Inr(x), subst0(right, x)
                return S.Eq(subst0(motive, inj), S.Cases(t, motive, inj, left, right), res)
            case S.BetaZero(motive, z, s):
                self._natrec_premises(ctx, motive, z, s)
                return S.Eq(subst0(motive, S.Zero()), S.Natrec(motive, S.Zero(), z, s), z)
            case S.BetaSucc(motive, n, z, s):
                self.check_term(ctx, n, S.Nat(), L)
                self._natrec_premises(ctx, motive, z, s)
                sn = S.App(S.Succ(), n)
                rhs = S.instantiate(s, [n, S.Natrec(motive, n, z, s)])
                return S.Eq(subst0(motive, sn), S.Natrec(motive, sn, z, s), rhs)
            case S.BetaPair() | S.BetaSet() | S.BetaRepr():
                return self._beta_let(ctx, p, hint)
            case S.EtaTy(f):
                fty = _want("η_ty", self.infer_term(ctx, f, L), S.DepFn, "a function type", ctx)
                lam = S.Lam(fty.dom, S.App(lift(f, 0, 1), S.Var(0)))
                return S.Eq(fty, lam, f)
            case S.IrPr(h, body, q1, q2):
                self.wf_prop(ctx, h)
                ty = self.infer_term(ctx.extend(prop(h)), body, L)
                base = lower(ty, 1)
                if base is None:
                    _fail("Ir-Pr", "result type depends on the proof variable", found=ty, ctx=ctx)
                self.wf_type(ctx, base)
                self.check_proof(ctx, q1, h)
                self.check_proof(ctx, q2, h)
                return S.Eq(base, subst0(body, q1), subst0(body, q2))
            case S.IrTy(f, x, y):
                fty = _want("Ir-Ty", self.infer_term(ctx, f, L), S.Intersect, "an intersection type", ctx)
                base = lower(fty.body, 1)
                if base is None:
                    _fail("Ir-Ty", "result type depends on the ghost argument", found=fty, ctx=ctx)
                self.wf_type(ctx, base)
                self.check_term(ctx, x, fty.dom, L)
                self.check_term(ctx, y, fty.dom, L)
                return S.Eq(base, S.AppIr(f, x), S.AppIr(f, y))
            case S.EtaIr(f, g, i, q):
                fty = _want("η_ir", self.infer_term(ctx, f, L), S.Intersect, "an intersection type", ctx)
                self.check_term(ctx, g, fty, L)
                self.check_term(ctx, i, fty.dom, L)
                goal = S.Eq(fty.body, S.AppIr(lift(f, 0, 1), S.Var(0)), S.AppIr(lift(g, 0, 1), S.Var(0)))
                self.check_proof(ctx.extend(term(fty.dom)), q, goal)
                return S.Eq(fty, f, g)
            case S.EtaPr(f, g, i, q):
                fty = _want("η_pr", self.infer_term(ctx, f, L), S.Precond, "a precondition type", ctx)
                self.check_term(ctx, g, fty, L)
                self.check_proof(ctx, i, fty.hyp)
                goal = S.Eq(fty.body, S.AppPr(lift(f, 0, 1), S.VarPr(0)), S.AppPr(lift(g, 0, 1), S.VarPr(0)))
                self.check_proof(ctx.extend(prop(fty.hyp)), q, goal)
                return S.Eq(fty, f, g)
        _fail("Proof", "not a proof", found=p, ctx=ctx)

    def _natrec_premises(self, ctx, motive, z, s):
        self.wf_type(ctx.extend(term(S.Nat())), motive)
        self.check_term(ctx, z, subst0(motive, S.Zero()), LOGICAL)
        # the predecessor stays a ghost, as it is in the natrec being reduced
        sctx = upgrade(ctx).extend(ghost(S.Nat()), term(motive))
        self.check_term(sctx, s, rebind(motive, S.App(S.Succ(), S.Var(1)), 2), COMPUTATIONAL)

    def _discr(self, ctx, x, y, q):
        try:
            found = self.infer_proof(ctx, q)
        except NotSynthesizable:
            found = None
        if found is not None:
            e = _want("Discr", found, S.Eq, "an equality proof", ctx)
            t = _want("Discr", e.ty, S.Coprod, "an equality at a sum type", ctx)
            self._same("Discr", S.Eq(t, S.Inl(x), S.Inr(y)), e, ctx)
        else:
            t = S.Coprod(self.infer_term(ctx, x, LOGICAL), self.infer_term(ctx, y, LOGICAL))
            self.check_proof(ctx, q, S.Eq(t, S.Inl(x), S.Inr(y)))
        self.check_term(ctx, x, t.left, LOGICAL)
        self.check_term(ctx, y, t.right, LOGICAL)
        return S.Bot()

    def _beta_let(self, ctx, p, hint):
        L = body_mode = LOGICAL
        rule = PROOF_RULES[type(p)]
        if isinstance(p, S.BetaPair):
            t = _want(rule, p.annot, S.DepPair, "a dependent pair annotation", ctx)
            a, b = p.left, p.right
            self.check_term(ctx, a, t.fst, L)
            self.check_term(ctx, b, subst0(t.snd, a), L)
            bctx = ctx.extend(term(t.fst), term(t.snd))
            intro, pattern = S.Pair(a, b), S.Pair(S.Var(1), S.Var(0))
            let = S.LetPair(t, intro, p.body, p.motive)
        elif isinstance(p, S.BetaSet):
            t = _want(rule, p.annot, S.Subset, "a subset annotation", ctx)
            a, b = p.val, p.pf
            self.check_term(ctx, a, t.base, L)
            self.check_proof(ctx, b, subst0(t.pred, a))
            bctx = ctx.extend(term(t.base), prop(t.pred))
            intro, pattern = S.SetIntro(a, b), S.SetIntro(S.Var(1), S.VarPr(0))
            let = S.LetSet(t, intro, p.body, p.motive)
        else:
            t = _want(rule, p.annot, S.Union, "a union annotation", ctx)
            a, b = p.ghost, p.wit
            self.check_term(ctx, a, t.dom, L)
            self.check_term(ctx, b, subst0(t.body, a), L)
            bctx = upgrade(ctx).extend(ghost(t.dom), term(t.body))
            body_mode = COMPUTATIONAL
            intro, pattern = S.ReprPair(a, b), S.ReprPair(S.Var(1), S.Var(0))
            let = S.LetRepr(t, intro, p.body, p.motive)
        self.wf_type(ctx, t)
        if p.motive is not None:
            self.wf_type(ctx.extend(term(t)), p.motive)
            self.check_term(bctx, p.body, rebind(p.motive, pattern, 2), body_mode)
            ty = subst0(p.motive, intro)
        elif hint is not None:
            self.check_term(bctx, p.body, lift(hint, 0, 2), body_mode)
            ty = hint
        else:
            found = self.infer_term(bctx, p.body, body_mode)
            ty = lower(found, 2)
            if ty is None:
                _fail(rule, "result type mentions the pattern variables; annotate a motive", found=found, ctx=bctx)
        return S.Eq(ty, let, S.instantiate(p.body, [a, b]))


_DEFAULT = Checker()


def wf_ctx(ctx):
    return _DEFAULT.wf_ctx(ctx)


def wf_type(ctx, a):
    return _DEFAULT.wf_type(ctx, a)


def wf_prop(ctx, p):
    return _DEFAULT.wf_prop(ctx, p)


def infer_term(ctx, a, mode=COMPUTATIONAL):
    return _DEFAULT.infer_term(ctx, a, mode)


def check_term(ctx, a, ty, mode=COMPUTATIONAL):
    return _DEFAULT.check_term(ctx, a, ty, mode)


def infer_proof(ctx, p):
    return _DEFAULT.infer_proof(ctx, p)


def check_proof(ctx, p, ph):
    return _DEFAULT.check_proof(ctx, p, ph)
