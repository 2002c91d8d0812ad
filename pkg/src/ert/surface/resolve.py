"""Name resolution and elaboration of surface trees into core trees.

The resolver walks binders with a core context alongside the names, so that
it can ask the checker for the few facts the concrete syntax leaves out: the
type of an unannotated equation, the carrier type of ``subst``, chain and
congruence types, and the goals that ``by beta`` must prove.  Earlier
top-level declarations are inlined where they are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .. import syntax as S
from ..checker import PROOF_RULES, TERM_RULES, Checker
from ..contexts import EMPTY, LOGICAL, Context, ghost, prop, term
from ..diagnostics import ErtError, Span
from . import sugar
from .parser import SNode, SurfaceDecl


class NeedsGoal(ErtError):
    def __init__(self, what, span=None):
        super().__init__("by-beta", f"{what} needs a known goal here; add an annotation or an explicit proof", span=span)


@dataclass(frozen=True)
class Decl:
    """A resolved top-level declaration."""

    kind: str  # "def" or "thm"
    name: str
    sig: object  # RType for defs, RProp for theorems
    body: object  # RTerm or RProof
    span: Optional[Span] = None


@dataclass(frozen=True)
class Env:
    names: tuple = ()
    kinds: tuple = ()
    ctx: Context = EMPTY

    def bind(self, name, hyp):
        return Env(self.names + (name,), self.kinds + (hyp.kind,), self.ctx.extend(hyp))

    def find(self, name):
        if name == "_":
            return None
        for i in range(len(self.names)):
            if self.names[-1 - i] == name:
                return i, self.kinds[-1 - i]
        return None


_TERM_LETS = {"pair": S.LetPair, "set": S.LetSet, "repr": S.LetRepr}
_PROOF_LETS = {"pair": S.LetPairPr, "set": S.LetSetPr, "repr": S.LetReprPr, "and": S.LetAnd, "exists": S.LetExists}
_LET_ANNOT = {"pair": S.DepPair, "set": S.Subset, "repr": S.Union, "and": S.And, "exists": S.ExistsP}


class Resolver:
    def __init__(self, checker: Checker = None, fuel: int = sugar.DEFAULT_FUEL):
        self.checker = checker or Checker()
        self.fuel = fuel
        self.globals: dict = {}
        self.failed: set = set()
        self.spans: dict = {}
        self.uses: dict = {}

    # -- bookkeeping ---------------------------------------------------

    def _mark(self, core, span):
        if span is not None and id(core) not in self.spans:
            self.spans[id(core)] = (core, span)
        return core

    def span_of(self, err: ErtError, fallback=None):
        """Best source span for an error: the innermost node with a known span."""
        if err.span is not None:
            return err.span
        for node in err.trail:
            hit = self.spans.get(id(node))
            if hit is not None and hit[0] is node:
                return hit[1]
        return fallback

    def _err(self, rule, msg, n: SNode):
        raise ErtError(rule, msg, span=n.span)

    def _infer_term(self, env, a):
        return self.checker.infer_term(env.ctx, a, LOGICAL)

    def _infer_proof(self, env, p):
        return self.checker.infer_proof(env.ctx, p)

    def _first_type(self, env, *terms):
        """Synthesized type of the first term that synthesizes one."""
        first_err = None
        for a in terms:
            try:
                return self._infer_term(env, a)
            except ErtError as err:
                first_err = first_err or err
        raise first_err

    # -- declarations --------------------------------------------------

    def declare(self, d: SurfaceDecl, check: bool = True) -> Decl:
        """Resolve (and by default check) one declaration, then make it visible."""
        if d.name in self.globals or d.name in self.failed:
            raise ErtError("Decl", f"duplicate declaration {d.name!r}", span=d.span)
        # spans of inlined declarations belong to their own sites, so start afresh
        self.spans = {}
        try:
            env = Env()
            if d.kind == "def":
                sig = self.ty(env, d.sig)
                if check:
                    self.checker.wf_type(EMPTY, sig)
                body = self.tm(env, d.body)
                if check:
                    self.checker.check_term(EMPTY, body, sig)
            else:
                sig = self.pr(env, d.sig)
                if check:
                    self.checker.wf_prop(EMPTY, sig)
                body = self.pf(env, d.body, sig)
                if check:
                    self.checker.check_proof(EMPTY, body, sig)
        except ErtError as err:
            self.failed.add(d.name)
            err.span = self.span_of(err, d.span)
            raise
        out = Decl(d.kind, d.name, sig, body, d.span)
        self.globals[d.name] = out
        self.uses[d.name] = self._use_form(out)
        return out

    def _use_form(self, d):
        """What a reference to ``d`` stands for.

        A definition whose body only checks (a lambda around a pair, say) is
        wrapped as ``(\\x : T. x) body`` so that its uses still synthesize.
        """
        if d.kind == "thm":
            return d.body
        try:
            self.checker.infer_term(EMPTY, d.body, LOGICAL)
            return d.body
        except ErtError:
            return S.App(S.Lam(d.sig, S.Var(0)), d.body)

    # -- types ---------------------------------------------------------

    def ty(self, env: Env, n: SNode):
        return self._mark(self._ty(env, n), n.span)

    def _ty(self, env, n):
        t = n.tag
        if t == "Unit":
            return S.Unit()
        if t == "Nat":
            return S.Nat()
        if t in ("Fn", "Prod", "Inter", "Union"):
            x, a, b = n.args
            a2 = self.ty(env, a)
            cls = {"Fn": S.DepFn, "Prod": S.DepPair, "Inter": S.Intersect, "Union": S.Union}[t]
            return cls(a2, self.ty(env.bind(x, term(a2)), b))
        if t == "Sum":
            return S.Coprod(self.ty(env, n[0]), self.ty(env, n[1]))
        if t == "Pre":
            u, ph, a = n.args
            ph2 = self.pr(env, ph)
            return S.Precond(ph2, self.ty(env.bind(u, prop(ph2)), a))
        if t == "Set":
            x, a, ph = n.args
            a2 = self.ty(env, a)
            return S.Subset(a2, self.pr(env.bind(x, term(a2)), ph))
        self._err("Syntax", f"expected a type, found {t}", n)

    # -- propositions --------------------------------------------------

    def pr(self, env: Env, n: SNode):
        return self._mark(self._pr(env, n), n.span)

    def _pr(self, env, n):
        t = n.tag
        if t == "Top":
            return S.Top()
        if t == "Bot":
            return S.Bot()
        if t in ("Imp", "And"):
            u, a, b = n.args
            a2 = self.pr(env, a)
            cls = S.Implies if t == "Imp" else S.And
            return cls(a2, self.pr(env.bind(u, prop(a2)), b))
        if t == "Or":
            return S.Or(self.pr(env, n[0]), self.pr(env, n[1]))
        if t in ("All", "Ex"):
            x, a, b = n.args
            a2 = self.ty(env, a)
            cls = S.ForallP if t == "All" else S.ExistsP
            return cls(a2, self.pr(env.bind(x, term(a2)), b))
        if t == "Eq":
            ann, a, b = n.args
            a2, b2 = self.tm(env, a), self.tm(env, b)
            if ann is not None:
                return S.Eq(self.ty(env, ann), a2, b2)
            try:
                ty = self._first_type(env, a2, b2)
            except ErtError as err:
                raise ErtError("Eq-WF", "cannot infer the type of this equation; write a =[A] b",
                               found=err.message, span=n.span) from err
            return S.Eq(ty, a2, b2)
        self._err("Syntax", f"expected a proposition, found {t}", n)

    # -- terms ---------------------------------------------------------

    def tm(self, env: Env, n: SNode):
        return self._mark(self._tm(env, n), n.span)

    def _tm(self, env, n):
        t = n.tag
        if t == "Name":
            return self._term_name(env, n)
        if t == "Num":
            return S.numeral(n[0])
        if t == "UnitV":
            return S.UnitVal()
        if t == "Zero":
            return S.Zero()
        if t == "Succ":
            return S.Succ()
        if t in ("Lam", "LamIr"):
            x, a, e = n.args
            a2 = self.ty(env, a)
            hyp = term(a2) if t == "Lam" else ghost(a2)
            cls = S.Lam if t == "Lam" else S.LamIr
            return cls(a2, self.tm(env.bind(x, hyp), e))
        if t == "LamPr":
            u, ph, e = n.args
            ph2 = self.pr(env, ph)
            return S.LamPr(ph2, self.tm(env.bind(u, prop(ph2)), e))
        if t == "App":
            return S.App(self.tm(env, n[0]), self.tm(env, n[1]))
        if t == "AppIr":
            return S.AppIr(self.tm(env, n[0]), self.tm(env, n[1]))
        if t == "AppPr":
            f = self.tm(env, n[0])

            def goal():
                fty = self._infer_term(env, f)
                if not isinstance(fty, S.Precond):
                    self._err("App-Pr", "expected a function with a precondition", n)
                return fty.hyp

            return S.AppPr(f, self._pf_retry(env, n[1], goal))
        if t == "Pair":
            return S.Pair(self.tm(env, n[0]), self.tm(env, n[1]))
        if t == "Repr":
            return S.ReprPair(self.tm(env, n[0]), self.tm(env, n[1]))
        if t == "SetI":
            return S.SetIntro(self.tm(env, n[0]), self.pf(env, n[1]))
        if t == "Inl":
            return S.Inl(self.tm(env, n[0]))
        if t == "Inr":
            return S.Inr(self.tm(env, n[0]))
        if t == "Absurd":
            return S.Absurd(self.pf(env, n[0], S.Bot()))
        if t == "Let":
            return self._let(env, n, proof_level=False, goal=None)
        if t == "Cases":
            x, annot, c, e, y, l, z, r = n.args
            sum_ty = self._coprod(env, annot)
            c2 = self.ty(env.bind(x, term(sum_ty)), c)
            return S.Cases(sum_ty, c2, self.tm(env, e),
                           self.tm(env.bind(y, term(sum_ty.left)), l),
                           self.tm(env.bind(z, term(sum_ty.right)), r))
        if t == "Natrec":
            x, c, e, z, k, f, s = n.args
            c2 = self.ty(env.bind(x, term(S.Nat())), c)
            senv = env.bind(k, ghost(S.Nat())).bind(f, term(c2))
            return S.Natrec(c2, self.tm(env, e), self.tm(env, z), self.tm(senv, s))
        self._err("Syntax", f"expected a term, found {t}", n)

    def _term_name(self, env, n):
        name = n[0]
        hit = env.find(name)
        if hit is not None:
            i, kind = hit
            if kind == "propositional":
                self._err("Var", f"{name!r} is a proof variable, used here as a term", n)
            return S.Var(i)
        return self._global(name, "def", n)

    def _global(self, name, kind, n):
        if name in self.failed:
            self._err("Decl", f"{name!r} refers to a declaration that failed to check", n)
        d = self.globals.get(name)
        if d is None:
            self._err("Var", f"unbound name {name!r}", n)
        if d.kind != kind:
            what = "a theorem, used here as a term" if kind == "def" else "a definition, used here as a proof"
            self._err("Var", f"{name!r} is {what}", n)
        return self.uses[name]

    def _coprod(self, env, annot):
        t = self.ty(env, annot)
        if not isinstance(t, S.Coprod):
            self._err("Cases", "the scrutinee annotation must be a sum type", annot)
        return t

    def _let(self, env, n, proof_level, goal):
        kind, x, y, annot, scrut, body, motive = n.args
        if not proof_level and kind not in _TERM_LETS:
            self._err("Syntax", f"{kind} patterns bind proofs, not terms", n)
        cls = (_PROOF_LETS if proof_level else _TERM_LETS)[kind]
        want = _LET_ANNOT[kind]
        a = self.pr(env, annot) if kind in ("and", "exists") else self.ty(env, annot)
        if not isinstance(a, want):
            self._err(TERM_RULES.get(cls) or PROOF_RULES[cls], f"the annotation must be a {want.__name__} for this pattern", annot)
        if kind == "pair":
            hs = (term(a.fst), term(a.snd))
        elif kind == "set":
            hs = (term(a.base), prop(a.pred))
        elif kind == "repr":
            hs = ((ghost if not proof_level else term)(a.dom), term(a.body))
        elif kind == "and":
            hs = (prop(a.left), prop(a.right))
        else:
            hs = (term(a.dom), prop(a.body))
        benv = env.bind(x, hs[0]).bind(y, hs[1])
        if kind in ("and", "exists"):
            s2 = self.pf(env, scrut, a)
            zhyp = prop(a)
        else:
            s2 = self.tm(env, scrut)
            zhyp = term(a)
        m2 = None
        if motive is not None:
            z, c = motive
            menv = env.bind(z, zhyp)
            m2 = self.pr(menv, c) if proof_level else self.ty(menv, c)
        if not proof_level:
            return cls(a, s2, self.tm(benv, body), m2)
        pattern = {
            "pair": S.Pair(S.Var(1), S.Var(0)), "set": S.SetIntro(S.Var(1), S.VarPr(0)),
            "repr": S.ReprPair(S.Var(1), S.Var(0)), "and": S.AndIntro(S.VarPr(1), S.VarPr(0)),
            "exists": S.Wit(S.Var(1), S.VarPr(0)),
        }[kind]
        if m2 is not None:
            bgoal = S.rebind(m2, pattern, 2)
        else:
            bgoal = S.lift(goal, 0, 2) if goal is not None else None
        return cls(a, s2, self.pf(benv, body, bgoal), m2)

    # -- proofs --------------------------------------------------------

    def pf(self, env: Env, n: SNode, goal=None):
        return self._mark(self._pf(env, n, goal), n.span)

    def _pf_retry(self, env, n, goal_fn):
        try:
            return self.pf(env, n)
        except NeedsGoal:
            return self.pf(env, n, goal_fn())

    def _pf(self, env, n, goal):
        t = n.tag
        a = n.args
        if t == "Name":
            hit = env.find(a[0])
            if hit is not None:
                i, kind = hit
                if kind != "propositional":
                    self._err("Var-Pr", f"{a[0]!r} is a term variable, used here as a proof", n)
                return S.VarPr(i)
            return self._global(a[0], "thm", n)
        if t == "TrueI":
            return S.TrueIntro()
        if t == "AbsurdPr":
            return S.AbsurdPr(self.pf(env, a[0], S.Bot()))
        if t == "Imp":
            u, ph, body = a
            ph2 = self.pr(env, ph)
            g = goal.concl if isinstance(goal, S.Implies) else None
            return S.ImpIntro(ph2, self.pf(env.bind(u, prop(ph2)), body, g))
        if t == "MP":
            f = self.pf(env, a[0])

            def hyp():
                fp = self._infer_proof(env, f)
                if not isinstance(fp, S.Implies):
                    self._err("MP", "expected a proof of an implication", n)
                return fp.hyp

            return S.ModusPonens(f, self._pf_retry(env, a[1], hyp))
        if t == "AndI":
            gl = goal.left if isinstance(goal, S.And) else None
            left = self.pf(env, a[0], gl)
            gr = S.subst0(goal.right, left) if isinstance(goal, S.And) else None
            return S.AndIntro(left, self.pf(env, a[1], gr))
        if t in ("Orl", "Orr"):
            side = None
            if isinstance(goal, S.Or):
                side = goal.left if t == "Orl" else goal.right
            cls = S.OrlIntro if t == "Orl" else S.OrrIntro
            return cls(self.pf(env, a[0], side))
        if t == "CasesOr":
            u, annot, c, scrut, v, l, w, r = a
            ann = self.pr(env, annot)
            if not isinstance(ann, S.Or):
                self._err("Cases-Or", "the annotation must be a disjunction", annot)
            c2 = self.pr(env.bind(u, prop(ann)), c)
            return S.CasesOr(ann, c2, self.pf(env, scrut, ann),
                             self.pf(env.bind(v, prop(ann.left)), l, S.rebind(c2, S.OrlIntro(S.VarPr(0)), 1)),
                             self.pf(env.bind(w, prop(ann.right)), r, S.rebind(c2, S.OrrIntro(S.VarPr(0)), 1)))
        if t == "Gen":
            x, dom, body = a
            d2 = self.ty(env, dom)
            g = goal.body if isinstance(goal, S.ForallP) else None
            return S.Gen(d2, self.pf(env.bind(x, ghost(d2)), body, g))
        if t == "Spec":
            return S.Spec(self.pf(env, a[0]), self.tm(env, a[1]))
        if t == "Wit":
            x = self.tm(env, a[0])
            g = S.subst0(goal.body, x) if isinstance(goal, S.ExistsP) else None
            return S.Wit(x, self.pf(env, a[1], g))
        if t == "Let":
            return self._let(env, n, proof_level=True, goal=goal)
        if t == "Subst":
            return self._subst(env, n, goal)
        if t == "CasesPr":
            x, annot, c, scrut, y, l, z, r = a
            sum_ty = self._coprod(env, annot)
            c2 = self.pr(env.bind(x, term(sum_ty)), c)
            return S.CasesPr(sum_ty, c2, self.tm(env, scrut),
                             self.pf(env.bind(y, term(sum_ty.left)), l, S.rebind(c2, S.Inl(S.Var(0)), 1)),
                             self.pf(env.bind(z, term(sum_ty.right)), r, S.rebind(c2, S.Inr(S.Var(0)), 1)))
        if t == "Ind":
            x, c, scrut, z, k, u, s = a
            c2 = self.pr(env.bind(x, term(S.Nat())), c)
            senv = env.bind(k, term(S.Nat())).bind(u, prop(c2))
            return S.IndPr(c2, self.tm(env, scrut),
                           self.pf(env, z, S.subst0(c2, S.Zero())),
                           self.pf(senv, s, S.rebind(c2, S.App(S.Succ(), S.Var(1)), 2)))
        if t == "Symm":
            return self._symm(env, n, goal)
        if t == "Congr":
            return self._congr(env, n, goal)
        if t == "Trans":
            return self._trans(env, n, goal)
        if t == "ByBeta":
            if not isinstance(goal, S.Eq):
                raise NeedsGoal("by beta", n.span)
            try:
                return sugar.elaborate_beta(env.ctx, goal, self.fuel, self.checker)
            except ErtError as err:
                err.span = err.span or n.span
                raise
        return self._axiom(env, n)

    def _subst(self, env, n, goal):
        x, ann, c, lhs, rhs, p, q = n.args
        a2, b2 = self.tm(env, lhs), self.tm(env, rhs)
        if ann is not None:
            ty = self.ty(env, ann)
            eq = self.pf(env, p, S.Eq(ty, a2, b2))
        else:
            try:
                ty = self._first_type(env, a2, b2)
                eq = self.pf(env, p, S.Eq(ty, a2, b2))
            except NeedsGoal:
                raise
            except ErtError:
                eq = self.pf(env, p)
                found = self._infer_proof(env, eq)
                if not isinstance(found, S.Eq):
                    self._err("Subst", "expected a proof of an equation", p)
                ty = found.ty
        c2 = self.pr(env.bind(x, term(ty)), c)
        return S.SubstPr(c2, a2, b2, eq, self.pf(env, q, S.subst0(c2, a2)))

    def _symm(self, env, n, goal):
        inner = n[0]
        if isinstance(goal, S.Eq):
            p = self.pf(env, inner, S.Eq(goal.ty, goal.rhs, goal.lhs))
            return sugar.symm(goal.ty, goal.rhs, goal.lhs, p)
        p = self.pf(env, inner)
        e = self._infer_proof(env, p)
        if not isinstance(e, S.Eq):
            self._err("Subst", "symm needs a proof of an equation", inner)
        return sugar.symm(e.ty, e.lhs, e.rhs, p)

    def _congr(self, env, n, goal):
        x, ann, body, inner = n.args
        p = self.pf(env, inner)
        e = self._infer_proof(env, p)
        if not isinstance(e, S.Eq):
            self._err("Subst", "congr needs a proof of an equation", inner)
        dom = self.ty(env, ann) if ann is not None else e.ty
        t = self.tm(env.bind(x, term(dom)), body)
        at_a = S.subst0(t, e.lhs)
        try:
            res = self._infer_term(env, at_a)
        except ErtError:
            if not isinstance(goal, S.Eq):
                raise
            res = goal.ty
        return sugar.congr(res, t, e.lhs, e.rhs, p)

    def _trans(self, env, n, goal):
        terms = [self.tm(env, x) for x in n[0]]
        try:
            ty = self._first_type(env, *terms)
        except ErtError:
            if not isinstance(goal, S.Eq):
                raise
            ty = goal.ty
        proofs = [self.pf(env, p, S.Eq(ty, terms[i], terms[i + 1])) for i, p in enumerate(n[1])]
        return sugar.desugar_trans(ty, terms, proofs)

    def _axiom(self, env, n):
        t, a = n.tag, n.args
        if t == "Rfl":
            return S.Rfl(self.tm(env, a[0]))
        if t == "Uniq":
            return S.Uniq(self.tm(env, a[0]))
        if t == "Discr":
            return S.Discr(self.tm(env, a[0]), self.tm(env, a[1]), self.pf(env, a[2]))
        if t == "BetaPr":
            u, ph, e, p = a
            ph2 = self.pr(env, ph)
            return S.BetaPr(ph2, self.tm(env.bind(u, prop(ph2)), e), self.pf(env, p, ph2))
        if t in ("BetaTy", "BetaIr"):
            x, dom, e, arg = a
            d2 = self.ty(env, dom)
            cls = S.BetaTy if t == "BetaTy" else S.BetaIr
            return cls(d2, self.tm(env.bind(x, term(d2)), e), self.tm(env, arg))
        if t in ("BetaLeft", "BetaRight"):
            x, annot, c, y, l, z, r, arg = a
            sum_ty = self._coprod(env, annot)
            c2 = self.ty(env.bind(x, term(sum_ty)), c)
            cls = S.BetaLeft if t == "BetaLeft" else S.BetaRight
            return cls(sum_ty, c2, self.tm(env.bind(y, term(sum_ty.left)), l),
                       self.tm(env.bind(z, term(sum_ty.right)), r), self.tm(env, arg))
        if t in ("BetaZero", "BetaSucc"):
            if t == "BetaZero":
                x, c, z, k, f, s = a
            else:
                x, c, e, z, k, f, s = a
            c2 = self.ty(env.bind(x, term(S.Nat())), c)
            s2 = self.tm(env.bind(k, term(S.Nat())).bind(f, term(c2)), s)
            if t == "BetaZero":
                return S.BetaZero(c2, self.tm(env, z), s2)
            return S.BetaSucc(c2, self.tm(env, e), self.tm(env, z), s2)
        if t in ("BetaPair", "BetaSet", "BetaRepr"):
            return self._beta_let(env, n)
        if t == "EtaTy":
            return S.EtaTy(self.tm(env, a[0]))
        if t == "IrPr":
            u, ph, e, p, q = a
            ph2 = self.pr(env, ph)
            return S.IrPr(ph2, self.tm(env.bind(u, prop(ph2)), e), self.pf(env, p, ph2), self.pf(env, q, ph2))
        if t == "IrTy":
            return S.IrTy(self.tm(env, a[0]), self.tm(env, a[1]), self.tm(env, a[2]))
        if t in ("EtaIr", "EtaPr"):
            f, g, i, x, p = a
            f2, g2 = self.tm(env, f), self.tm(env, g)
            fty = self._infer_term(env, f2)
            if t == "EtaIr":
                if not isinstance(fty, S.Intersect):
                    self._err("η_ir", "expected a function of intersection type", f)
                i2 = self.tm(env, i)
                goal = S.Eq(fty.body, S.AppIr(S.lift(f2), S.Var(0)), S.AppIr(S.lift(g2), S.Var(0)))
                return S.EtaIr(f2, g2, i2, self.pf(env.bind(x, term(fty.dom)), p, goal))
            if not isinstance(fty, S.Precond):
                self._err("η_pr", "expected a function of precondition type", f)
            i2 = self.pf(env, i, fty.hyp)
            goal = S.Eq(fty.body, S.AppPr(S.lift(f2), S.VarPr(0)), S.AppPr(S.lift(g2), S.VarPr(0)))
            return S.EtaPr(f2, g2, i2, self.pf(env.bind(x, prop(fty.hyp)), p, goal))
        self._err("Syntax", f"expected a proof, found {t}", n)

    def _beta_let(self, env, n):
        t = n.tag
        annot, motive, x, y, b1, b2, body = n.args
        ty = self.ty(env, annot)
        want = {"BetaPair": S.DepPair, "BetaSet": S.Subset, "BetaRepr": S.Union}[t]
        if not isinstance(ty, want):
            self._err(t, f"the annotation must be a {want.__name__}", annot)
        m2 = None
        if motive is not None:
            z, c = motive
            m2 = self.ty(env.bind(z, term(ty)), c)
        if t == "BetaPair":
            left = self.tm(env, x)
            right = self.tm(env, y)
            benv = env.bind(b1, term(ty.fst)).bind(b2, term(ty.snd))
            return S.BetaPair(ty, m2, left, right, self.tm(benv, body))
        if t == "BetaSet":
            val = self.tm(env, x)
            pf = self.pf(env, y, S.subst0(ty.pred, val))
            benv = env.bind(b1, term(ty.base)).bind(b2, prop(ty.pred))
            return S.BetaSet(ty, m2, val, pf, self.tm(benv, body))
        g = self.tm(env, x)
        w = self.tm(env, y)
        benv = env.bind(b1, term(ty.dom)).bind(b2, term(ty.body))
        return S.BetaRepr(ty, m2, g, w, self.tm(benv, body))
