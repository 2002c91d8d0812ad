"""Pretty-printer from core trees back to concrete syntax.

Binders get generated names (``x3`` for terms and ghosts, ``u3`` for proofs,
numbered by depth) so that names in scope never collide.  With
``explicit_eq`` every equation carries its type as ``a =[A] b``, which makes
the output re-parse to exactly the same core tree.
"""

from __future__ import annotations

from .. import syntax as S
from ..contexts import PROP, Context


def _paren(s, need):
    return f"({s})" if need else s


class Printer:
    def __init__(self, explicit_eq: bool = True):
        self.explicit_eq = explicit_eq

    # names -----------------------------------------------------------

    @staticmethod
    def fresh(names, base="x"):
        return f"{base}{len(names)}"

    @staticmethod
    def var(names, i):
        return names[len(names) - 1 - i] if i < len(names) else f"#{i - len(names)}"

    # types -----------------------------------------------------------

    def ty(self, a, names, lvl=0) -> str:
        n = names
        match a:
            case S.Unit():
                return "Unit"
            case S.Nat():
                return "Nat"
            case S.DepFn(d, c):
                if 0 in S.free_indices(c):
                    x = self.fresh(n)
                    s = f"({x} : {self.ty(d, n)}) -> {self.ty(c, n + (x,))}"
                else:
                    s = f"{self.ty(d, n, 1)} -> {self.ty(c, n + ('_',))}"
                return _paren(s, lvl > 0)
            case S.DepPair(d, c):
                if 0 in S.free_indices(c):
                    x = self.fresh(n)
                    s = f"({x} : {self.ty(d, n)}) * {self.ty(c, n + (x,), 2)}"
                else:
                    s = f"{self.ty(d, n, 3)} * {self.ty(c, n + ('_',), 2)}"
                return _paren(s, lvl > 2)
            case S.Coprod(l, r):
                return _paren(f"{self.ty(l, n, 1)} + {self.ty(r, n, 2)}", lvl > 1)
            case S.Precond(h, b):
                if 0 in S.free_indices(b):
                    u = self.fresh(n, "u")
                    s = f"[{u} : {self.pr(h, n)}] => {self.ty(b, n + (u,))}"
                else:
                    s = f"[{self.pr(h, n)}] => {self.ty(b, n + ('_',))}"
                return _paren(s, lvl > 0)
            case S.Subset(b, p):
                x = self.fresh(n)
                return f"{{{x} : {self.ty(b, n)} | {self.pr(p, n + (x,))}}}"
            case S.Intersect(d, b) | S.Union(d, b):
                x = self.fresh(n)
                q = "forall" if isinstance(a, S.Intersect) else "exists"
                return _paren(f"{q} {x} : {self.ty(d, n)}, {self.ty(b, n + (x,))}", lvl > 0)
        raise TypeError(f"not a type: {a!r}")

    # propositions ----------------------------------------------------

    def pr(self, p, names, lvl=0) -> str:
        n = names
        match p:
            case S.Top():
                return "top"
            case S.Bot():
                return "bot"
            case S.Implies(h, c):
                if 0 in S.free_indices(c):
                    u = self.fresh(n, "u")
                    s = f"({u} : {self.pr(h, n)}) => {self.pr(c, n + (u,))}"
                else:
                    s = f"{self.pr(h, n, 1)} => {self.pr(c, n + ('_',))}"
                return _paren(s, lvl > 0)
            case S.And(l, r):
                if 0 in S.free_indices(r):
                    u = self.fresh(n, "u")
                    s = f"({u} : {self.pr(l, n)}) /\\ {self.pr(r, n + (u,), 2)}"
                else:
                    s = f"{self.pr(l, n, 3)} /\\ {self.pr(r, n + ('_',), 2)}"
                return _paren(s, lvl > 2)
            case S.Or(l, r):
                return _paren(f"{self.pr(l, n, 1)} \\/ {self.pr(r, n, 2)}", lvl > 1)
            case S.ForallP(d, b) | S.ExistsP(d, b):
                x = self.fresh(n)
                q = "forall" if isinstance(p, S.ForallP) else "exists"
                return _paren(f"{q} {x} : {self.ty(d, n)}, {self.pr(b, n + (x,))}", lvl > 0)
            case S.Eq(ty, a, b):
                eq = f"=[{self.ty(ty, n)}]" if self.explicit_eq else "="
                return f"{self.tm(a, n, 1)} {eq} {self.tm(b, n, 1)}"
        raise TypeError(f"not a proposition: {p!r}")

    # terms -----------------------------------------------------------

    def tm(self, a, names, lvl=0) -> str:
        n = names
        k = S.as_numeral(a)
        if k is not None:
            return str(k)
        match a:
            case S.Var(i):
                return self.var(n, i)
            case S.UnitVal():
                return "()"
            case S.Succ():
                return "succ"
            case S.Lam(d, b):
                x = self.fresh(n)
                return _paren(f"\\{x} : {self.ty(d, n)}. {self.tm(b, n + (x,))}", lvl > 0)
            case S.LamPr(h, b):
                u = self.fresh(n, "u")
                return _paren(f"\\\\{u} : {self.pr(h, n)}. {self.tm(b, n + (u,))}", lvl > 0)
            case S.LamIr(d, b):
                x = self.fresh(n)
                return _paren(f"\\|{x} : {self.ty(d, n)}|. {self.tm(b, n + (x,))}", lvl > 0)
            case S.App(f, x):
                return _paren(f"{self.tm(f, n, 1)} {self.tm(x, n, 2)}", lvl > 1)
            case S.AppPr(f, p):
                return _paren(f"{self.tm(f, n, 1)} {{{self.pf(p, n)}}}", lvl > 1)
            case S.AppIr(f, x):
                return _paren(f"{self.tm(f, n, 1)} |{self.tm(x, n, 2)}|", lvl > 1)
            case S.Pair(l, r):
                return f"({self.tm(l, n)}, {self.tm(r, n)})"
            case S.ReprPair(g, w):
                return f"(|{self.tm(g, n, 2)}|, {self.tm(w, n)})"
            case S.SetIntro(v, p):
                return f"{{{self.tm(v, n)}, {self.pf(p, n)}}}"
            case S.Inl(x) | S.Inr(x):
                kw = "inl" if isinstance(a, S.Inl) else "inr"
                return _paren(f"{kw} {self.tm(x, n, 2)}", lvl > 1)
            case S.Absurd(p):
                return _paren(f"absurd {self.pf(p, n, 2)}", lvl > 1)
            case S.LetPair() | S.LetSet() | S.LetRepr():
                return _paren(self._let(a, n, self.tm, self.ty), lvl > 0)
            case S.Cases(t, c, e, l, r):
                x, y = self.fresh(n), self.fresh(n)
                s = (f"cases[{x} : {self.ty(t, n)} => {self.ty(c, n + (x,))}] {self.tm(e, n, 2)} "
                     f"(inl {y} => {self.tm(l, n + (y,))}) (inr {y} => {self.tm(r, n + (y,))})")
                return _paren(s, lvl > 1)
            case S.Natrec(c, e, z, s):
                return _paren(f"natrec{self._nat_motive(c, n, self.ty)} {self.tm(e, n, 2)} {self.tm(z, n, 2)} "
                              f"{self._succ_case(s, n, self.tm, ghost=True)}", lvl > 1)
        raise TypeError(f"not a term: {a!r}")

    def _nat_motive(self, c, n, show):
        x = self.fresh(n)
        return f"[{x} => {show(c, n + (x,))}]"

    def _succ_case(self, s, n, show, ghost):
        k = self.fresh(n)
        y = self.fresh(n + (k,), "y")
        head = f"|succ {k}|" if ghost else f"succ {k}"
        return f"({head}, {y} => {show(s, n + (k, y))})"

    _LET_SHAPES = {
        S.LetPair: ("({0}, {1})", "x", "y"), S.LetPairPr: ("({0}, {1})", "x", "y"),
        S.LetSet: ("{{{0}, {1}}}", "x", "u"), S.LetSetPr: ("{{{0}, {1}}}", "x", "u"),
        S.LetRepr: ("(|{0}|, {1})", "x", "y"), S.LetReprPr: ("(|{0}|, {1})", "x", "y"),
        S.LetAnd: ("<{0}, {1}>", "u", "v"), S.LetExists: ("<|{0}|, {1}>", "x", "u"),
    }

    def _let(self, a, n, body_show, motive_show):
        shape, b1, b2 = self._LET_SHAPES[type(a)]
        proof_scrut = isinstance(a, (S.LetAnd, S.LetExists))
        head = "let"
        if a.motive is not None:
            z = self.fresh(n, "z")
            head += f"[{z} => {motive_show(a.motive, n + (z,))}]"
        x = self.fresh(n, b1)
        y = self.fresh(n + (x,), b2)
        annot = self.pr(a.annot, n) if proof_scrut else self.ty(a.annot, n)
        scrut = self.pf(a.scrut, n) if proof_scrut else self.tm(a.scrut, n)
        return f"{head} {shape.format(x, y)} : {annot} = {scrut} in {body_show(a.body, n + (x, y))}"

    # proofs ----------------------------------------------------------

    def pf(self, p, names, lvl=0) -> str:
        n = names
        t, ty, pr, pf = self.tm, self.ty, self.pr, self.pf
        match p:
            case S.VarPr(i):
                return self.var(n, i)
            case S.TrueIntro():
                return "<>"
            case S.AbsurdPr(q):
                return _paren(f"absurd {pf(q, n, 2)}", lvl > 1)
            case S.ImpIntro(h, b):
                u = self.fresh(n, "u")
                return _paren(f"\\\\{u} : {pr(h, n)}. {pf(b, n + (u,))}", lvl > 0)
            case S.ModusPonens(f, q):
                return _paren(f"{pf(f, n, 1)} {pf(q, n, 2)}", lvl > 1)
            case S.AndIntro(l, r):
                return f"<{pf(l, n)}, {pf(r, n)}>"
            case S.OrlIntro(q) | S.OrrIntro(q):
                kw = "orl" if isinstance(p, S.OrlIntro) else "orr"
                return _paren(f"{kw} {pf(q, n, 2)}", lvl > 1)
            case S.CasesOr(annot, c, e, l, r):
                u, v = self.fresh(n, "u"), self.fresh(n, "v")
                s = (f"cases_or[{u} : {pr(annot, n, 1)} => {pr(c, n + (u,))}] {pf(e, n, 2)} "
                     f"(orl {v} => {pf(l, n + (v,))}) (orr {v} => {pf(r, n + (v,))})")
                return _paren(s, lvl > 1)
            case S.Gen(d, b):
                x = self.fresh(n)
                return _paren(f"glam |{x} : {ty(d, n)}|, {pf(b, n + (x,))}", lvl > 0)
            case S.Spec(q, x):
                return _paren(f"{pf(q, n, 1)} |{t(x, n, 2)}|", lvl > 1)
            case S.Wit(x, q):
                return f"<|{t(x, n, 2)}|, {pf(q, n)}>"
            case S.LetAnd() | S.LetExists() | S.LetPairPr() | S.LetSetPr() | S.LetReprPr():
                return _paren(self._let(p, n, pf, pr), lvl > 0)
            case S.SubstPr(c, a, b, e, q):
                x = self.fresh(n)
                s = f"subst[{x} => {pr(c, n + (x,))}][{t(a, n)}][{t(b, n)}] {pf(e, n, 2)} {pf(q, n, 2)}"
                return _paren(s, lvl > 1)
            case S.CasesPr(annot, c, e, l, r):
                x, y = self.fresh(n), self.fresh(n)
                s = (f"cases[{x} : {ty(annot, n)} => {pr(c, n + (x,))}] {t(e, n, 2)} "
                     f"(inl {y} => {pf(l, n + (y,))}) (inr {y} => {pf(r, n + (y,))})")
                return _paren(s, lvl > 1)
            case S.IndPr(c, e, z, s):
                return _paren(f"ind{self._nat_motive(c, n, pr)} {t(e, n, 2)} {pf(z, n, 2)} "
                              f"{self._succ_case(s, n, pf, ghost=False)}", lvl > 1)
        return _paren(self._axiom(p, n), lvl > 1)

    def _axiom(self, p, n):
        t, ty, pf = self.tm, self.ty, self.pf
        match p:
            case S.Rfl(x):
                return f"rfl {t(x, n, 2)}"
            case S.Uniq(x):
                return f"uniq {t(x, n, 2)}"
            case S.Discr(x, y, q):
                return f"discr {t(x, n, 2)} {t(y, n, 2)} {pf(q, n, 2)}"
            case S.BetaPr(h, b, q):
                return f"beta_pr {t(S.LamPr(h, b), n, 2)} {pf(q, n, 2)}"
            case S.BetaTy(d, b, x) | S.BetaIr(d, b, x):
                if isinstance(p, S.BetaTy):
                    return f"beta_ty {t(S.Lam(d, b), n, 2)} {t(x, n, 2)}"
                return f"beta_ir {t(S.LamIr(d, b), n, 2)} {t(x, n, 2)}"
            case S.BetaLeft(annot, c, l, r, x) | S.BetaRight(annot, c, l, r, x):
                kw = "beta_left" if isinstance(p, S.BetaLeft) else "beta_right"
                v, y = self.fresh(n), self.fresh(n)
                return (f"{kw}[{v} : {ty(annot, n)} => {ty(c, n + (v,))}] (inl {y} => {t(l, n + (y,))}) "
                        f"(inr {y} => {t(r, n + (y,))}) {t(x, n, 2)}")
            case S.BetaZero(c, z, s):
                return f"beta_zero{self._nat_motive(c, n, ty)} {t(z, n, 2)} {self._succ_case(s, n, t, True)}"
            case S.BetaSucc(c, e, z, s):
                return (f"beta_succ{self._nat_motive(c, n, ty)} {t(e, n, 2)} {t(z, n, 2)} "
                        f"{self._succ_case(s, n, t, True)}")
            case S.BetaPair(annot, c, a, b, body):
                y, z = self.fresh(n), self.fresh(n + ("",), "y")
                return (f"beta_pair{self._let_head(annot, c, n)} ({t(a, n)}, {t(b, n)}) "
                        f"(({y}, {z}) => {t(body, n + (y, z))})")
            case S.BetaSet(annot, c, a, q, body):
                y, u = self.fresh(n), self.fresh(n + ("",), "u")
                return (f"beta_set{self._let_head(annot, c, n)} {{{t(a, n)}, {pf(q, n)}}} "
                        f"({{{y}, {u}}} => {t(body, n + (y, u))})")
            case S.BetaRepr(annot, c, a, b, body):
                y, z = self.fresh(n), self.fresh(n + ("",), "y")
                return (f"beta_repr{self._let_head(annot, c, n)} (|{t(a, n)}|, {t(b, n)}) "
                        f"((|{y}|, {z}) => {t(body, n + (y, z))})")
            case S.EtaTy(f):
                return f"eta_ty {t(f, n, 2)}"
            case S.IrPr(h, b, q1, q2):
                return f"ir_pr {t(S.LamPr(h, b), n, 2)} {pf(q1, n, 2)} {pf(q2, n, 2)}"
            case S.IrTy(f, x, y):
                return f"ir_ty {t(f, n, 2)} {t(x, n, 2)} {t(y, n, 2)}"
            case S.EtaIr(f, g, i, q):
                x = self.fresh(n)
                return f"eta_ir {t(f, n, 2)} {t(g, n, 2)} {t(i, n, 2)} ({x} => {pf(q, n + (x,))})"
            case S.EtaPr(f, g, i, q):
                u = self.fresh(n, "u")
                return f"eta_pr {t(f, n, 2)} {t(g, n, 2)} {pf(i, n, 2)} ({u} => {pf(q, n + (u,))})"
        raise TypeError(f"not a proof: {p!r}")

    def _let_head(self, annot, c, n):
        if c is None:
            return f"[{self.ty(annot, n)}]"
        z = self.fresh(n, "z")
        return f"[{z} : {self.ty(annot, n)} => {self.ty(c, n + (z,))}]"

    def show(self, e, names=()) -> str:
        fn = {"type": self.ty, "prop": self.pr, "term": self.tm, "proof": self.pf}[S.category(e)]
        return fn(e, tuple(names))


_EXPLICIT = Printer(explicit_eq=True)
_READABLE = Printer(explicit_eq=False)


def show(e, names=(), explicit_eq: bool = True) -> str:
    """Concrete syntax for any core expression with free names ``names``."""
    return (_EXPLICIT if explicit_eq else _READABLE).show(e, names)


def context_names(ctx: Context) -> tuple:
    return tuple(Printer.fresh(range(i), "u" if h.kind == PROP else "x") for i, h in enumerate(ctx))


def show_hyps(ctx: Context, explicit_eq: bool = False) -> str:
    names = context_names(ctx)
    p = _EXPLICIT if explicit_eq else _READABLE
    parts = []
    for i, h in enumerate(ctx):
        payload = p.show(h.payload, names[:i])
        if h.kind == PROP:
            parts.append(f"{names[i]} : {payload}")
        elif h.kind == "ghost":
            parts.append(f"|{names[i]} : {payload}|")
        else:
            parts.append(f"{names[i]} : {payload}")
    return ", ".join(parts) if parts else "."
