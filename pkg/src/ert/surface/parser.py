"""Recursive-descent parser producing named surface trees.

The grammar is category directed: the caller always knows whether it wants a
type, a proposition, a term or a proof, so keywords such as ``forall`` or
``let`` are read according to the category being parsed.  A few prefixes are
shared between alternatives (a parenthesis may open a binder, a tuple or a
group); those spots save the position and retry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..diagnostics import ParseError, Span
from .lexer import Token, tokenize


@dataclass(frozen=True)
class SNode:
    tag: str
    args: tuple
    span: Optional[Span] = None

    def __getitem__(self, k):
        return self.args[k]


@dataclass(frozen=True)
class SurfaceDecl:
    kind: str  # "def" or "thm"
    name: str
    sig: SNode
    body: SNode
    span: Span


class Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.pos = 0
        self.furthest = 0
        self.decl_start = 0

    # -- token helpers -------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, text) -> bool:
        return self.tok.is_(text)

    def accept(self, text) -> bool:
        if self.at(text):
            self._next()
            return True
        return False

    def _next(self):
        t = self.tok
        self.pos += 1
        self.furthest = max(self.furthest, self.pos)
        return t

    def expect(self, text) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self._next()

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.fail("expected a name")
        return self._next().text

    def fail(self, msg):
        t = self.tok
        if t.kind == "eof":
            opener = self._unclosed()
            if opener is not None:
                raise ParseError(f"unclosed {opener.text!r}", opener.span)
            raise ParseError(f"{msg}, found end of input", t.span)
        raise ParseError(f"{msg}, found {t.text!r}", t.span)

    def _unclosed(self):
        stack = []
        pairs = {")": "(", "]": "[", "}": "{"}
        for t in self.toks[self.decl_start : self.pos]:
            if t.kind != "sym":
                continue
            if t.text in ("(", "[", "{"):
                stack.append(t)
            elif t.text in pairs and stack and stack[-1].text == pairs[t.text]:
                stack.pop()
        return stack[-1] if stack else None

    def attempt(self, fn, *args):
        """Run ``fn``; on a parse error rewind and return None."""
        save = self.pos
        try:
            return fn(*args)
        except ParseError:
            self.pos = save
            return None

    def node(self, tag, *args, start: Token):
        end = self.toks[max(self.pos - 1, 0)].span
        return SNode(tag, args, Span(start.span.line, start.span.col, end.end_line, end.end_col))

    def binder_name(self) -> str:
        return self.ident()

    # -- declarations --------------------------------------------------

    def program(self) -> list:
        decls = []
        while self.tok.kind != "eof":
            decls.append(self.decl())
        return decls

    def decl(self) -> SurfaceDecl:
        self.decl_start = self.pos
        start = self.tok
        if self.accept("def"):
            name = self.ident()
            self.expect(":")
            sig = self.type_()
            self.expect(":=")
            body = self.term()
            kind = "def"
        elif self.accept("thm"):
            name = self.ident()
            self.expect(":")
            sig = self.prop()
            self.expect(":=")
            body = self.proof()
            kind = "thm"
        else:
            self.fail("expected 'def' or 'thm'")
        end = self.toks[self.pos - 1].span
        return SurfaceDecl(kind, name, sig, body, Span(start.span.line, start.span.col, end.end_line, end.end_col))

    # -- types ---------------------------------------------------------

    def type_(self) -> SNode:
        start = self.tok
        if self.accept("forall") or self.accept("exists"):
            tag = "Inter" if start.text == "forall" else "Union"
            x = self.binder_name()
            self.expect(":")
            a = self.type_()
            self.expect(",")
            return self.node(tag, x, a, self.type_(), start=start)
        if self.at("["):
            self._next()
            u = "_"
            if self.tok.kind == "ident" and self.peek().is_(":"):
                u = self.ident()
                self.expect(":")
            ph = self.prop()
            self.expect("]")
            self.expect("=>")
            return self.node("Pre", u, ph, self.type_(), start=start)
        if self.at("(") and self.peek().kind == "ident" and self.peek(2).is_(":"):
            dep = self.attempt(self._dep_arrow)
            if dep is not None:
                x, a = dep
                return self.node("Fn", x, a, self.type_(), start=start)
        lhs = self.type_sum()
        if self.accept("->"):
            return self.node("Fn", "_", lhs, self.type_(), start=start)
        return lhs

    def _dep_arrow(self):
        self.expect("(")
        x = self.ident()
        self.expect(":")
        a = self.type_()
        self.expect(")")
        self.expect("->")
        return x, a

    def type_sum(self) -> SNode:
        start = self.tok
        lhs = self.type_prod()
        while self.accept("+"):
            lhs = self.node("Sum", lhs, self.type_prod(), start=start)
        return lhs

    def type_prod(self) -> SNode:
        start = self.tok
        if self.at("(") and self.peek().kind == "ident" and self.peek(2).is_(":"):
            self._next()
            x = self.ident()
            self.expect(":")
            a = self.type_()
            self.expect(")")
            self.expect("*")
            return self.node("Prod", x, a, self.type_prod(), start=start)
        lhs = self.type_atom()
        if self.accept("*"):
            return self.node("Prod", "_", lhs, self.type_prod(), start=start)
        return lhs

    def type_atom(self) -> SNode:
        start = self.tok
        if self.accept("Unit"):
            return self.node("Unit", start=start)
        if self.accept("Nat"):
            return self.node("Nat", start=start)
        if self.accept("("):
            a = self.type_()
            self.expect(")")
            return a
        if self.accept("{"):
            x = self.binder_name()
            self.expect(":")
            a = self.type_()
            self.expect("|")
            ph = self.prop()
            self.expect("}")
            return self.node("Set", x, a, ph, start=start)
        self.fail("expected a type")

    # -- propositions --------------------------------------------------

    def prop(self) -> SNode:
        start = self.tok
        if self.accept("forall") or self.accept("exists"):
            tag = "All" if start.text == "forall" else "Ex"
            x = self.binder_name()
            self.expect(":")
            a = self.type_()
            self.expect(",")
            return self.node(tag, x, a, self.prop(), start=start)
        dep = self.attempt(self._dep_prop_binder)
        if dep is not None:
            u, ph = dep
            return self.node("Imp", u, ph, self.prop(), start=start)
        lhs = self.prop_or()
        if self.accept("=>"):
            return self.node("Imp", "_", lhs, self.prop(), start=start)
        return lhs

    def _dep_prop_binder(self):
        self.expect("(")
        u = self.ident()
        self.expect(":")
        ph = self.prop()
        self.expect(")")
        self.expect("=>")
        return u, ph

    def prop_or(self) -> SNode:
        start = self.tok
        lhs = self.prop_and()
        while self.accept("\\/"):
            lhs = self.node("Or", lhs, self.prop_and(), start=start)
        return lhs

    def prop_and(self) -> SNode:
        start = self.tok
        dep = self.attempt(self._dep_and)
        if dep is not None:
            u, ph = dep
            return self.node("And", u, ph, self.prop_and(), start=start)
        lhs = self.prop_atom()
        if self.accept("/\\"):
            return self.node("And", "_", lhs, self.prop_and(), start=start)
        return lhs

    def _dep_and(self):
        self.expect("(")
        u = self.ident()
        self.expect(":")
        ph = self.prop()
        self.expect(")")
        self.expect("/\\")
        return u, ph

    def prop_atom(self) -> SNode:
        start = self.tok
        if self.accept("top"):
            return self.node("Top", start=start)
        if self.accept("bot"):
            return self.node("Bot", start=start)
        if self.at("("):
            grouped = self.attempt(self._grouped_prop)
            if grouped is not None:
                return grouped
        lhs = self.term()
        self.expect("=")
        ty = None
        if self.accept("["):
            ty = self.type_()
            self.expect("]")
        rhs = self.term()
        return self.node("Eq", ty, lhs, rhs, start=start)

    def _grouped_prop(self):
        self.expect("(")
        ph = self.prop()
        self.expect(")")
        if self.at("="):
            self.fail("a term, not a proposition")
        return ph

    # -- terms ---------------------------------------------------------

    def term(self) -> SNode:
        start = self.tok
        if self.accept("\\\\"):
            u = self.binder_name()
            self.expect(":")
            ph = self.prop()
            self.expect(".")
            return self.node("LamPr", u, ph, self.term(), start=start)
        if self.accept("\\"):
            if self.accept("|"):
                x = self.binder_name()
                self.expect(":")
                a = self.type_()
                self.expect("|")
                self.expect(".")
                return self.node("LamIr", x, a, self.term(), start=start)
            x = self.binder_name()
            self.expect(":")
            a = self.type_()
            self.expect(".")
            return self.node("Lam", x, a, self.term(), start=start)
        if self.at("let"):
            return self.let(self.term, term_level=True)
        return self.term_app()

    def let(self, body, term_level):
        start = self.expect("let")
        motive = None
        if self.accept("["):
            z = self.binder_name()
            self.expect("=>")
            c = self.type_() if term_level else self.prop()
            self.expect("]")
            motive = (z, c)
        if self.accept("{"):
            kind = "set"
            x = self.binder_name()
            self.expect(",")
            y = self.binder_name()
            self.expect("}")
        elif self.accept("("):
            if self.accept("|"):
                kind = "repr"
                x = self.binder_name()
                self.expect("|")
            else:
                kind = "pair"
                x = self.binder_name()
            self.expect(",")
            y = self.binder_name()
            self.expect(")")
        elif not term_level and self.accept("<"):
            if self.accept("|"):
                kind = "exists"
                x = self.binder_name()
                self.expect("|")
            else:
                kind = "and"
                x = self.binder_name()
            self.expect(",")
            y = self.binder_name()
            self.expect(">")
        else:
            self.fail("expected a let pattern")
        self.expect(":")
        annot = self.prop() if kind in ("and", "exists") else self.type_()
        self.expect("=")
        scrut = self.proof() if kind in ("and", "exists") else self.term()
        self.expect("in")
        return self.node("Let", kind, x, y, annot, scrut, body(), motive, start=start)

    def term_app(self) -> SNode:
        start = self.tok
        head = self.term_head()
        while True:
            if self.at("|"):
                arg = self.attempt(self._ghost_arg)
                if arg is None:
                    break
                head = self.node("AppIr", head, arg, start=start)
            elif self.at("{"):
                set_intro = self.attempt(self._set_intro)
                if set_intro is not None:
                    head = self.node("App", head, set_intro, start=start)
                    continue
                pf = self.attempt(self._proof_arg)
                if pf is None:
                    break
                head = self.node("AppPr", head, pf, start=start)
            elif self._term_atom_start():
                head = self.node("App", head, self.term_atom(), start=start)
            else:
                break
        return head

    def _ghost_arg(self):
        self.expect("|")
        a = self.term()
        self.expect("|")
        return a

    def _proof_arg(self):
        self.expect("{")
        p = self.proof()
        self.expect("}")
        return p

    def _set_intro(self):
        start = self.expect("{")
        a = self.term()
        self.expect(",")
        p = self.proof()
        self.expect("}")
        return self.node("SetI", a, p, start=start)

    def _term_atom_start(self) -> bool:
        t = self.tok
        return t.kind in ("ident", "num") or t.is_("(") or t.is_("zero") or t.is_("succ")

    def term_head(self) -> SNode:
        start = self.tok
        if self.accept("inl") or self.accept("inr"):
            return self.node("Inl" if start.text == "inl" else "Inr", self.term_atom(), start=start)
        if self.accept("absurd"):
            return self.node("Absurd", self.proof_atom(), start=start)
        if self.accept("cases"):
            x, annot, c = self.motive_binder(self.type_)
            scrut = self.term_atom()
            y, left = self.branch("inl", self.term)
            z, right = self.branch("inr", self.term)
            return self.node("Cases", x, annot, c, scrut, y, left, z, right, start=start)
        if self.accept("natrec"):
            x, c = self.simple_motive(self.type_)
            scrut = self.term_atom()
            z = self.term_atom()
            k, f, s = self.succ_case(ghost=True, body=self.term)
            return self.node("Natrec", x, c, scrut, z, k, f, s, start=start)
        if self.at("{"):
            return self._set_intro()
        return self.term_atom()

    def term_atom(self) -> SNode:
        start = self.tok
        if self.tok.kind == "ident":
            return self.node("Name", self._next().text, start=start)
        if self.tok.kind == "num":
            return self.node("Num", int(self._next().text), start=start)
        if self.accept("zero"):
            return self.node("Zero", start=start)
        if self.accept("succ"):
            return self.node("Succ", start=start)
        if self.accept("("):
            if self.accept(")"):
                return self.node("UnitV", start=start)
            if self.accept("|"):
                g = self.term()
                self.expect("|")
                self.expect(",")
                w = self.term()
                self.expect(")")
                return self.node("Repr", g, w, start=start)
            a = self.term()
            if self.accept(","):
                b = self.term()
                self.expect(")")
                return self.node("Pair", a, b, start=start)
            self.expect(")")
            return a
        if self.at("{"):
            return self._set_intro()
        self.fail("expected a term")

    # -- shared pieces of eliminators ----------------------------------

    def motive_binder(self, body):
        """``[x : A => C]``"""
        self.expect("[")
        x = self.binder_name()
        self.expect(":")
        a = self.type_()
        self.expect("=>")
        c = body()
        self.expect("]")
        return x, a, c

    def simple_motive(self, body):
        """``[x => C]``"""
        self.expect("[")
        x = self.binder_name()
        self.expect("=>")
        c = body()
        self.expect("]")
        return x, c

    def optional_typed_motive(self, body):
        """``[x => C]`` or ``[x : A => C]``; the type may be omitted."""
        self.expect("[")
        x = self.binder_name()
        a = None
        if self.accept(":"):
            a = self.type_()
        self.expect("=>")
        c = body()
        self.expect("]")
        return x, a, c

    def branch(self, inj, body):
        self.expect("(")
        self.expect(inj)
        y = self.binder_name()
        self.expect("=>")
        b = body()
        self.expect(")")
        return y, b

    def succ_case(self, ghost, body):
        """``(|succ k|, y => s)`` for natrec or ``(succ k, y => s)`` for ind."""
        self.expect("(")
        if ghost:
            self.expect("|")
        self.expect("succ")
        k = self.binder_name()
        if ghost:
            self.expect("|")
        self.expect(",")
        y = self.binder_name()
        self.expect("=>")
        s = body()
        self.expect(")")
        return k, y, s

    # -- proofs --------------------------------------------------------

    def proof(self) -> SNode:
        start = self.tok
        if self.accept("\\\\"):
            u = self.binder_name()
            self.expect(":")
            ph = self.prop()
            self.expect(".")
            return self.node("Imp", u, ph, self.proof(), start=start)
        if self.at("\\") and self.peek().is_("|"):
            self._next()
            self._next()
            return self._gen_rest(start, "|", ".")
        if self.accept("glam"):
            self.expect("|")
            return self._gen_rest(start, "|", ",")
        if self.at("let"):
            return self.let(self.proof, term_level=False)
        return self.proof_app()

    def _gen_rest(self, start, close, sep):
        x = self.binder_name()
        self.expect(":")
        a = self.type_()
        self.expect(close)
        self.expect(sep)
        return self.node("Gen", x, a, self.proof(), start=start)

    def proof_app(self) -> SNode:
        start = self.tok
        head = self.proof_head()
        while True:
            if self.at("|"):
                arg = self.attempt(self._ghost_arg)
                if arg is None:
                    break
                head = self.node("Spec", head, arg, start=start)
            elif self._proof_atom_start():
                head = self.node("MP", head, self.proof_atom(), start=start)
            else:
                break
        return head

    def _proof_atom_start(self) -> bool:
        t = self.tok
        return t.kind == "ident" or any(t.is_(s) for s in ("(", "<", "<>", "by", "trans"))

    def proof_atom(self) -> SNode:
        start = self.tok
        if self.tok.kind == "ident":
            return self.node("Name", self._next().text, start=start)
        if self.accept("<>"):
            return self.node("TrueI", start=start)
        if self.accept("("):
            p = self.proof()
            self.expect(")")
            return p
        if self.accept("<"):
            if self.accept("|"):
                a = self.term()
                self.expect("|")
                self.expect(",")
                p = self.proof()
                self.expect(">")
                return self.node("Wit", a, p, start=start)
            p = self.proof()
            self.expect(",")
            q = self.proof()
            self.expect(">")
            return self.node("AndI", p, q, start=start)
        if self.accept("by"):
            self.expect("beta")
            return self.node("ByBeta", start=start)
        if self.accept("trans"):
            self.expect("[")
            terms = [self.term()]
            proofs = []
            while self.accept("=<"):
                proofs.append(self.proof())
                self.expect(">")
                terms.append(self.term())
            if not proofs:
                self.fail("a chain needs at least one link")
            self.expect("]")
            return self.node("Trans", tuple(terms), tuple(proofs), start=start)
        self.fail("expected a proof")

    def proof_head(self) -> SNode:
        start = self.tok
        t = self.tok
        if t.kind != "kw":
            return self.proof_atom()
        kw = t.text
        handler = getattr(self, "_p_" + kw, None)
        if handler is None:
            return self.proof_atom()
        self._next()
        return handler(start)

    def _p_orl(self, start):
        return self.node("Orl", self.proof_atom(), start=start)

    def _p_orr(self, start):
        return self.node("Orr", self.proof_atom(), start=start)

    def _p_absurd(self, start):
        return self.node("AbsurdPr", self.proof_atom(), start=start)

    def _p_symm(self, start):
        return self.node("Symm", self.proof_atom(), start=start)

    def _p_rfl(self, start):
        return self.node("Rfl", self.term_atom(), start=start)

    def _p_uniq(self, start):
        return self.node("Uniq", self.term_atom(), start=start)

    def _p_discr(self, start):
        a = self.term_atom()
        b = self.term_atom()
        return self.node("Discr", a, b, self.proof_atom(), start=start)

    def _p_eta_ty(self, start):
        return self.node("EtaTy", self.term_atom(), start=start)

    def _p_ir_ty(self, start):
        e = self.term_atom()
        a = self.term_atom()
        return self.node("IrTy", e, a, self.term_atom(), start=start)

    def _p_ir_pr(self, start):
        u, ph, e = self._lambda_arg("LamPr")
        p = self.proof_atom()
        return self.node("IrPr", u, ph, e, p, self.proof_atom(), start=start)

    def _p_eta_ir(self, start):
        f = self.term_atom()
        g = self.term_atom()
        i = self.term_atom()
        x, p = self._unary_case()
        return self.node("EtaIr", f, g, i, x, p, start=start)

    def _p_eta_pr(self, start):
        f = self.term_atom()
        g = self.term_atom()
        i = self.proof_atom()
        x, p = self._unary_case()
        return self.node("EtaPr", f, g, i, x, p, start=start)

    def _unary_case(self):
        self.expect("(")
        x = self.binder_name()
        self.expect("=>")
        p = self.proof()
        self.expect(")")
        return x, p

    def _p_congr(self, start):
        x, a, t = self.optional_typed_motive(self.term)
        return self.node("Congr", x, a, t, self.proof_atom(), start=start)

    def _p_subst(self, start):
        x, a, ph = self.optional_typed_motive(self.prop)
        self.expect("[")
        lhs = self.term()
        self.expect("]")
        self.expect("[")
        rhs = self.term()
        self.expect("]")
        p = self.proof_atom()
        return self.node("Subst", x, a, ph, lhs, rhs, p, self.proof_atom(), start=start)

    def _p_cases_or(self, start):
        self.expect("[")
        u = self.binder_name()
        self.expect(":")
        annot = self.prop_or()
        self.expect("=>")
        c = self.prop()
        self.expect("]")
        scrut = self.proof_atom()
        v, left = self.branch("orl", self.proof)
        w, right = self.branch("orr", self.proof)
        return self.node("CasesOr", u, annot, c, scrut, v, left, w, right, start=start)

    def _p_cases(self, start):
        x, annot, c = self.motive_binder(self.prop)
        scrut = self.term_atom()
        y, left = self.branch("inl", self.proof)
        z, right = self.branch("inr", self.proof)
        return self.node("CasesPr", x, annot, c, scrut, y, left, z, right, start=start)

    def _p_ind(self, start):
        x, c = self.simple_motive(self.prop)
        scrut = self.term_atom()
        z = self.proof_atom()
        k, u, s = self.succ_case(ghost=False, body=self.proof)
        return self.node("Ind", x, c, scrut, z, k, u, s, start=start)

    def _lambda_arg(self, tag):
        lam = self.term_atom()
        if lam.tag != tag:
            self.fail("expected a parenthesised abstraction")
        return lam.args

    def _p_beta_ty(self, start):
        x, a, e = self._lambda_arg("Lam")
        return self.node("BetaTy", x, a, e, self.term_atom(), start=start)

    def _p_beta_ir(self, start):
        x, a, e = self._lambda_arg("LamIr")
        return self.node("BetaIr", x, a, e, self.term_atom(), start=start)

    def _p_beta_pr(self, start):
        u, ph, e = self._lambda_arg("LamPr")
        return self.node("BetaPr", u, ph, e, self.proof_atom(), start=start)

    def _p_beta_left(self, start):
        return self._beta_cases(start, "BetaLeft")

    def _p_beta_right(self, start):
        return self._beta_cases(start, "BetaRight")

    def _beta_cases(self, start, tag):
        x, annot, c = self.motive_binder(self.type_)
        y, left = self.branch("inl", self.term)
        z, right = self.branch("inr", self.term)
        return self.node(tag, x, annot, c, y, left, z, right, self.term_atom(), start=start)

    def _p_beta_zero(self, start):
        x, c = self.simple_motive(self.type_)
        z = self.term_atom()
        k, f, s = self.succ_case(ghost=True, body=self.term)
        return self.node("BetaZero", x, c, z, k, f, s, start=start)

    def _p_beta_succ(self, start):
        x, c = self.simple_motive(self.type_)
        e = self.term_atom()
        z = self.term_atom()
        k, f, s = self.succ_case(ghost=True, body=self.term)
        return self.node("BetaSucc", x, c, e, z, k, f, s, start=start)

    def _let_beta_head(self):
        """``[T]`` or ``[z : T => C]``"""
        self.expect("[")
        if self.tok.kind == "ident" and self.peek().is_(":"):
            z = self.ident()
            self.expect(":")
            t = self.type_()
            self.expect("=>")
            c = self.type_()
            self.expect("]")
            return t, (z, c)
        t = self.type_()
        self.expect("]")
        return t, None

    def _p_beta_pair(self, start):
        t, motive = self._let_beta_head()
        self.expect("(")
        a = self.term()
        self.expect(",")
        b = self.term()
        self.expect(")")
        self.expect("(")
        self.expect("(")
        y = self.binder_name()
        self.expect(",")
        z = self.binder_name()
        self.expect(")")
        self.expect("=>")
        e = self.term()
        self.expect(")")
        return self.node("BetaPair", t, motive, a, b, y, z, e, start=start)

    def _p_beta_set(self, start):
        t, motive = self._let_beta_head()
        self.expect("{")
        a = self.term()
        self.expect(",")
        p = self.proof()
        self.expect("}")
        self.expect("(")
        self.expect("{")
        y = self.binder_name()
        self.expect(",")
        u = self.binder_name()
        self.expect("}")
        self.expect("=>")
        e = self.term()
        self.expect(")")
        return self.node("BetaSet", t, motive, a, p, y, u, e, start=start)

    def _p_beta_repr(self, start):
        t, motive = self._let_beta_head()
        self.expect("(")
        self.expect("|")
        a = self.term()
        self.expect("|")
        self.expect(",")
        b = self.term()
        self.expect(")")
        self.expect("(")
        self.expect("(")
        self.expect("|")
        y = self.binder_name()
        self.expect("|")
        self.expect(",")
        z = self.binder_name()
        self.expect(")")
        self.expect("=>")
        e = self.term()
        self.expect(")")
        return self.node("BetaRepr", t, motive, a, b, y, z, e, start=start)


def parse(src: str) -> list:
    """Parse a whole file into declarations; raises ParseError."""
    return Parser(src).program()


def parse_recovering(src: str):
    """Parse every declaration that parses; skip to the next one after an error.

    Returns ``(decls, errors)``.  A lexical error stops everything.
    """
    try:
        p = Parser(src)
    except ParseError as err:
        return [], [err]
    decls, errors = [], []
    while p.tok.kind != "eof":
        try:
            decls.append(p.decl())
        except ParseError as err:
            errors.append(err)
            p.pos = max(p.pos, p.decl_start + 1)
            while p.tok.kind != "eof" and not (p.at("def") or p.at("thm")):
                p._next()
    return decls, errors


def parse_category(src: str, category: str) -> SNode:
    """Parse a single type, prop, term or proof (used by tests and the printer)."""
    p = Parser(src)
    fn = {"type": p.type_, "prop": p.prop, "term": p.term, "proof": p.proof}[category]
    out = fn()
    if p.tok.kind != "eof":
        p.fail("unexpected trailing input")
    return out
