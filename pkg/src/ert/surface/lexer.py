"""Tokenizer for ``.ert`` source files."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..diagnostics import ParseError, Span

KEYWORDS = frozenset("""
def thm let in inl inr cases natrec absurd zero succ glam orl orr cases_or
subst ind rfl uniq discr symm congr trans by beta forall exists top bot
Unit Nat beta_ty beta_pr beta_ir beta_left beta_right beta_zero beta_succ
beta_pair beta_set beta_repr eta_ty ir_pr ir_ty eta_ir eta_pr
""".split())

# Longest symbols first so that e.g. ``:=`` wins over ``:``.
SYMBOLS = [
    ":=", "->", "=>", "=<", "<>", "\\\\", "\\/", "/\\", "\\",
    "(", ")", "[", "]", "{", "}", "<", ">", "|", ":", ".", ",", "*", "+", "=",
]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_NUM = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "num", "kw", "sym", "eof"
    text: str
    span: Span

    def is_(self, text):
        return self.kind in ("kw", "sym") and self.text == text


def tokenize(src: str) -> list:
    toks = []
    i, line, col = 0, 1, 1
    n = len(src)

    def advance(k):
        nonlocal i, line, col
        for ch in src[i:i + k]:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        i += k

    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if src.startswith("--", i):
            j = src.find("\n", i)
            advance((j if j >= 0 else n) - i)
            continue
        if src.startswith("{-", i):
            depth, j = 0, i
            while j < n:
                if src.startswith("{-", j):
                    depth += 1
                    j += 2
                elif src.startswith("-}", j):
                    depth -= 1
                    j += 2
                    if depth == 0:
                        break
                else:
                    j += 1
            if depth:
                raise ParseError("unterminated block comment", Span(line, col))
            advance(j - i)
            continue
        start = (line, col)
        m = _IDENT.match(src, i)
        if m:
            text = m.group()
            kind = "kw" if text in KEYWORDS else "ident"
            advance(len(text))
            toks.append(Token(kind, text, Span(*start, line, col)))
            continue
        m = _NUM.match(src, i)
        if m:
            advance(len(m.group()))
            toks.append(Token("num", m.group(), Span(*start, line, col)))
            continue
        for sym in SYMBOLS:
            if src.startswith(sym, i):
                advance(len(sym))
                toks.append(Token("sym", sym, Span(*start, line, col)))
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", Span(line, col))
    toks.append(Token("eof", "", Span(line, col, line, col)))
    return toks
