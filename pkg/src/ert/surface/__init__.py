"""Concrete syntax: lexer, parser, resolver, printer and derived proof forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..checker import Checker
from ..diagnostics import Diagnostic, ErtError
from .parser import parse, parse_category, parse_recovering
from .printer import show, show_hyps
from .resolve import Decl, Env, NeedsGoal, Resolver
from .sugar import DEFAULT_FUEL, congr, desugar_trans, elaborate_beta, symm

__all__ = [
    "Decl", "Env", "LoadResult", "NeedsGoal", "Resolver", "DEFAULT_FUEL",
    "congr", "desugar_trans", "elaborate_beta", "load", "load_file", "parse",
    "parse_category", "parse_recovering", "show", "show_hyps", "symm",
]


@dataclass
class LoadResult:
    file: str
    decls: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    total: int = 0

    @property
    def ok(self):
        return not self.diagnostics

    def get(self, name):
        for d in self.decls:
            if d.name == name:
                return d
        raise KeyError(name)


def _diag(err: ErtError, file, decl=""):
    return Diagnostic(
        rule=err.rule,
        message=err.message,
        span=err.span,
        expected=_render(err.expected),
        found=_render(err.found),
        context=_render_ctx(err.ctx),
        file=file,
        decl=decl,
    )


def _render(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    try:
        return show(x, explicit_eq=False)
    except Exception:
        return repr(x)


def _render_ctx(ctx):
    if ctx is None or not len(ctx):
        return ""
    try:
        return show_hyps(ctx)
    except Exception:
        return ""


def load(text: str, file: str = "<input>", check: bool = True, fuel: int = DEFAULT_FUEL,
         checker: Checker = None) -> LoadResult:
    """Parse, resolve and (unless ``check`` is off) check every declaration.

    Errors do not stop later declarations; a declaration that refers to a
    failed one fails too.
    """
    surface, perrors = parse_recovering(text)
    out = LoadResult(file, total=len(surface) + len(perrors))
    out.diagnostics.extend(_diag(e, file) for e in perrors)
    res = Resolver(checker, fuel)
    for d in surface:
        try:
            out.decls.append(res.declare(d, check=check))
        except ErtError as err:
            out.diagnostics.append(_diag(err, file, d.name))
    out.diagnostics.sort(key=lambda g: (g.span.line, g.span.col) if g.span else (0, 0))
    return out


def load_file(path, check: bool = True, fuel: int = DEFAULT_FUEL) -> LoadResult:
    with open(path, encoding="utf-8") as fh:
        return load(fh.read(), str(path), check=check, fuel=fuel)
