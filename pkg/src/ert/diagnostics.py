"""Structured errors shared by the checker, the surface front end and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    end_line: int = 0
    end_col: int = 0

    def __str__(self):
        return f"{self.line}:{self.col}"


@dataclass
class Diagnostic:
    rule: str
    message: str
    span: Optional[Span] = None
    expected: str = ""
    found: str = ""
    context: str = ""
    file: str = ""
    decl: str = ""

    def record(self) -> dict:
        return {
            "kind": "diagnostic",
            "file": self.file,
            "decl": self.decl,
            "rule": self.rule,
            "line": self.span.line if self.span else 0,
            "col": self.span.col if self.span else 0,
            "message": self.message,
            "expected": self.expected,
            "found": self.found,
        }

    def structured(self) -> str:
        return json.dumps(self.record(), sort_keys=True, ensure_ascii=False)

    def human(self) -> str:
        where = f"{self.file}:{self.span}" if self.span else self.file
        head = f"{where}: [{self.rule}] {self.message}"
        if self.decl:
            head += f" (in {self.decl})"
        lines = [head]
        if self.expected:
            lines.append(f"  expected: {self.expected}")
        if self.found:
            lines.append(f"  found:    {self.found}")
        if self.context:
            lines.append(f"  context:  {self.context}")
        return "\n".join(lines)


class ErtError(Exception):
    """Raised by every judgment; ``trail`` collects the nodes it unwound through."""

    def __init__(self, rule, message, expected=None, found=None, ctx=None, span=None):
        super().__init__(f"[{rule}] {message}")
        self.rule = rule
        self.message = message
        self.expected = expected
        self.found = found
        self.ctx = ctx
        self.span = span
        self.trail: list = []


class GhostInComputationalPosition(ErtError):
    def __init__(self, index, ctx=None):
        super().__init__(
            "Var",
            f"ghost variable #{index} used in a computational position",
            ctx=ctx,
        )
        self.index = index


class NotSynthesizable(ErtError):
    def __init__(self, rule, what):
        super().__init__(rule, f"cannot synthesize a type for {what}; an expected type is needed")


class ParseError(ErtError):
    def __init__(self, message, span):
        super().__init__("Syntax", message, span=span)


class FuelExhausted(ErtError):
    def __init__(self, message):
        super().__init__("by-beta", message)


class Stuck(ErtError):
    def __init__(self, message):
        super().__init__("by-beta", message)


@dataclass
class Report:
    diagnostics: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.diagnostics
