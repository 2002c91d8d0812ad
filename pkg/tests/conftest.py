import random
from pathlib import Path

import pytest

from ert.checker import Checker
from ert import syntax as S
from ert.contexts import EMPTY, GHOST, TERM, Context, ghost, insert, instantiate_at, prop, term
from ert.surface import load_file
from ert.syntax import Eq, Nat, Rfl, Subst, Top, TrueIntro, apply_subst, numeral

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
CONTROLS = ROOT / "controls"

# filled by tests/test_acceptance.py, printed at the end of the run
CRITERIA = {}


def corpus_files():
    return sorted(CORPUS.glob("*.ert"))


def record(decl):
    """All judgments of a declaration's derivation, without duplicates."""
    ch = Checker(record=True)
    if decl.kind == "def":
        ch.wf_type(EMPTY, decl.sig)
        ch.check_term(EMPTY, decl.body, decl.sig)
    else:
        ch.wf_prop(EMPTY, decl.sig)
        ch.check_proof(EMPTY, decl.body, decl.sig)
    seen, out = set(), []
    for j in ch.log:
        if j not in seen:
            seen.add(j)
            out.append(j)
    return out


def recheck(j, ctx=None, sigma=None, checker=None):
    """Re-run a recorded judgment, optionally in another context under a substitution."""
    checker = checker or Checker()
    ctx = j.ctx if ctx is None else ctx
    sub = (lambda e: e) if sigma is None else (lambda e: apply_subst(sigma, e))
    if j.kind == "type":
        checker.wf_type(ctx, sub(j.subject))
    elif j.kind == "prop":
        checker.wf_prop(ctx, sub(j.subject))
    elif j.kind == "term":
        checker.check_term(ctx, sub(j.subject), sub(j.classifier), j.mode)
    elif j.kind == "proof":
        checker.check_proof(ctx, sub(j.subject), sub(j.classifier))


def _closed_image(h):
    """A closed inhabitant for hypothesis ``h`` when one is obvious, else None."""
    p = h.payload
    if h.kind in (TERM, GHOST):
        if p == Nat():
            return numeral(2)
        if p == S.Unit():
            return S.UnitVal()
        return None
    if p == Top():
        return TrueIntro()
    if isinstance(p, Eq) and p.lhs == p.rhs:
        return Rfl(p.lhs)
    return None


def substitutions(ctx: Context, rng):
    """Weakenings and single-point instantiations ``Gamma -> Delta``."""
    out = []
    pos = rng.randint(0, len(ctx))
    for hyp in (term(Nat()), ghost(S.Unit()), prop(Top())):
        out.append(("weaken", insert(ctx, pos, hyp), Subst.shift(1, pos)))
    for i in range(len(ctx)):
        img = _closed_image(ctx.entry(i))
        if img is not None:
            delta, sigma = instantiate_at(ctx, i, img)
            out.append(("instantiate", delta, sigma))
    return out


@pytest.fixture(scope="session")
def corpus():
    return {p.name: load_file(p) for p in corpus_files()}


@pytest.fixture(scope="session")
def decls(corpus):
    return [d for res in corpus.values() for d in res.decls]


@pytest.fixture(scope="session")
def judgments(decls):
    """``(decl name, judgment)`` for every judgment in every corpus derivation."""
    return [(d.name, j) for d in decls for j in record(d)]


def sample(xs, n, seed=0):
    xs = list(xs)
    if len(xs) <= n:
        return xs
    return random.Random(seed).sample(xs, n)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok, note = CRITERIA[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  ({note})" if note else ""))
