"""Derived proof forms: chains, symmetry, congruence and ``by beta``.

Everything here produces ordinary core proofs built from the substitution
rule and the axioms, so the checker never trusts this module: the result of
``elaborate_beta`` is re-checked before it is returned.
"""

from __future__ import annotations

from .. import syntax as S
from ..checker import Checker
from ..contexts import Context
from ..diagnostics import FuelExhausted, Stuck
from ..syntax import Eq, Rfl, SubstPr, Var, lift

DEFAULT_FUEL = 256


def desugar_trans(ty, terms, proofs):
    """``trans[x0 =<p0> x1 ... xn]`` as a right-nested chain of substitutions.

    ``proofs[i]`` proves ``terms[i] = terms[i+1]`` at ``ty``.
    """
    if len(proofs) != len(terms) - 1 or not proofs:
        raise ValueError("a chain needs n+1 terms and n >= 1 proofs")
    if len(proofs) == 1:
        return proofs[0]
    rest = desugar_trans(ty, terms[1:], proofs[1:])
    motive = Eq(lift(ty), lift(terms[0]), Var(0))
    return SubstPr(motive, terms[1], terms[-1], rest, proofs[0])


def symm(ty, a, b, p):
    """From ``p : a = b`` build a proof of ``b = a``."""
    return SubstPr(Eq(lift(ty), Var(0), lift(a)), a, b, p, Rfl(a))


def congr(result_ty, body, a, b, p):
    """From ``p : a = b`` build ``body[a] = body[b]``; ``body`` binds one variable."""
    at_a = S.subst0(body, a)
    return SubstPr(Eq(lift(result_ty), lift(at_a), body), a, b, p, Rfl(at_a))


# ----------------------------------------------------------------------
# weak leftmost-outermost reduction with an axiom per step


def contract(t):
    """``(contractum, axiom)`` if ``t`` is a redex, else None."""
    match t:
        case S.App(S.Lam(d, e), x):
            return S.subst0(e, x), S.BetaTy(d, e, x)
        case S.AppPr(S.LamPr(h, e), q):
            return S.subst0(e, q), S.BetaPr(h, e, q)
        case S.AppIr(S.LamIr(d, e), x):
            return S.subst0(e, x), S.BetaIr(d, e, x)
        case S.Cases(annot, c, S.Inl(x), l, r):
            return S.subst0(l, x), S.BetaLeft(annot, c, l, r, x)
        case S.Cases(annot, c, S.Inr(x), l, r):
            return S.subst0(r, x), S.BetaRight(annot, c, l, r, x)
        case S.Natrec(c, S.Zero(), z, s):
            return z, S.BetaZero(c, z, s)
        case S.Natrec(c, S.App(S.Succ(), n), z, s):
            return S.instantiate(s, [n, S.Natrec(c, n, z, s)]), S.BetaSucc(c, n, z, s)
        case S.LetPair(annot, S.Pair(a, b), body, m):
            return S.instantiate(body, [a, b]), S.BetaPair(annot, m, a, b, body)
        case S.LetSet(annot, S.SetIntro(a, q), body, m):
            return S.instantiate(body, [a, q]), S.BetaSet(annot, m, a, q, body)
        case S.LetRepr(annot, S.ReprPair(a, b), body, m):
            return S.instantiate(body, [a, b]), S.BetaRepr(annot, m, a, b, body)
    return None


def find_redex(t):
    """Path (field names) to the leftmost-outermost redex outside binders."""
    if contract(t) is not None:
        return []
    for name, child, binds in S.children(t):
        if binds == 0 and isinstance(child, S.RTerm):
            sub = find_redex(child)
            if sub is not None:
                return [name] + sub
    return None


def _at(t, path):
    for f in path:
        t = getattr(t, f)
    return t


def _plug(t, path, new):
    if not path:
        return new
    head, rest = path[0], path[1:]
    vals = {f: getattr(t, f) for f in t.__dataclass_fields__}
    vals[head] = _plug(vals[head], rest, new)
    return type(t)(**vals)


def step(ty, t):
    """One reduction step ``t -> t'`` with a proof of ``t = t'`` at ``ty``."""
    path = find_redex(t)
    if path is None:
        return None
    redex = _at(t, path)
    reduct, ax = contract(redex)
    nxt = _plug(t, path, reduct)
    if not path:
        return nxt, ax
    hole = _plug(lift(t), path, Var(0))
    return nxt, SubstPr(Eq(lift(ty), lift(t), hole), redex, reduct, ax, Rfl(t))


def reduce_path(ty, t, fuel):
    """Reduction sequence from ``t``: terms and step proofs, plus normal-form flag."""
    terms, proofs = [t], []
    for _ in range(fuel):
        nxt = step(ty, terms[-1])
        if nxt is None:
            return terms, proofs, True
        terms.append(nxt[0])
        proofs.append(nxt[1])
    return terms, proofs, step(ty, terms[-1]) is None


def elaborate_beta(ctx: Context, goal, fuel: int = DEFAULT_FUEL, checker: Checker = None):
    """Prove ``goal`` (an equation) by beta steps.

    The left side is reduced towards the right.  When the right side itself
    contains redexes both sides are reduced to a common reduct and the right
    half of the chain is reversed with ``symm``.
    """
    if not isinstance(goal, Eq):
        raise Stuck("by beta proves only equations")
    ty, lhs, rhs = goal.ty, goal.lhs, goal.rhs
    left, lproofs, lnormal = reduce_path(ty, lhs, fuel)
    right, rproofs, rnormal = reduce_path(ty, rhs, fuel)
    where = {}
    for j, u in enumerate(right):
        where.setdefault(u, j)
    best = None
    if rhs in left:
        best = (left.index(rhs), 0)  # the left side alone reaches the goal
    for i, t in enumerate(left):
        j = where.get(t)
        if best is None and j is not None:
            best = (i, j)
        elif j is not None and best[1] != 0 and i + j < sum(best):
            best = (i, j)
    if best is None:
        if lnormal and rnormal:
            raise Stuck("no beta redex left and the two sides differ")
        raise FuelExhausted(f"no common reduct within {fuel} steps")
    i, j = best
    terms = left[: i + 1] + [right[k] for k in range(j - 1, -1, -1)]
    proofs = lproofs[:i] + [symm(ty, right[k], right[k + 1], rproofs[k]) for k in range(j - 1, -1, -1)]
    proof = Rfl(lhs) if not proofs else desugar_trans(ty, terms, proofs)
    (checker or Checker()).check_proof(ctx, proof, goal)
    return proof
