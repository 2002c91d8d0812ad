"""Core syntax in de Bruijn form: types, propositions, terms and proofs.

All four categories share one index space.  Every node class declares, in
``binds``, how many fresh variables scope over each of its fields, which lets
shifting, substitution and scope checking be written once for the whole
family.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, fields
from typing import Callable, ClassVar, Optional

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class Node:
    __slots__ = ()
    binds: ClassVar[tuple] = ()


class RType(Node):
    __slots__ = ()


class RProp(Node):
    __slots__ = ()


class RTerm(Node):
    __slots__ = ()


class RProof(Node):
    __slots__ = ()


def node(*binds):
    """Frozen dataclass decorator that records binder counts per field."""

    def wrap(cls):
        cls = dataclass(frozen=True, slots=True)(cls)
        cls.binds = binds or (0,) * len(fields(cls))
        return cls

    return wrap


# types

@node()
class Unit(RType):
    pass


@node()
class Nat(RType):
    pass


@node(0, 1)
class DepFn(RType):
    dom: RType
    cod: RType


@node(0, 1)
class DepPair(RType):
    fst: RType
    snd: RType


@node(0, 0)
class Coprod(RType):
    left: RType
    right: RType


@node(0, 1)
class Precond(RType):
    hyp: RProp
    body: RType


@node(0, 1)
class Subset(RType):
    base: RType
    pred: RProp


@node(0, 1)
class Intersect(RType):
    dom: RType
    body: RType


@node(0, 1)
class Union(RType):
    dom: RType
    body: RType


# propositions

@node()
class Top(RProp):
    pass


@node()
class Bot(RProp):
    pass


@node(0, 1)
class Implies(RProp):
    hyp: RProp
    concl: RProp


@node(0, 1)
class And(RProp):
    left: RProp
    right: RProp


@node(0, 0)
class Or(RProp):
    left: RProp
    right: RProp


@node(0, 1)
class ForallP(RProp):
    dom: RType
    body: RProp


@node(0, 1)
class ExistsP(RProp):
    dom: RType
    body: RProp


@node(0, 0, 0)
class Eq(RProp):
    ty: RType
    lhs: RTerm
    rhs: RTerm


# terms

@node(0)
class Var(RTerm):
    idx: int


@node()
class UnitVal(RTerm):
    pass


@node(0, 1)
class Lam(RTerm):
    ty: RType
    body: RTerm


@node(0, 0)
class App(RTerm):
    fn: RTerm
    arg: RTerm


@node(0, 0)
class Pair(RTerm):
    left: RTerm
    right: RTerm


@node(0, 0, 2, 1)
class LetPair(RTerm):
    annot: RType
    scrut: RTerm
    body: RTerm
    motive: Optional[RType] = None


@node(0)
class Inl(RTerm):
    arg: RTerm


@node(0)
class Inr(RTerm):
    arg: RTerm


@node(0, 1, 0, 1, 1)
class Cases(RTerm):
    annot: RType
    motive: RType
    scrut: RTerm
    left: RTerm
    right: RTerm


@node(0, 1)
class LamPr(RTerm):
    hyp: RProp
    body: RTerm


@node(0, 0)
class AppPr(RTerm):
    fn: RTerm
    pf: RProof


@node(0, 0)
class SetIntro(RTerm):
    val: RTerm
    pf: RProof


@node(0, 0, 2, 1)
class LetSet(RTerm):
    annot: RType
    scrut: RTerm
    body: RTerm
    motive: Optional[RType] = None


@node(0, 1)
class LamIr(RTerm):
    ty: RType
    body: RTerm


@node(0, 0)
class AppIr(RTerm):
    fn: RTerm
    arg: RTerm


@node(0, 0)
class ReprPair(RTerm):
    ghost: RTerm
    wit: RTerm


@node(0, 0, 2, 1)
class LetRepr(RTerm):
    annot: RType
    scrut: RTerm
    body: RTerm
    motive: Optional[RType] = None


@node()
class Zero(RTerm):
    pass


@node()
class Succ(RTerm):
    pass


@node(1, 0, 0, 2)
class Natrec(RTerm):
    motive: RType
    scrut: RTerm
    zero: RTerm
    succ: RTerm


@node(0)
class Absurd(RTerm):
    pf: RProof


# proofs

@node(0)
class VarPr(RProof):
    idx: int


@node()
class TrueIntro(RProof):
    pass


@node(0)
class AbsurdPr(RProof):
    pf: RProof


@node(0, 1)
class ImpIntro(RProof):
    hyp: RProp
    body: RProof


@node(0, 0)
class ModusPonens(RProof):
    fn: RProof
    arg: RProof


@node(0, 0)
class AndIntro(RProof):
    left: RProof
    right: RProof


@node(0, 0, 2, 1)
class LetAnd(RProof):
    annot: RProp
    scrut: RProof
    body: RProof
    motive: Optional[RProp] = None


@node(0)
class OrlIntro(RProof):
    pf: RProof


@node(0)
class OrrIntro(RProof):
    pf: RProof


@node(0, 1, 0, 1, 1)
class CasesOr(RProof):
    annot: RProp
    motive: RProp
    scrut: RProof
    left: RProof
    right: RProof


@node(0, 1)
class Gen(RProof):
    ty: RType
    body: RProof


@node(0, 0)
class Spec(RProof):
    pf: RProof
    arg: RTerm


@node(0, 0)
class Wit(RProof):
    arg: RTerm
    pf: RProof


@node(0, 0, 2, 1)
class LetExists(RProof):
    annot: RProp
    scrut: RProof
    body: RProof
    motive: Optional[RProp] = None


@node(0, 0, 2, 1)
class LetPairPr(RProof):
    annot: RType
    scrut: RTerm
    body: RProof
    motive: Optional[RProp] = None


@node(0, 0, 2, 1)
class LetSetPr(RProof):
    annot: RType
    scrut: RTerm
    body: RProof
    motive: Optional[RProp] = None


@node(0, 0, 2, 1)
class LetReprPr(RProof):
    annot: RType
    scrut: RTerm
    body: RProof
    motive: Optional[RProp] = None


@node(1, 0, 0, 0, 0)
class SubstPr(RProof):
    motive: RProp
    lhs: RTerm
    rhs: RTerm
    eq: RProof
    base: RProof


@node(0, 1, 0, 1, 1)
class CasesPr(RProof):
    annot: RType
    motive: RProp
    scrut: RTerm
    left: RProof
    right: RProof


@node(1, 0, 0, 2)
class IndPr(RProof):
    motive: RProp
    scrut: RTerm
    zero: RProof
    succ: RProof


# axioms

@node(0)
class Rfl(RProof):
    term: RTerm


@node(0)
class Uniq(RProof):
    term: RTerm


@node(0, 0, 0)
class Discr(RProof):
    left: RTerm
    right: RTerm
    pf: RProof


@node(0, 1, 0)
class BetaPr(RProof):
    hyp: RProp
    body: RTerm
    pf: RProof


@node(0, 1, 0)
class BetaTy(RProof):
    ty: RType
    body: RTerm
    arg: RTerm


@node(0, 1, 0)
class BetaIr(RProof):
    ty: RType
    body: RTerm
    arg: RTerm


@node(0, 1, 1, 1, 0)
class BetaLeft(RProof):
    annot: RType
    motive: RType
    left: RTerm
    right: RTerm
    arg: RTerm


@node(0, 1, 1, 1, 0)
class BetaRight(RProof):
    annot: RType
    motive: RType
    left: RTerm
    right: RTerm
    arg: RTerm


@node(1, 0, 2)
class BetaZero(RProof):
    motive: RType
    zero: RTerm
    succ: RTerm


@node(1, 0, 0, 2)
class BetaSucc(RProof):
    motive: RType
    scrut: RTerm
    zero: RTerm
    succ: RTerm


@node(0, 1, 0, 0, 2)
class BetaPair(RProof):
    annot: RType
    motive: Optional[RType]
    left: RTerm
    right: RTerm
    body: RTerm


@node(0, 1, 0, 0, 2)
class BetaSet(RProof):
    annot: RType
    motive: Optional[RType]
    val: RTerm
    pf: RProof
    body: RTerm


@node(0, 1, 0, 0, 2)
class BetaRepr(RProof):
    annot: RType
    motive: Optional[RType]
    ghost: RTerm
    wit: RTerm
    body: RTerm


@node(0)
class EtaTy(RProof):
    fn: RTerm


@node(0, 1, 0, 0)
class IrPr(RProof):
    hyp: RProp
    body: RTerm
    left: RProof
    right: RProof


@node(0, 0, 0)
class IrTy(RProof):
    fn: RTerm
    left: RTerm
    right: RTerm


@node(0, 0, 0, 1)
class EtaIr(RProof):
    left: RTerm
    right: RTerm
    inhab: RTerm
    pf: RProof


@node(0, 0, 0, 1)
class EtaPr(RProof):
    left: RTerm
    right: RTerm
    inhab: RProof
    pf: RProof


VARIABLES = (Var, VarPr)


def children(e):
    """Yield ``(field_name, child, binders)`` for every non-empty child."""
    if isinstance(e, VARIABLES):
        return
    for f, b in zip(fields(e), e.binds):
        c = getattr(e, f.name)
        if c is not None:
            yield f.name, c, b


def rebuild(e, fn: Callable):
    """Apply ``fn(child, binders)`` to every child and rebuild the node."""
    if isinstance(e, VARIABLES):
        return e
    vals = []
    changed = False
    for f, b in zip(fields(e), e.binds):
        c = getattr(e, f.name)
        if c is None:
            vals.append(None)
            continue
        n = fn(c, b)
        changed = changed or n is not c
        vals.append(n)
    return type(e)(*vals) if changed else e


def lift(e, cutoff: int = 0, amount: int = 1):
    """Shift free indices ``>= cutoff`` up by ``amount``."""
    if amount == 0:
        return e
    match e:
        case Var(i):
            return Var(i + amount) if i >= cutoff else e
        case VarPr(i):
            return VarPr(i + amount) if i >= cutoff else e
    return rebuild(e, lambda c, b: lift(c, cutoff + b, amount))


class KindError(Exception):
    """A substitution placed a proof in a term slot or the reverse."""


class Subst:
    """A map from free indices to a variable index, a term, or a proof.

    Images that are plain integers rename the variable and keep the kind of
    each occurrence, so one substitution serves term and proof variables.
    """

    def __init__(self, fn: Callable[[int], object]):
        self.fn = fn

    def __call__(self, i: int):
        return self.fn(i)

    def up(self, n: int = 1) -> "Subst":
        if n == 0:
            return self

        def fn(i):
            if i < n:
                return i
            v = self.fn(i - n)
            return v + n if isinstance(v, int) else lift(v, 0, n)

        return Subst(fn)

    def then(self, other: "Subst") -> "Subst":
        """Composition: apply ``self`` first, then ``other``."""
        return Subst(lambda i: _image(other, self.fn(i)))

    @staticmethod
    def identity() -> "Subst":
        return Subst(lambda i: i)

    @staticmethod
    def shift(amount: int, cutoff: int = 0) -> "Subst":
        return Subst(lambda i: i + amount if i >= cutoff else i)

    @staticmethod
    def single(img) -> "Subst":
        """``[img/0]``: replace index 0 and lower the rest."""
        return Subst(lambda i: img if i == 0 else i - 1)

    @staticmethod
    def many(imgs) -> "Subst":
        """Replace indices ``0..k-1``; ``imgs`` lists outermost first."""
        imgs = list(imgs)
        k = len(imgs)
        return Subst(lambda i: imgs[k - 1 - i] if i < k else i - k)


def _image(sigma: Subst, v):
    return sigma(v) if isinstance(v, int) else apply_subst(sigma, v)


def apply_subst(sigma: Subst, e):
    """Capture-avoiding simultaneous substitution ``[sigma]e``."""
    match e:
        case Var(i):
            v = sigma(i)
            if isinstance(v, int):
                return Var(v)
            if isinstance(v, RProof):
                raise KindError(f"proof substituted for term variable {i}")
            return v
        case VarPr(i):
            v = sigma(i)
            if isinstance(v, int):
                return VarPr(v)
            if not isinstance(v, RProof):
                raise KindError(f"term substituted for proof variable {i}")
            return v
    return rebuild(e, lambda c, b: apply_subst(sigma.up(b), c))


def subst0(e, img):
    """``[img/x]e`` for ``e`` under one binder ``x``."""
    return apply_subst(Subst.single(img), e)


def instantiate(e, imgs):
    """Replace the innermost ``len(imgs)`` binders; ``imgs`` outermost first."""
    return apply_subst(Subst.many(imgs), e)


def rebind(e, img, k: int):
    """Move ``e`` from scope ``G, z`` to ``G, x1..xk`` with ``z := img``."""
    return apply_subst(Subst(lambda i: img if i == 0 else i - 1 + k), e)


def free_indices(e, depth: int = 0, acc=None) -> set:
    """Set of free indices of ``e``."""
    if acc is None:
        acc = set()
    match e:
        case Var(i) | VarPr(i):
            if i >= depth:
                acc.add(i - depth)
            return acc
    for _, c, b in children(e):
        free_indices(c, depth + b, acc)
    return acc


def lower(e, amount: int = 1):
    """Inverse of ``lift(e, 0, amount)``; None if a dropped index occurs."""
    if any(i < amount for i in free_indices(e)):
        return None
    return apply_subst(Subst(lambda i: i - amount), e)


def alpha_eq(a, b) -> bool:
    """Alpha-equivalence, which in de Bruijn form is structural equality."""
    return a == b


def scope_ok(e, n: int) -> bool:
    """True iff every free index of ``e`` is below ``n``."""
    return all(i < n for i in free_indices(e))


def size(e) -> int:
    if isinstance(e, VARIABLES):
        return 1
    return 1 + sum(size(c) for _, c, _ in children(e))


def numeral(n: int) -> RTerm:
    t = Zero()
    for _ in range(n):
        t = App(Succ(), t)
    return t


def as_numeral(t) -> Optional[int]:
    n = 0
    while isinstance(t, App) and isinstance(t.fn, Succ):
        n += 1
        t = t.arg
    return n if isinstance(t, Zero) else None


def category(e) -> str:
    for cls, name in ((RType, "type"), (RProp, "prop"), (RTerm, "term"), (RProof, "proof")):
        if isinstance(e, cls):
            return name
    raise TypeError(f"not a core expression: {e!r}")
