"""Dynamic formulas and path expressions.

Two mutually recursive immutable ASTs:

  φ ::= tt | ff | a | !φ | <ρ>φ | [ρ]φ        (core)
        φ & φ | φ | φ | φ -> φ | X φ | wX φ | <> φ | [] φ | end | φ U φ | φ R φ
  ρ ::= step | φ? | ρ + ρ | ρ ; ρ | ρ*        (core)
        φ                                      (stands for φ?;step)

Everything here is a pure function over frozen dataclasses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ReservedAtomError

RESERVED_ATOM = "last"
ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class DynFormula:
    """Base class of formula nodes."""

    __slots__ = ()


class PathExpr:
    """Base class of path-expression nodes."""

    __slots__ = ()


# ------------------------------------------------------------------ #
#  Core formula nodes                                                 #
# ------------------------------------------------------------------ #
@dataclass(frozen=True)
class Truth(DynFormula):
    pass


@dataclass(frozen=True)
class Falsity(DynFormula):
    pass


@dataclass(frozen=True)
class Prop(DynFormula):
    name: str

    def __post_init__(self):
        if self.name == RESERVED_ATOM:
            raise ReservedAtomError(f"'{RESERVED_ATOM}' is reserved", 0, 0)
        if not ATOM_PATTERN.match(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True)
class Neg(DynFormula):
    arg: DynFormula


@dataclass(frozen=True)
class Diamond(DynFormula):
    path: PathExpr
    body: DynFormula


@dataclass(frozen=True)
class Box(DynFormula):
    path: PathExpr
    body: DynFormula


# ------------------------------------------------------------------ #
#  Sugar formula nodes                                                #
# ------------------------------------------------------------------ #
@dataclass(frozen=True)
class And(DynFormula):
    left: DynFormula
    right: DynFormula


@dataclass(frozen=True)
class Or(DynFormula):
    left: DynFormula
    right: DynFormula


@dataclass(frozen=True)
class Implies(DynFormula):
    left: DynFormula
    right: DynFormula


@dataclass(frozen=True)
class Next(DynFormula):
    arg: DynFormula


@dataclass(frozen=True)
class WeakNext(DynFormula):
    arg: DynFormula


@dataclass(frozen=True)
class Eventually(DynFormula):
    arg: DynFormula


@dataclass(frozen=True)
class Always(DynFormula):
    arg: DynFormula


@dataclass(frozen=True)
class Final(DynFormula):
    pass


@dataclass(frozen=True)
class Until(DynFormula):
    left: DynFormula
    right: DynFormula


@dataclass(frozen=True)
class Release(DynFormula):
    left: DynFormula
    right: DynFormula


# ------------------------------------------------------------------ #
#  Path nodes                                                         #
# ------------------------------------------------------------------ #
@dataclass(frozen=True)
class Step(PathExpr):
    pass


@dataclass(frozen=True)
class Test(PathExpr):
    formula: DynFormula


@dataclass(frozen=True)
class Choice(PathExpr):
    left: PathExpr
    right: PathExpr


@dataclass(frozen=True)
class Seq(PathExpr):
    left: PathExpr
    right: PathExpr


@dataclass(frozen=True)
class Star(PathExpr):
    body: PathExpr


@dataclass(frozen=True)
class PropPath(PathExpr):
    formula: DynFormula


CORE_FORMULAS = (Truth, Falsity, Prop, Neg, Diamond, Box)
CORE_PATHS = (Step, Test, Choice, Seq, Star)
BINARY_SUGAR = (And, Or, Implies, Until, Release)
UNARY_SUGAR = (Next, WeakNext, Eventually, Always)

TRUE = Truth()
FALSE = Falsity()
STEP = Step()


# ------------------------------------------------------------------ #
#  Structural queries                                                 #
# ------------------------------------------------------------------ #
def is_core(node: DynFormula | PathExpr) -> bool:
    """True iff no sugar node occurs anywhere in `node`."""
    match node:
        case Truth() | Falsity() | Prop() | Step():
            return True
        case Neg(arg):
            return is_core(arg)
        case Diamond(path, body) | Box(path, body):
            return is_core(path) and is_core(body)
        case Test(formula):
            return is_core(formula)
        case Choice(left, right) | Seq(left, right):
            return is_core(left) and is_core(right)
        case Star(body):
            return is_core(body)
    return False


def is_test_only(path: PathExpr) -> bool:
    """True iff `path` contains no step (a PropPath hides one)."""
    match path:
        case Step() | PropPath():
            return False
        case Test():
            return True
        case Choice(left, right) | Seq(left, right):
            return is_test_only(left) and is_test_only(right)
        case Star(body):
            return is_test_only(body)
    raise TypeError(f"not a path expression: {path!r}")


def atoms(node: DynFormula | PathExpr) -> frozenset[str]:
    """Atom names occurring in `node`."""
    found: set[str] = set()
    stack: list[DynFormula | PathExpr] = [node]
    while stack:
        current = stack.pop()
        if isinstance(current, Prop):
            found.add(current.name)
        else:
            stack.extend(_children(current))
    return frozenset(found)


def size(node: DynFormula | PathExpr) -> int:
    """Number of AST nodes."""
    return 1 + sum(size(child) for child in _children(node))


def _children(node: DynFormula | PathExpr) -> tuple:
    match node:
        case Neg(arg) | Next(arg) | WeakNext(arg) | Eventually(arg) | Always(arg):
            return (arg,)
        case Diamond(path, body) | Box(path, body):
            return (path, body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Until(l, r) | Release(l, r):
            return (l, r)
        case Test(formula) | PropPath(formula):
            return (formula,)
        case Choice(l, r) | Seq(l, r):
            return (l, r)
        case Star(body):
            return (body,)
    return ()


# ------------------------------------------------------------------ #
#  Desugaring                                                         #
# ------------------------------------------------------------------ #
def desugar(formula: DynFormula) -> DynFormula:
    """Rewrite every derived connective into Truth/Falsity/Prop/Neg/Diamond/Box."""
    match formula:
        case Truth() | Falsity() | Prop():
            return formula
        case Neg(arg):
            return Neg(desugar(arg))
        case Diamond(path, body):
            return Diamond(desugar_path(path), desugar(body))
        case Box(path, body):
            return Box(desugar_path(path), desugar(body))
        case And(l, r):
            return Diamond(Test(desugar(l)), desugar(r))
        case Or(l, r):
            return Diamond(Choice(Test(desugar(l)), Test(desugar(r))), TRUE)
        case Implies(l, r):
            return Box(Test(desugar(l)), desugar(r))
        case Next(arg):
            return Diamond(STEP, desugar(arg))
        case WeakNext(arg):
            return Box(STEP, desugar(arg))
        case Final():
            return Box(STEP, FALSE)
        case Eventually(arg):
            return Diamond(Star(STEP), desugar(arg))
        case Always(arg):
            return Box(Star(STEP), desugar(arg))
        case Until(l, r):
            return Diamond(Star(Seq(Test(desugar(l)), STEP)), desugar(r))
        case Release(l, r):
            return desugar(Or(Until(r, And(l, r)), Always(r)))
    raise TypeError(f"not a formula: {formula!r}")


def desugar_path(path: PathExpr) -> PathExpr:
    match path:
        case Step():
            return path
        case Test(formula):
            return Test(desugar(formula))
        case PropPath(formula):
            return Seq(Test(desugar(formula)), STEP)
        case Choice(l, r):
            return Choice(desugar_path(l), desugar_path(r))
        case Seq(l, r):
            return Seq(desugar_path(l), desugar_path(r))
        case Star(body):
            return Star(desugar_path(body))
    raise TypeError(f"not a path expression: {path!r}")


def core(formula: DynFormula) -> DynFormula:
    """desugar, skipping the copy when the input is already core."""
    return formula if is_core(formula) else desugar(formula)


# ------------------------------------------------------------------ #
#  Negation normal form                                               #
# ------------------------------------------------------------------ #
def nnf(formula: DynFormula) -> DynFormula:
    """Push negations down to atoms.

    Core input yields core output. Sugared input is normalized through the
    duals of each derived connective, so `!(a & b)` becomes `!a | !b`.
    """
    match formula:
        case Truth() | Falsity() | Prop() | Final():
            return formula
        case Neg(arg):
            return _negated(arg)
        case Diamond(path, body):
            return Diamond(nnf_path(path), nnf(body))
        case Box(path, body):
            return Box(nnf_path(path), nnf(body))
        case And(l, r):
            return And(nnf(l), nnf(r))
        case Or(l, r):
            return Or(nnf(l), nnf(r))
        case Implies(l, r):
            return Or(_negated(l), nnf(r))
        case Next(arg):
            return Next(nnf(arg))
        case WeakNext(arg):
            return WeakNext(nnf(arg))
        case Eventually(arg):
            return Eventually(nnf(arg))
        case Always(arg):
            return Always(nnf(arg))
        case Until(l, r):
            return Until(nnf(l), nnf(r))
        case Release(l, r):
            return Release(nnf(l), nnf(r))
    raise TypeError(f"not a formula: {formula!r}")


def _negated(formula: DynFormula) -> DynFormula:
    """nnf(Neg(formula))."""
    match formula:
        case Truth():
            return FALSE
        case Falsity():
            return TRUE
        case Prop():
            return Neg(formula)
        case Neg(arg):
            return nnf(arg)
        case Diamond(path, body):
            return Box(nnf_path(path), _negated(body))
        case Box(path, body):
            return Diamond(nnf_path(path), _negated(body))
        case And(l, r):
            return Or(_negated(l), _negated(r))
        case Or(l, r):
            return And(_negated(l), _negated(r))
        case Implies(l, r):
            return And(nnf(l), _negated(r))
        case Next(arg):
            return WeakNext(_negated(arg))
        case WeakNext(arg):
            return Next(_negated(arg))
        case Eventually(arg):
            return Always(_negated(arg))
        case Always(arg):
            return Eventually(_negated(arg))
        case Final():
            return Next(TRUE)
        case Until(l, r):
            return Release(_negated(l), _negated(r))
        case Release(l, r):
            return Until(_negated(l), _negated(r))
    raise TypeError(f"not a formula: {formula!r}")


def nnf_path(path: PathExpr) -> PathExpr:
    match path:
        case Step():
            return path
        case Test(formula):
            return Test(nnf(formula))
        case PropPath(formula):
            return PropPath(nnf(formula))
        case Choice(l, r):
            return Choice(nnf_path(l), nnf_path(r))
        case Seq(l, r):
            return Seq(nnf_path(l), nnf_path(r))
        case Star(body):
            return Star(nnf_path(body))
    raise TypeError(f"not a path expression: {path!r}")


# ------------------------------------------------------------------ #
#  Fischer-Ladner closure                                             #
# ------------------------------------------------------------------ #
def closure_children(member: DynFormula) -> tuple[DynFormula, ...]:
    """Members a core closure member contributes, in insertion order.

    Unfolding first (sequence, choice, star), then a test's formula, then the
    body. Boxes unfold like diamonds.
    """
    match member:
        case Neg(arg):
            return (arg,)
        case Diamond(path, body) | Box(path, body):
            modal = type(member)
            match path:
                case Step():
                    return (body,)
                case Test(test):
                    return (test, body)
                case Seq(first, second):
                    return (modal(first, modal(second, body)), body)
                case Choice(left, right):
                    return (modal(left, body), modal(right, body), body)
                case Star(inner):
                    return (modal(inner, modal(path, body)), body)
            raise TypeError(f"path is not core: {path!r}")
    return ()


def positive_closure(formula: DynFormula) -> tuple[DynFormula, ...]:
    """Closure members reachable by the unfolding rules, without rule-2 negations."""
    formula = core(formula)
    seen: dict[DynFormula, None] = {}
    stack = [formula]
    while stack:
        member = stack.pop()
        if member in seen:
            continue
        seen[member] = None
        stack.extend(reversed(closure_children(member)))
    return tuple(seen)


def closure(formula: DynFormula) -> tuple[DynFormula, ...]:
    """Fischer-Ladner closure: positive members followed by their negations."""
    members = dict.fromkeys(positive_closure(formula))
    for member in list(members):
        if not isinstance(member, Neg):
            members.setdefault(Neg(member), None)
    return tuple(members)


# ------------------------------------------------------------------ #
#  Star guarding                                                      #
# ------------------------------------------------------------------ #
def guard_stars(formula: DynFormula) -> DynFormula:
    """Rewrite every ρ* as (ne ρ)*, ne ρ being the part of ρ that moves forward.

    Pairs (k,k) of ρ are absorbed by the reflexive closure, so the rewrite
    keeps the meaning while every syntactic path under a star consumes a step.
    """
    match formula:
        case Truth() | Falsity() | Prop():
            return formula
        case Neg(arg):
            return Neg(guard_stars(arg))
        case Diamond(path, body):
            return Diamond(_guard_path(path), guard_stars(body))
        case Box(path, body):
            return Box(_guard_path(path), guard_stars(body))
    return guard_stars(desugar(formula))


def _guard_path(path: PathExpr) -> PathExpr:
    match path:
        case Step():
            return path
        case Test(formula):
            return Test(guard_stars(formula))
        case Choice(l, r):
            return Choice(_guard_path(l), _guard_path(r))
        case Seq(l, r):
            return Seq(_guard_path(l), _guard_path(r))
        case Star(body):
            moving = _progress(_guard_path(body))
            return Test(TRUE) if moving is None else Star(moving)
    return _guard_path(desugar_path(path))


def _progress(path: PathExpr) -> PathExpr | None:
    """Strictly forward part of `path`; None when it relates no (k, i) with i > k."""
    match path:
        case Step():
            return path
        case Test():
            return None
        case Choice(l, r):
            return _choice(_progress(l), _progress(r))
        case Seq(l, r):
            head = _progress(l)
            tail = _progress(r)
            first = None if head is None else Seq(head, r)
            second = None
            if tail is not None:
                stay = _identity(l)
                if stay == TRUE:
                    second = tail
                elif stay != FALSE:
                    second = Seq(Test(stay), tail)
            return _choice(first, second)
        case Star(body):
            head = _progress(body)
            return None if head is None else Seq(head, path)
    raise TypeError(f"path is not core: {path!r}")


def _identity(path: PathExpr) -> DynFormula:
    """Condition under which `path` relates a point to itself."""
    match path:
        case Step():
            return FALSE
        case Test(formula):
            return formula
        case Choice(l, r):
            return _or(_identity(l), _identity(r))
        case Seq(l, r):
            return _and(_identity(l), _identity(r))
        case Star():
            return TRUE
    raise TypeError(f"path is not core: {path!r}")


def _choice(left: PathExpr | None, right: PathExpr | None) -> PathExpr | None:
    if left is None:
        return right
    if right is None:
        return left
    return Choice(left, right)


def _and(left: DynFormula, right: DynFormula) -> DynFormula:
    if left == FALSE or right == FALSE:
        return FALSE
    if left == TRUE:
        return right
    if right == TRUE:
        return left
    return Diamond(Test(left), right)


def _or(left: DynFormula, right: DynFormula) -> DynFormula:
    if left == TRUE or right == TRUE:
        return TRUE
    if left == FALSE:
        return right
    if right == FALSE:
        return left
    return Diamond(Choice(Test(left), Test(right)), TRUE)
