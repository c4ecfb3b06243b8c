"""Monadic second-order logic of linear order.

Core grammar: X(x), x < y, negation, the binary connectives, and first- and
second-order quantifiers. Macro nodes (Succ, First, Last, Le, Eq, Bound,
Subset, SetEq, NextIn) keep translations readable; `expand()` rewrites each
into the core grammar. Variables introduced by an expansion come from a
`fresh` supplier (`Z<n>` under `expand_all`), a form no translation
generates; without one they are named `Z_<args>`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Callable

Fresh = Callable[[], str]


class MsoFormula:
    """Base class of MSO nodes."""

    __slots__ = ()


# ------------------------------------------------------------------ #
#  Core                                                               #
# ------------------------------------------------------------------ #
@dataclass(frozen=True)
class Verum(MsoFormula):
    pass


@dataclass(frozen=True)
class Falsum(MsoFormula):
    pass


@dataclass(frozen=True)
class Member(MsoFormula):
    so: str
    fo: str


@dataclass(frozen=True)
class Less(MsoFormula):
    left: str
    right: str


@dataclass(frozen=True)
class Not(MsoFormula):
    arg: MsoFormula


@dataclass(frozen=True)
class And(MsoFormula):
    left: MsoFormula
    right: MsoFormula


@dataclass(frozen=True)
class Or(MsoFormula):
    left: MsoFormula
    right: MsoFormula


@dataclass(frozen=True)
class Implies(MsoFormula):
    left: MsoFormula
    right: MsoFormula


@dataclass(frozen=True)
class Iff(MsoFormula):
    left: MsoFormula
    right: MsoFormula


@dataclass(frozen=True)
class ExistsFO(MsoFormula):
    var: str
    body: MsoFormula


@dataclass(frozen=True)
class ForallFO(MsoFormula):
    var: str
    body: MsoFormula


@dataclass(frozen=True)
class ExistsSO(MsoFormula):
    var: str
    body: MsoFormula


@dataclass(frozen=True)
class ForallSO(MsoFormula):
    var: str
    body: MsoFormula


VERUM = Verum()
FALSUM = Falsum()

QUANTIFIERS = (ExistsFO, ForallFO, ExistsSO, ForallSO)
CONNECTIVES = (And, Or, Implies, Iff)


# ------------------------------------------------------------------ #
#  Macros                                                             #
# ------------------------------------------------------------------ #
class Macro(MsoFormula):
    __slots__ = ()

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        raise NotImplementedError


def _helper(fresh: Fresh | None, *names: str) -> str:
    return fresh() if fresh is not None else "Z_" + "_".join(names)


def helper_names() -> Fresh:
    """Supplier of distinct helper names Z0, Z1, ..."""
    counter = count()
    return lambda: f"Z{next(counter)}"


@dataclass(frozen=True)
class Succ(Macro):
    """right = left + 1"""
    left: str
    right: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        z = _helper(fresh, self.left, self.right)
        return And(Less(self.left, self.right),
                   Not(ExistsFO(z, And(Less(self.left, z), Less(z, self.right)))))


@dataclass(frozen=True)
class First(Macro):
    var: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        z = _helper(fresh, self.var)
        return Not(ExistsFO(z, Less(z, self.var)))


@dataclass(frozen=True)
class Last(Macro):
    var: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        z = _helper(fresh, self.var)
        return Not(ExistsFO(z, Less(self.var, z)))


@dataclass(frozen=True)
class Eq(Macro):
    left: str
    right: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        return And(Not(Less(self.left, self.right)), Not(Less(self.right, self.left)))


@dataclass(frozen=True)
class Le(Macro):
    left: str
    right: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        return Not(Less(self.right, self.left))


@dataclass(frozen=True)
class Bound(Macro):
    """Every member of `so` lies in [low, high]."""
    so: str
    low: str
    high: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        z = _helper(fresh, self.so, self.low, self.high)
        return ForallFO(z, Implies(Member(self.so, z),
                                   And(Not(Less(z, self.low)), Not(Less(self.high, z)))))


@dataclass(frozen=True)
class Subset(Macro):
    left: str
    right: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        z = _helper(fresh, self.left, self.right)
        return ForallFO(z, Implies(Member(self.left, z), Member(self.right, z)))


@dataclass(frozen=True)
class SetEq(Macro):
    left: str
    right: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        return And(Subset(self.left, self.right).expand(fresh), Subset(self.right, self.left).expand(fresh))


@dataclass(frozen=True)
class NextIn(Macro):
    """`left` and `right` are consecutive members of `so`."""
    so: str
    left: str
    right: str

    def expand(self, fresh: Fresh | None = None) -> MsoFormula:
        z = _helper(fresh, self.so, self.left, self.right)
        between = And(And(Less(self.left, z), Less(z, self.right)), Member(self.so, z))
        return And(And(Less(self.left, self.right),
                       And(Member(self.so, self.left), Member(self.so, self.right))),
                   Not(ExistsFO(z, between)))


# ------------------------------------------------------------------ #
#  Traversal                                                          #
# ------------------------------------------------------------------ #
def expand_all(formula: MsoFormula, fresh: Fresh | None = None) -> MsoFormula:
    """Rewrite every macro, recursively, into the core grammar.

    Every helper variable gets its own name, so binders stay distinct.
    """
    fresh = fresh or helper_names()
    match formula:
        case Macro():
            return expand_all(formula.expand(fresh), fresh)
        case Not(arg):
            return Not(expand_all(arg, fresh))
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return type(formula)(expand_all(l, fresh), expand_all(r, fresh))
        case ExistsFO(v, b) | ForallFO(v, b) | ExistsSO(v, b) | ForallSO(v, b):
            return type(formula)(v, expand_all(b, fresh))
    return formula


def free_variables(formula: MsoFormula) -> tuple[frozenset[str], frozenset[str]]:
    """(free first-order, free second-order) variable names."""
    match formula:
        case Verum() | Falsum():
            return frozenset(), frozenset()
        case Member(so, fo):
            return frozenset({fo}), frozenset({so})
        case Less(l, r):
            return frozenset({l, r}), frozenset()
        case Macro():
            return free_variables(formula.expand())
        case Not(arg):
            return free_variables(arg)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            fl, sl = free_variables(l)
            fr, sr = free_variables(r)
            return fl | fr, sl | sr
        case ExistsFO(v, b) | ForallFO(v, b):
            fo, so = free_variables(b)
            return fo - {v}, so
        case ExistsSO(v, b) | ForallSO(v, b):
            fo, so = free_variables(b)
            return fo, so - {v}
    raise TypeError(f"not an MSO formula: {formula!r}")


def bound_variables(formula: MsoFormula) -> list[str]:
    """Every quantified variable, once per binder, in preorder (macros expanded)."""
    found: list[str] = []
    stack = [expand_all(formula)]
    while stack:
        node = stack.pop()
        match node:
            case ExistsFO(v, b) | ForallFO(v, b) | ExistsSO(v, b) | ForallSO(v, b):
                found.append(v)
                stack.append(b)
            case Not(arg):
                stack.append(arg)
            case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
                stack.extend((r, l))
    return found


def conjunction(parts: list[MsoFormula]) -> MsoFormula:
    if not parts:
        return VERUM
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = And(part, result)
    return result


class VarGen:
    """Fresh names: first-order V<n>, second-order X<n>, closure predicates Q<n>."""

    def __init__(self):
        self._fo = count()
        self._so = count()
        self._pred = count()

    def fo(self) -> str:
        return f"V{next(self._fo)}"

    def so(self) -> str:
        return f"X{next(self._so)}"

    def pred(self) -> str:
        return f"Q{next(self._pred)}"
