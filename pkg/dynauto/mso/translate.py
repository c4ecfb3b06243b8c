"""Dynamic formulas into MSO(<).

`st_m` / `st_p` are the compositional translations: one first-order
quantifier per modality, one second-order quantifier per star. `mso_enc`
names every non-atomic closure member with a predicate Q<n> and constrains
each pointwise.
"""

from __future__ import annotations

from ..logic.formula import (
    Box, Choice, Diamond, DynFormula, Falsity, Neg, PathExpr, Prop, Seq, Star, Step, Test,
    Truth, core, desugar_path, guard_stars, positive_closure,
)
from .formula import (
    FALSUM, VERUM, And, Bound, Eq, ExistsFO, ExistsSO, ForallFO, Iff, Implies, Member,
    MsoFormula, NextIn, Not, Or, Succ, VarGen, conjunction,
)

ENTRY_VAR = "T"


# ------------------------------------------------------------------ #
#  Standard translation                                               #
# ------------------------------------------------------------------ #
def st_m(w: str, formula: DynFormula, gen: VarGen | None = None) -> MsoFormula:
    """MSO formula with free variable `w` true exactly where `formula` holds."""
    return _st_m(w, core(formula), gen or VarGen())


def st_p(w: str, v: str, path: PathExpr, gen: VarGen | None = None) -> MsoFormula:
    """MSO formula with free `w`, `v` true exactly for pairs related by `path`."""
    return _st_p(w, v, path, gen or VarGen())


def _st_m(w: str, formula: DynFormula, gen: VarGen) -> MsoFormula:
    match formula:
        case Truth():
            return VERUM
        case Falsity():
            return FALSUM
        case Prop(name):
            return Member(name, w)
        case Neg(arg):
            return Not(_st_m(w, arg, gen))
        case Box(path, body):
            v = gen.fo()
            return ForallFO(v, Implies(_st_p(w, v, path, gen), _st_m(v, body, gen)))
        case Diamond(path, body):
            v = gen.fo()
            return ExistsFO(v, And(_st_p(w, v, path, gen), _st_m(v, body, gen)))
    return _st_m(w, core(formula), gen)


def _st_p(w: str, v: str, path: PathExpr, gen: VarGen) -> MsoFormula:
    match path:
        case Step():
            return Succ(w, v)
        case Test(formula):
            return And(Eq(w, v), _st_m(w, formula, gen))
        case Choice(left, right):
            return Or(_st_p(w, v, left, gen), _st_p(w, v, right, gen))
        case Seq(left, right):
            u = gen.fo()
            return ExistsFO(u, And(_st_p(w, u, left, gen), _st_p(u, v, right, gen)))
        case Star(body):
            X = gen.so()
            x, y = gen.fo(), gen.fo()
            regular = ForallFO(x, ForallFO(y, Implies(NextIn(X, x, y), _st_p(x, y, body, gen))))
            return ExistsSO(X, conjunction([Member(X, w), Member(X, v), Bound(X, w, v), regular]))
    return _st_p(w, v, desugar_path(path), gen)


# ------------------------------------------------------------------ #
#  Closure encoding                                                   #
# ------------------------------------------------------------------ #
class _Encoding:
    def __init__(self, formula: DynFormula, gen: VarGen):
        self.gen = gen
        self.members = [m for m in positive_closure(formula)
                        if not isinstance(m, (Prop, Truth, Falsity))]
        self.names = {m: gen.pred() for m in self.members}

    def ref(self, member: DynFormula, x: str) -> MsoFormula:
        match member:
            case Truth():
                return VERUM
            case Falsity():
                return FALSUM
            case Prop(name):
                return Member(name, x)
        return Member(self.names[member], x)

    def constraint(self, member: DynFormula, x: str) -> MsoFormula:
        ref = self.ref
        match member:
            case Neg(arg):
                rhs = Not(ref(arg, x))
            case Diamond(Step(), body):
                v = self.gen.fo()
                rhs = ExistsFO(v, And(Succ(x, v), ref(body, v)))
            case Box(Step(), body):
                v = self.gen.fo()
                rhs = ForallFO(v, Implies(Succ(x, v), ref(body, v)))
            case Diamond(Test(test), body):
                rhs = And(ref(test, x), ref(body, x))
            case Box(Test(test), body):
                rhs = Implies(ref(test, x), ref(body, x))
            case Diamond(Choice(l, r), body):
                rhs = Or(ref(Diamond(l, body), x), ref(Diamond(r, body), x))
            case Box(Choice(l, r), body):
                rhs = And(ref(Box(l, body), x), ref(Box(r, body), x))
            case Diamond(Seq(l, r), body):
                rhs = ref(Diamond(l, Diamond(r, body)), x)
            case Box(Seq(l, r), body):
                rhs = ref(Box(l, Box(r, body)), x)
            case Diamond(Star(inner) as path, body):
                rhs = Or(ref(body, x), ref(Diamond(inner, Diamond(path, body)), x))
            case Box(Star(inner) as path, body):
                rhs = And(ref(body, x), ref(Box(inner, Box(path, body)), x))
            case _:
                raise TypeError(f"not a core closure member: {member!r}")
        return Iff(ref(member, x), rhs)

    def same_point(self, member: DynFormula) -> list[DynFormula]:
        """Named members whose value at x the constraint of `member` reads at x."""
        match member:
            case Diamond(Step(), _) | Box(Step(), _):
                found = []
            case Neg(arg):
                found = [arg]
            case Diamond(Test(test), body) | Box(Test(test), body):
                found = [test, body]
            case Diamond(Choice(l, r), body) | Box(Choice(l, r), body):
                modal = type(member)
                found = [modal(l, body), modal(r, body)]
            case Diamond(Seq(l, r), body) | Box(Seq(l, r), body):
                modal = type(member)
                found = [modal(l, modal(r, body))]
            case Diamond(Star(inner) as path, body) | Box(Star(inner) as path, body):
                modal = type(member)
                found = [body, modal(inner, modal(path, body))]
            case _:
                found = []
        return [m for m in found if m in self.names]

    def dependencies_first(self) -> list[DynFormula]:
        """Members ordered so that same-point dependencies precede dependents."""
        done: dict[DynFormula, None] = {}
        active: set[DynFormula] = set()

        def visit(member: DynFormula):
            if member in done or member in active:
                return
            active.add(member)
            for dep in self.same_point(member):
                visit(dep)
            active.discard(member)
            done[member] = None

        for member in self.members:
            visit(member)
        return list(done)


def mso_enc(t: str, formula: DynFormula, gen: VarGen | None = None) -> MsoFormula:
    """∃Q… (Q_φ(t) ∧ ∀x ⋀ constraints), one predicate per non-atomic closure member.

    Stars are guarded first, so every definition refers to the same point only
    through strictly smaller members. The quantifier block lists dependents
    first; the evaluator assigns variables innermost-first.
    """
    gen = gen or VarGen()
    formula = guard_stars(core(formula))
    enc = _Encoding(formula, gen)
    if not enc.members:
        return enc.ref(formula, t)
    x = gen.fo()
    constraints = [enc.constraint(m, x) for m in enc.members]
    result: MsoFormula = And(enc.ref(formula, t), ForallFO(x, conjunction(constraints)))
    for member in enc.dependencies_first():
        result = ExistsSO(enc.names[member], result)
    return result


def predicate_names(formula: DynFormula) -> dict[str, DynFormula]:
    """Q<n> name → closure member, as `mso_enc` assigns them."""
    enc = _Encoding(guard_stars(core(formula)), VarGen())
    return {name: member for member, name in enc.names.items()}
