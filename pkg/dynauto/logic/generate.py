"""Seeded random formulas for round-trip and differential suites."""

from __future__ import annotations

import numpy as np

from .formula import (
    FALSE, STEP, TRUE,
    Always, And, Box, Choice, Diamond, DynFormula, Eventually, Final, Implies,
    Neg, Next, Or, PathExpr, Prop, PropPath, Release, Seq, Star, Test, Until,
    WeakNext,
)

_CORE_KINDS = ("neg", "diamond", "box")
_BOOLEAN_KINDS = ("and", "or")
_SUGAR_KINDS = ("implies", "next", "weaknext", "eventually", "always", "until", "release")


def random_formula(rng: np.random.RandomState, atoms: list[str], depth: int = 3, *,
                   sugar: bool = True, theory: bool = False) -> DynFormula:
    """Random formula of nesting depth at most `depth`.

    `theory=True` restricts the result to connectives TheoryGrammar has tokens
    for; `sugar=False` restricts it to the core grammar.
    """
    if depth <= 0 or rng.rand() < 0.2:
        leaves: list[DynFormula] = [Prop(a) for a in atoms] + [TRUE, FALSE]
        if sugar and not theory:
            leaves.append(Final())
        return leaves[rng.randint(len(leaves))]

    kinds = list(_CORE_KINDS)
    if sugar or theory:
        kinds += _BOOLEAN_KINDS
    if sugar and not theory:
        kinds += _SUGAR_KINDS
    kind = kinds[rng.randint(len(kinds))]

    def sub() -> DynFormula:
        return random_formula(rng, atoms, depth - 1, sugar=sugar, theory=theory)

    def path() -> PathExpr:
        return random_path(rng, atoms, depth - 1, sugar=sugar, theory=theory)

    match kind:
        case "neg":
            return Neg(sub())
        case "diamond":
            return Diamond(path(), sub())
        case "box":
            return Box(path(), sub())
        case "and":
            return And(sub(), sub())
        case "or":
            return Or(sub(), sub())
        case "implies":
            return Implies(sub(), sub())
        case "next":
            return Next(sub())
        case "weaknext":
            return WeakNext(sub())
        case "eventually":
            return Eventually(sub())
        case "always":
            return Always(sub())
        case "until":
            return Until(sub(), sub())
        case _:
            return Release(sub(), sub())


def random_path(rng: np.random.RandomState, atoms: list[str], depth: int = 2, *,
                sugar: bool = True, theory: bool = False) -> PathExpr:
    if depth <= 0 or rng.rand() < 0.25:
        if sugar and not theory and rng.rand() < 0.3:
            return PropPath(Prop(atoms[rng.randint(len(atoms))]))
        return STEP if rng.rand() < 0.6 else Test(Prop(atoms[rng.randint(len(atoms))]))

    def sub() -> PathExpr:
        return random_path(rng, atoms, depth - 1, sugar=sugar, theory=theory)

    choice = rng.randint(4)
    if choice == 0:
        return Test(random_formula(rng, atoms, depth - 1, sugar=sugar, theory=theory))
    if choice == 1:
        return Choice(sub(), sub())
    if choice == 2:
        return Seq(sub(), sub())
    return Star(sub())
