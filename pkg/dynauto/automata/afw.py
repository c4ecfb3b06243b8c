"""Alternating automata for dynamic formulas.

States are NNF closure members; the transition of a state is kept in
disjunctive normal form as an ordered tuple of conjuncts. A conjunct pairs a
guard over the letter (atoms and `last`, each required in or out) with the
set of states every branch must continue in. The empty conjunct reaches ⊤;
an empty tuple is ⊥.

Only the bodies of ⟨τ⟩ and [τ] become successor states, so the automaton
holds exactly the states reachable from the initial formula.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable

from ..config import CONFIG
from ..errors import ResourceLimitError
from ..logic.formula import (
    RESERVED_ATOM,
    Box, Choice, Diamond, DynFormula, Falsity, Neg, Prop, Seq, Star, Step, Test,
    Truth, atoms, core, is_test_only, nnf, size,
)
from ..logic.printer import to_text
from ..trace.model import Letter, SymbolTable, Trace
from .guards import Guard, TRUE_GUARD, conjoin, matches

logger = logging.getLogger("dynauto.afw")


@dataclass(frozen=True)
class Conjunct:
    conditions: Guard
    successors: frozenset

    def __repr__(self) -> str:
        return f"Conjunct({sorted(self.conditions)}, {sorted(self.successors, key=str)})"


Dnf = tuple[Conjunct, ...]

TOP: Dnf = (Conjunct(TRUE_GUARD, frozenset()),)
BOTTOM: Dnf = ()


def prune(conjuncts: Iterable[Conjunct]) -> Dnf:
    """Drop duplicates and conjuncts subsumed by another (weaker guard, fewer successors)."""
    unique = list(dict.fromkeys(conjuncts))
    kept = []
    for candidate in unique:
        if not any(other is not candidate
                   and other.conditions <= candidate.conditions
                   and other.successors <= candidate.successors
                   for other in unique):
            kept.append(candidate)
    return tuple(kept)


def dnf_or(*parts: Dnf) -> Dnf:
    return prune(c for part in parts for c in part)


def dnf_and(left: Dnf, right: Dnf) -> Dnf:
    combined = []
    for a, b in product(left, right):
        conditions = conjoin(a.conditions, b.conditions)
        if conditions is not None:
            combined.append(Conjunct(conditions, a.successors | b.successors))
    return prune(combined)


def _literal(name: str, polarity: bool) -> Guard:
    return frozenset({(name, polarity)})


class TransitionBuilder:
    """Symbolic δ over NNF formulas.

    Unfolding a star may come back to the same star formula before any τ is
    consumed (e.g. ⟨(a? + τ)*⟩φ). That re-entry contributes ⊥ under a diamond
    and ⊤ under a box, the least and greatest fixpoints respectively.
    Results computed outside any such unfolding are cached per formula.
    """

    def __init__(self):
        self._cache: dict[DynFormula, Dnf] = {}

    def delta(self, formula: DynFormula, visiting: frozenset = frozenset()) -> Dnf:
        if not visiting and formula in self._cache:
            return self._cache[formula]
        result = self._delta(formula, visiting)
        if not visiting:
            self._cache[formula] = result
        return result

    def _delta(self, formula: DynFormula, visiting: frozenset) -> Dnf:
        d = self.delta
        match formula:
            case Truth():
                return TOP
            case Falsity():
                return BOTTOM
            case Prop(name):
                return (Conjunct(_literal(name, True), frozenset()),)
            case Neg(Prop(name)):
                return (Conjunct(_literal(name, False), frozenset()),)
            case Neg():
                return d(nnf(formula), visiting)
            case Diamond(Step(), body):
                return (Conjunct(_literal(RESERVED_ATOM, False), frozenset({body})),)
            case Diamond(Test(test), body):
                return dnf_and(d(test, visiting), d(body, visiting))
            case Diamond(Choice(left, right), body):
                return dnf_or(d(Diamond(left, body), visiting), d(Diamond(right, body), visiting))
            case Diamond(Seq(first, second), body):
                return d(Diamond(first, Diamond(second, body)), visiting)
            case Diamond(Star(inner), body):
                if is_test_only(inner):
                    return d(body, visiting)
                if formula in visiting:
                    return BOTTOM
                return dnf_or(d(body, visiting), d(Diamond(inner, formula), visiting | {formula}))
            case Box(Step(), body):
                return (Conjunct(_literal(RESERVED_ATOM, False), frozenset({body})),
                        Conjunct(_literal(RESERVED_ATOM, True), frozenset()))
            case Box(Test(test), body):
                return dnf_or(d(nnf(Neg(test)), visiting), d(body, visiting))
            case Box(Choice(left, right), body):
                return dnf_and(d(Box(left, body), visiting), d(Box(right, body), visiting))
            case Box(Seq(first, second), body):
                return d(Box(first, Box(second, body)), visiting)
            case Box(Star(inner), body):
                if is_test_only(inner):
                    return d(body, visiting)
                if formula in visiting:
                    return TOP
                return dnf_and(d(body, visiting), d(Box(inner, formula), visiting | {formula}))
        raise TypeError(f"not an NNF core formula: {formula!r}")


# ------------------------------------------------------------------ #
#  Automaton                                                          #
# ------------------------------------------------------------------ #
@dataclass(frozen=True)
class Afw:
    symbols: SymbolTable
    states: tuple[DynFormula, ...]          # state id -> NNF formula
    initial: int
    delta: tuple[tuple[Conjunct, ...], ...]  # state id -> conjuncts over state ids

    @cached_property
    def valid(self) -> frozenset[int]:
        """States whose transition contains the ⊤ conjunct; they never constrain a run."""
        return frozenset(q for q, conjuncts in enumerate(self.delta) if TOP[0] in conjuncts)

    def normalize(self, obligations: Iterable[int]) -> frozenset[int]:
        return frozenset(obligations) - self.valid

    def label(self, state: int) -> str:
        return to_text(self.states[state])

    def options(self, state: int, letter: Letter) -> list[frozenset[int]]:
        return [c.successors for c in self.delta[state] if matches(c.conditions, letter)]

    def step(self, obligations: frozenset[int], letter: Letter) -> set[frozenset[int]]:
        """Obligation sets reachable by one choice of satisfied conjunct per state."""
        choices = [self.options(q, letter) for q in sorted(obligations)]
        return {self.normalize(frozenset().union(*pick)) for pick in product(*choices)}

    @property
    def transition_count(self) -> int:
        return sum(len(conjuncts) for conjuncts in self.delta)


def build_afw(formula: DynFormula) -> Afw:
    """Compile `formula` (sugar allowed) into its reachable alternating automaton."""
    initial = nnf(core(formula))
    builder = TransitionBuilder()
    ids: dict[DynFormula, int] = {initial: 0}
    queue = deque([initial])
    raw: dict[DynFormula, Dnf] = {}
    while queue:
        state = queue.popleft()
        conjuncts = builder.delta(state)
        raw[state] = conjuncts
        fresh = {s for c in conjuncts for s in c.successors if s not in ids}
        for successor in sorted(fresh, key=lambda f: (size(f), to_text(f))):
            ids[successor] = len(ids)
            queue.append(successor)
    states = tuple(ids)
    delta = tuple(
        tuple(Conjunct(c.conditions, frozenset(ids[s] for s in c.successors)) for c in raw[state])
        for state in states
    )
    afw = Afw(SymbolTable.for_atoms(atoms(formula)), states, 0, delta)
    logger.debug("afw built: %d states, %d conjuncts", len(states), afw.transition_count)
    return afw


def antichain(sets: Iterable[frozenset]) -> set[frozenset]:
    """Keep only the minimal sets under inclusion."""
    kept: list[frozenset] = []
    # a set can only be subsumed by a smaller one
    for candidate in sorted(set(sets), key=len):
        if not any(other <= candidate for other in kept):
            kept.append(candidate)
    return set(kept)


def accepts(afw: Afw, trace: Trace) -> bool:
    """True iff some run tree of `afw` on `trace` discharges every branch."""
    frontier = {afw.normalize({afw.initial})}
    for letter in trace.letters():
        reached: set[frozenset[int]] = set()
        for obligations in frontier:
            reached |= afw.step(obligations, letter)
        frontier = antichain(reached)
        if not frontier:
            return False
    return frozenset() in frontier


# ------------------------------------------------------------------ #
#  Concrete δ                                                         #
# ------------------------------------------------------------------ #
_Explicit = frozenset[frozenset[DynFormula]]

_E_TOP: _Explicit = frozenset({frozenset()})
_E_BOTTOM: _Explicit = frozenset()


def _e_or(*parts: _Explicit) -> _Explicit:
    return frozenset(antichain(s for part in parts for s in part))


def _e_and(left: _Explicit, right: _Explicit) -> _Explicit:
    return frozenset(antichain(a | b for a in left for b in right))


def _explicit(formula: DynFormula, letter: Letter, visiting: frozenset) -> _Explicit:
    e = lambda f, v=visiting: _explicit(f, letter, v)
    match formula:
        case Truth():
            return _E_TOP
        case Falsity():
            return _E_BOTTOM
        case Prop(name):
            return _E_TOP if name in letter else _E_BOTTOM
        case Neg(Prop(name)):
            return _E_BOTTOM if name in letter else _E_TOP
        case Diamond(Step(), body):
            return _E_BOTTOM if RESERVED_ATOM in letter else frozenset({frozenset({body})})
        case Box(Step(), body):
            return _E_TOP if RESERVED_ATOM in letter else frozenset({frozenset({body})})
        case Diamond(Test(test), body):
            return _e_and(e(test), e(body))
        case Box(Test(test), body):
            return _e_or(e(nnf(Neg(test))), e(body))
        case Diamond(Choice(left, right), body):
            return _e_or(e(Diamond(left, body)), e(Diamond(right, body)))
        case Box(Choice(left, right), body):
            return _e_and(e(Box(left, body)), e(Box(right, body)))
        case Diamond(Seq(first, second), body):
            return e(Diamond(first, Diamond(second, body)))
        case Box(Seq(first, second), body):
            return e(Box(first, Box(second, body)))
        case Diamond(Star(inner), body):
            if is_test_only(inner):
                return e(body)
            if formula in visiting:
                return _E_BOTTOM
            return _e_or(e(body), e(Diamond(inner, formula), visiting | {formula}))
        case Box(Star(inner), body):
            if is_test_only(inner):
                return e(body)
            if formula in visiting:
                return _E_TOP
            return _e_and(e(body), e(Box(inner, formula), visiting | {formula}))
    raise TypeError(f"not an NNF core formula: {formula!r}")


def delta_explicit(afw: Afw, state: int, letter: Letter) -> frozenset[frozenset[int]]:
    """δ(state, letter) evaluated rule by rule on a concrete letter, as minimal successor sets."""
    if len(afw.symbols.atoms) > CONFIG.EXPLICIT_LETTER_CAP:
        raise ResourceLimitError(
            f"{len(afw.symbols.atoms)} atoms exceed EXPLICIT_LETTER_CAP={CONFIG.EXPLICIT_LETTER_CAP}")
    ids = {formula: q for q, formula in enumerate(afw.states)}
    return frozenset(frozenset(ids[f] for f in branch)
                     for branch in _explicit(afw.states[state], letter, frozenset()))


def delta_at(afw: Afw, state: int, letter: Letter) -> frozenset[frozenset[int]]:
    """The symbolic transition restricted to one letter, as minimal successor sets."""
    return frozenset(antichain(afw.options(state, letter)))
