"""Nondeterministic automata over obligation sets."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from ..trace.model import SymbolTable, Trace
from .afw import Afw
from .guards import Guard, TRUE_GUARD, conjoin, matches

logger = logging.getLogger("dynauto.automata")


@dataclass(frozen=True)
class Nfa:
    symbols: SymbolTable
    states: tuple[frozenset[int], ...]        # state id -> AFW obligation set
    initial: frozenset[int]
    transitions: tuple[tuple[int, Guard, int], ...]
    finals: frozenset[int]

    @cached_property
    def outgoing(self) -> tuple[tuple[tuple[Guard, int], ...], ...]:
        table: list[list[tuple[Guard, int]]] = [[] for _ in self.states]
        for source, guard, target in self.transitions:
            table[source].append((guard, target))
        return tuple(tuple(edges) for edges in table)

    def label(self, state: int) -> str:
        return "{" + ",".join(str(q) for q in sorted(self.states[state])) + "}"


def _dominated(edges: list[tuple[Guard, frozenset[int]]]) -> list[tuple[Guard, frozenset[int]]]:
    """Drop an edge when another with a weaker guard reaches fewer obligations."""
    unique = list(dict.fromkeys(edges))
    return [(g, t) for g, t in unique
            if not any((h, u) != (g, t) and h <= g and u <= t for h, u in unique)]


def combined_moves(afw: Afw, obligations: frozenset[int]) -> list[tuple[Guard, frozenset[int]]]:
    """One satisfiable conjunct per obligation, joined into a single guarded move."""
    moves: list[tuple[Guard, frozenset[int]]] = [(TRUE_GUARD, frozenset())]
    for state in sorted(obligations):
        extended = []
        for guard, target in moves:
            for conjunct in afw.delta[state]:
                merged = conjoin(guard, conjunct.conditions)
                if merged is not None:
                    extended.append((merged, target | conjunct.successors))
        moves = _dominated(extended)
    return _dominated([(guard, afw.normalize(target)) for guard, target in moves])


def afw_to_nfa(afw: Afw) -> Nfa:
    start = afw.normalize({afw.initial})
    ids = {start: 0}
    queue = deque([start])
    transitions: list[tuple[int, Guard, int]] = []
    while queue:
        obligations = queue.popleft()
        for guard, target in combined_moves(afw, obligations):
            if target not in ids:
                ids[target] = len(ids)
                queue.append(target)
            transitions.append((ids[obligations], guard, ids[target]))
    states = tuple(ids)
    finals = frozenset(i for i, s in enumerate(states) if not s)
    logger.debug("nfa built: %d states, %d transitions", len(states), len(transitions))
    return Nfa(afw.symbols, states, frozenset({0}), tuple(transitions), finals)


def nfa_accepts(nfa: Nfa, trace: Trace) -> bool:
    current = set(nfa.initial)
    for letter in trace.letters():
        current = {target for state in current
                   for guard, target in nfa.outgoing[state] if matches(guard, letter)}
        if not current:
            return False
    return bool(current & nfa.finals)
