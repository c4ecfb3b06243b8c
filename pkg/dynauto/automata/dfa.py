"""Deterministic automata: determinization, acceptance, minimization.

DFAs produced here read plain trace states; their guards never mention
`last`. A state pairs an NFA macro-state with a flag recording whether the
letter just read, taken as the final letter, reaches an accepting NFA state.
The flagged states are the accepting ones, which gives the same shape as the
automata MONA computes for the MSO translations.

The empty word is not a trace, so the finality of an initial state without
incoming edges is free; both constructions below use that freedom to save a
state.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable

import numpy as np

from ..config import CONFIG
from ..errors import DynautoError, ResourceLimitError
from ..logic.formula import RESERVED_ATOM
from ..trace.model import Letter, SymbolTable, Trace, subsets
from .guards import (
    Guard, Tree, leaf, map_leaves, matches, node, restrict, tree_from_edges,
    tree_from_function, tree_paths,
)
from .nfa import Nfa

logger = logging.getLogger("dynauto.automata")


@dataclass(frozen=True)
class Dfa:
    symbols: SymbolTable
    initial: int
    edges: tuple[tuple[tuple[Guard, int], ...], ...]   # per state; disjoint and exhaustive
    finals: frozenset[int]
    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def order(self) -> list[str]:
        return list(self.symbols.atoms)

    @property
    def transition_count(self) -> int:
        return sum(len(out) for out in self.edges)

    def step(self, state: int, letter: Letter) -> int:
        for guard, target in self.edges[state]:
            if matches(guard, letter):
                return target
        raise DynautoError(f"state {state} has no transition for {sorted(letter)}")

    def tree(self, state: int) -> Tree:
        return tree_from_edges(list(self.edges[state]), self.order)


def letters(atoms: Iterable[str], with_last: bool = False,
            max_atoms: int | None = None) -> list[Letter]:
    """Every letter over `atoms`; with `last` variants when asked."""
    names = set(atoms) - {RESERVED_ATOM}
    cap = CONFIG.EXPLICIT_LETTER_CAP if max_atoms is None else max_atoms
    if len(names) > cap:
        raise ResourceLimitError(f"{len(names)} atoms exceed EXPLICIT_LETTER_CAP={cap}")
    plain = subsets(names)
    if not with_last:
        return plain
    return plain + [letter | {RESERVED_ATOM} for letter in plain]


def dfa_accepts(dfa: Dfa, trace: Trace) -> bool:
    state = dfa.initial
    for letter in trace.letters():
        state = dfa.step(state, letter)
    return state in dfa.finals


def _edges_from_tree(tree: Tree, ids: dict[Hashable, int]) -> tuple[tuple[Guard, int], ...]:
    return tuple((guard, ids[value]) for guard, value in tree_paths(tree))


# ------------------------------------------------------------------ #
#  Determinization                                                    #
# ------------------------------------------------------------------ #
def _macro_tree(nfa: Nfa, macro: frozenset[int], order: list[str]) -> Tree:
    """Decision tree over trace atoms whose leaves are (next macro-state, flag)."""
    pending = []
    for state in sorted(macro):
        for guard, target in nfa.outgoing[state]:
            polarity = next((p for n, p in guard if n == RESERVED_ATOM), None)
            pending.append((guard - {(RESERVED_ATOM, True), (RESERVED_ATOM, False)}, target, polarity))

    def build(items: list, depth: int) -> Tree:
        if depth == len(order) or all(not guard for guard, _, _ in items):
            enabled = [(target, polarity) for guard, target, polarity in items if not guard]
            following = frozenset(t for t, p in enabled if p is not True)
            flag = any(t in nfa.finals for t, p in enabled if p is not False)
            return leaf((following, flag))
        name = order[depth]
        if all(name not in {n for n, _ in guard} for guard, _, _ in items):
            return build(items, depth + 1)
        low = [(g, t, p) for g, t, p in ((restrict(g, name, False), t, p) for g, t, p in items) if g is not None]
        high = [(g, t, p) for g, t, p in ((restrict(g, name, True), t, p) for g, t, p in items) if g is not None]
        return node(name, build(low, depth + 1), build(high, depth + 1))

    return build(pending, 0)


def nfa_to_dfa(nfa: Nfa, state_cap: int | None = None) -> Dfa:
    cap = CONFIG.DFA_STATE_CAP if state_cap is None else state_cap
    order = list(nfa.symbols.atoms)
    trees: dict[frozenset[int], Tree] = {}

    def explore(start: tuple[frozenset[int], bool]) -> dict[tuple, int]:
        ids = {start: 0}
        queue = deque([start])
        while queue:
            macro, _ = queue.popleft()
            if macro not in trees:
                trees[macro] = _macro_tree(nfa, macro, order)
            for _, value in tree_paths(trees[macro]):
                if value not in ids:
                    if len(ids) >= cap:
                        raise ResourceLimitError(f"determinization exceeded {cap} states")
                    ids[value] = len(ids)
                    queue.append(value)
        return ids

    initial = frozenset(nfa.initial)
    ids = explore((initial, False))
    if (initial, True) in ids:
        ids = explore((initial, True))
    keys = list(ids)
    edges = tuple(_edges_from_tree(trees[macro], ids) for macro, _ in keys)
    finals = frozenset(i for i, (_, flag) in enumerate(keys) if flag)
    labels = tuple("{" + ",".join(map(str, sorted(m))) + "}" + ("+" if f else "") for m, f in keys)
    logger.debug("dfa built: %d states", len(keys))
    return Dfa(nfa.symbols, 0, edges, finals, labels)


# ------------------------------------------------------------------ #
#  Minimization                                                       #
# ------------------------------------------------------------------ #
def _has_incoming(dfa: Dfa, state: int) -> bool:
    return any(target == state for out in dfa.edges for _, target in out)


def _refine(dfa: Dfa, finals: frozenset[int]) -> Dfa:
    """Moore partition refinement; signatures are reduced decision trees over classes."""
    trees = [dfa.tree(q) for q in range(dfa.size)]
    classes = [int(q in finals) for q in range(dfa.size)]
    count = len(set(classes))
    while True:
        signatures = [(classes[q], map_leaves(trees[q], lambda t: classes[t])) for q in range(dfa.size)]
        numbering: dict[tuple, int] = {}
        refined = [numbering.setdefault(sig, len(numbering)) for sig in signatures]
        classes = refined
        if len(numbering) == count:
            break
        count = len(numbering)

    representative: dict[int, int] = {}
    for q in range(dfa.size):
        representative.setdefault(classes[q], q)
    start = classes[dfa.initial]
    ids = {start: 0}
    queue = deque([start])
    while queue:
        cls = queue.popleft()
        for _, target in dfa.edges[representative[cls]]:
            if classes[target] not in ids:
                ids[classes[target]] = len(ids)
                queue.append(classes[target])
    order = list(ids)
    edges = tuple(
        _edges_from_tree(map_leaves(trees[representative[cls]], lambda t: classes[t]), ids)
        for cls in order
    )
    new_finals = frozenset(i for i, cls in enumerate(order) if representative[cls] in finals)
    labels = tuple(dfa.labels[representative[cls]] for cls in order)
    return Dfa(dfa.symbols, 0, edges, new_finals, labels)


def minimize_dfa(dfa: Dfa) -> Dfa:
    """Language-equivalent DFA with the fewest states (on non-empty words)."""
    best = _refine(dfa, dfa.finals)
    if not _has_incoming(dfa, dfa.initial):
        flipped = _refine(dfa, dfa.finals ^ {dfa.initial})
        if flipped.size < best.size:
            best = flipped
    logger.debug("minimized: %d -> %d states", dfa.size, best.size)
    return best


# ------------------------------------------------------------------ #
#  Random machines                                                    #
# ------------------------------------------------------------------ #
def random_dfa(rng: np.random.RandomState, atoms: Iterable[str], n_states: int) -> Dfa:
    """Complete DFA with random targets per letter and random finality."""
    symbols = SymbolTable.for_atoms(atoms)
    order = list(symbols.atoms)
    ids = {q: q for q in range(n_states)}
    edges = tuple(
        _edges_from_tree(tree_from_function(lambda _letter: int(rng.randint(n_states)), order), ids)
        for _ in range(n_states)
    )
    finals = frozenset(q for q in range(n_states) if rng.rand() < 0.5)
    return Dfa(symbols, 0, edges, finals, tuple(str(q) for q in range(n_states)))
