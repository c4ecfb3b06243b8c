"""Guards over atoms and reduced ordered decision trees.

A guard is a frozenset of (atom, polarity) literals read as a conjunction;
the empty guard matches every letter. Decision trees split on atoms in a
fixed order and collapse a node whose branches are equal, so two trees for
the same function over the same order are identical. They serve as the
canonical form of a DFA state's outgoing transitions.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator

Literal = tuple[str, bool]
Guard = frozenset[Literal]

TRUE_GUARD: Guard = frozenset()


def consistent(literals: Iterable[Literal]) -> bool:
    seen: dict[str, bool] = {}
    for name, polarity in literals:
        if seen.setdefault(name, polarity) != polarity:
            return False
    return True


def conjoin(left: Guard, right: Guard) -> Guard | None:
    """Union of two guards, or None when they contradict."""
    merged = left | right
    return merged if consistent(merged) else None


def matches(guard: Guard, letter: frozenset[str]) -> bool:
    return all((name in letter) == polarity for name, polarity in guard)


def overlap(left: Guard, right: Guard) -> bool:
    return conjoin(left, right) is not None


def sorted_literals(guard: Guard) -> list[Literal]:
    return sorted(guard, key=lambda lit: (lit[0], not lit[1]))


def guard_text(guard: Guard, negation: str = "~", conjunction: str = " & ") -> str:
    if not guard:
        return "true"
    return conjunction.join(name if polarity else negation + name
                            for name, polarity in sorted_literals(guard))


def restrict(guard: Guard, name: str, value: bool) -> Guard | None:
    """The guard under name := value; None if it becomes false."""
    if (name, not value) in guard:
        return None
    return guard - {(name, value)}


# ------------------------------------------------------------------ #
#  Decision trees                                                     #
# ------------------------------------------------------------------ #
# A tree is either (None, value) for a leaf or (atom, low, high).
Tree = tuple


def leaf(value: Hashable) -> Tree:
    return (None, value)


def is_leaf(tree: Tree) -> bool:
    return tree[0] is None


def node(name: str, low: Tree, high: Tree) -> Tree:
    return low if low == high else (name, low, high)


def tree_from_edges(edges: list[tuple[Guard, Hashable]], order: list[str],
                    default: Hashable = None,
                    on_overlap: Callable[[list[Hashable]], Hashable] | None = None) -> Tree:
    """Decision tree of a guarded edge list over `order`.

    Letters no edge covers map to `default`. Where several edges with
    different values cover a letter, `on_overlap` picks the value (and may
    raise); without it the first edge wins.
    """
    def build(pending: list[tuple[Guard, Hashable]], depth: int) -> Tree:
        if depth == len(order) or all(not guard for guard, _ in pending):
            values = list(dict.fromkeys(value for guard, value in pending if not guard))
            if not values:
                return leaf(default)
            if len(values) > 1 and on_overlap is not None:
                return leaf(on_overlap(values))
            return leaf(values[0])
        name = order[depth]
        if all(name not in {n for n, _ in guard} for guard, _ in pending):
            return build(pending, depth + 1)
        low = [(g, v) for g, v in ((restrict(g, name, False), v) for g, v in pending) if g is not None]
        high = [(g, v) for g, v in ((restrict(g, name, True), v) for g, v in pending) if g is not None]
        return node(name, build(low, depth + 1), build(high, depth + 1))

    return build(list(edges), 0)


def tree_from_function(fn: Callable[[frozenset[str]], Hashable], order: list[str]) -> Tree:
    """Decision tree of an explicit function on letters (exponential in |order|)."""
    def build(assigned: frozenset[str], depth: int) -> Tree:
        if depth == len(order):
            return leaf(fn(assigned))
        name = order[depth]
        return node(name, build(assigned, depth + 1), build(assigned | {name}, depth + 1))

    return build(frozenset(), 0)


def tree_paths(tree: Tree, path: Guard = TRUE_GUARD) -> Iterator[tuple[Guard, Hashable]]:
    """(guard, leaf value) per leaf, low branch first."""
    if is_leaf(tree):
        yield path, tree[1]
        return
    name, low, high = tree
    yield from tree_paths(low, path | {(name, False)})
    yield from tree_paths(high, path | {(name, True)})


def map_leaves(tree: Tree, fn: Callable[[Hashable], Hashable]) -> Tree:
    if is_leaf(tree):
        return leaf(fn(tree[1]))
    name, low, high = tree
    return node(name, map_leaves(low, fn), map_leaves(high, fn))


def evaluate(tree: Tree, letter: frozenset[str]) -> Hashable:
    while not is_leaf(tree):
        name, low, high = tree
        tree = high if name in letter else low
    return tree[1]
