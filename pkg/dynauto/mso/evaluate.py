"""Brute-force MSO(<) evaluation over finite traces.

First-order variables range over the λ positions of the trace, second-order
variables over sets of positions. Atom predicates are bound to the positions
where the atom holds.

Two strategies decide second-order quantifiers:

- ``exhaustive`` enumerates every subset in increasing bit-mask order and
  stops at the first witness.
- ``pruned`` assigns the bits of a quantifier block one at a time (positions
  from the end, innermost variable first) and evaluates the body in
  three-valued logic after each choice, backtracking as soon as the body is
  decided. A nested block whose free set variables are still partly chosen
  is left undecided until they are complete.

Quantifier nodes are memoized on the values of their free variables, so a
subformula is decided once per distinct assignment within one trace.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..config import CONFIG
from ..errors import ConfigError, ResourceLimitError, TraceError, UnassignedVariableError
from ..trace.model import Trace
from .formula import (
    And, ExistsFO, ExistsSO, Falsum, ForallFO, ForallSO, Iff, Implies, Less, Macro, Member,
    MsoFormula, Not, Or, Verum, free_variables,
)

logger = logging.getLogger("dynauto.mso")

STRATEGIES = ("pruned", "exhaustive")

# Three-valued truth: True, False, None (undecided).
Truth3 = bool | None


def _not(a: Truth3) -> Truth3:
    return None if a is None else not a


def _and(a: Truth3, b: Truth3) -> Truth3:
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


def _or(a: Truth3, b: Truth3) -> Truth3:
    if a is True or b is True:
        return True
    if a is None or b is None:
        return None
    return False


@dataclass
class Assignment:
    v1: dict[str, int] = field(default_factory=dict)
    v2: dict[str, frozenset[int]] = field(default_factory=dict)


def atom_assignment(trace: Trace, atoms=None) -> dict[str, frozenset[int]]:
    """v2(p) = {x | p ∈ T_x} for the trace alphabet plus any extra `atoms`."""
    names = set(trace.alphabet) | set(atoms or ())
    return {p: frozenset(x for x, state in enumerate(trace.states) if p in state)
            for p in sorted(names)}


class MsoEvaluator:
    """Evaluates MSO formulas over one trace.

    Second-order values are tuples of per-position bits; a bit may be None
    while the pruned search is still choosing it.
    """

    def __init__(self, trace: Trace, strategy: str | None = None,
                 node_budget: int | None = None, max_so_vars: int | None = None,
                 max_trace_len: int | None = None):
        strategy = strategy or CONFIG.MSO_STRATEGY
        if strategy not in STRATEGIES:
            raise ConfigError(f"unknown MSO strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
        max_trace_len = CONFIG.MSO_MAX_TRACE_LEN if max_trace_len is None else max_trace_len
        if len(trace) > max_trace_len:
            raise ResourceLimitError(f"trace length {len(trace)} exceeds MSO_MAX_TRACE_LEN={max_trace_len}")
        self.trace = trace
        self.length = len(trace)
        self.strategy = strategy
        self.node_budget = CONFIG.MSO_NODE_BUDGET if node_budget is None else node_budget
        self.max_so_vars = CONFIG.MSO_MAX_SO_VARS if max_so_vars is None else max_so_vars
        self.nodes = 0
        self._expanded: dict[Macro, MsoFormula] = {}
        # id -> (node, free first-order, free second-order); holding the node keeps the id valid
        self._free: dict[int, tuple[MsoFormula, tuple[str, ...], tuple[str, ...]]] = {}
        self._memo: dict[tuple, bool] = {}

    # -------------------------------------------------------------- #
    def evaluate(self, formula: MsoFormula, assign: Assignment) -> bool:
        free_fo, free_so = free_variables(formula)
        missing = sorted((free_fo - assign.v1.keys()) | (free_so - assign.v2.keys()))
        if missing:
            raise UnassignedVariableError(f"unassigned free variables: {', '.join(missing)}")
        for var, pos in assign.v1.items():
            if not 0 <= pos < self.length:
                raise TraceError(f"{var}={pos} outside positions 0..{self.length - 1}")
        so = {X: tuple(x in positions for x in range(self.length)) for X, positions in assign.v2.items()}
        self.nodes = 0
        value = self._eval(formula, dict(assign.v1), so, 0)
        logger.debug("mso evaluated: strategy=%s nodes=%d", self.strategy, self.nodes)
        return bool(value)

    def _tick(self):
        self.nodes += 1
        if self.strategy == "pruned" and self.nodes > self.node_budget:
            raise ResourceLimitError(f"MSO search exceeded {self.node_budget} nodes")

    def _expand(self, macro: Macro) -> MsoFormula:
        if macro not in self._expanded:
            self._expanded[macro] = macro.expand()
        return self._expanded[macro]

    def _key(self, f: MsoFormula, fo: dict, so: dict) -> tuple | None:
        """Memo key, or None while a free set variable still has unchosen bits."""
        entry = self._free.get(id(f))
        if entry is None:
            free_fo, free_so = free_variables(f)
            entry = (f, tuple(sorted(free_fo)), tuple(sorted(free_so)))
            self._free[id(f)] = entry
        sets = tuple(so[X] for X in entry[2])
        if any(None in bits for bits in sets):
            return None
        return id(f), tuple(fo[x] for x in entry[1]), sets

    def _quantified(self, f: MsoFormula, fo: dict, so: dict, depth: int) -> Truth3:
        key = self._key(f, fo, so)
        if key is None:
            if isinstance(f, (ExistsSO, ForallSO)):
                return None
        elif key in self._memo:
            return self._memo[key]
        value = self._decide(f, fo, so, depth)
        if key is not None and value is not None:
            self._memo[key] = value
        return value

    def _eval(self, f: MsoFormula, fo: dict[str, int], so: dict[str, tuple], depth: int) -> Truth3:
        self._tick()
        match f:
            case Verum():
                return True
            case Falsum():
                return False
            case Member(X, x):
                return so[X][fo[x]]
            case Less(x, y):
                return fo[x] < fo[y]
            case Macro():
                return self._eval(self._expand(f), fo, so, depth)
            case Not(arg):
                return _not(self._eval(arg, fo, so, depth))
            case And(l, r):
                left = self._eval(l, fo, so, depth)
                return False if left is False else _and(left, self._eval(r, fo, so, depth))
            case Or(l, r):
                left = self._eval(l, fo, so, depth)
                return True if left is True else _or(left, self._eval(r, fo, so, depth))
            case Implies(l, r):
                left = _not(self._eval(l, fo, so, depth))
                return True if left is True else _or(left, self._eval(r, fo, so, depth))
            case Iff(l, r):
                left = self._eval(l, fo, so, depth)
                right = self._eval(r, fo, so, depth)
                if left is None or right is None:
                    return None
                return left == right
            case ExistsFO() | ForallFO() | ExistsSO() | ForallSO():
                return self._quantified(f, fo, so, depth)
        raise TypeError(f"not an MSO formula: {f!r}")

    def _decide(self, f: MsoFormula, fo: dict, so: dict, depth: int) -> Truth3:
        match f:
            case ExistsFO(x, body):
                result: Truth3 = False
                for pos in range(self.length):
                    result = _or(result, self._eval(body, {**fo, x: pos}, so, depth))
                    if result is True:
                        break
                return result
            case ForallFO(x, body):
                result = True
                for pos in range(self.length):
                    result = _and(result, self._eval(body, {**fo, x: pos}, so, depth))
                    if result is False:
                        break
                return result
            case ExistsSO():
                variables = []
                while isinstance(f, ExistsSO):
                    variables.append(f.var)
                    f = f.body
                return self._block(variables, f, fo, so, depth)
            case ForallSO(X, body):
                return _not(self._block([X], Not(body), fo, so, depth))

    # -------------------------------------------------------------- #
    #  Second-order blocks                                            #
    # -------------------------------------------------------------- #
    def _block(self, variables: list[str], body: MsoFormula, fo: dict, so: dict, depth: int) -> Truth3:
        if self.strategy == "exhaustive":
            return self._enumerate(variables, body, fo, so, depth)
        return self._search(variables, body, fo, so, depth + len(variables))

    def _enumerate(self, variables: list[str], body: MsoFormula, fo: dict, so: dict, depth: int) -> Truth3:
        depth += len(variables)
        if depth > self.max_so_vars:
            raise ResourceLimitError(
                f"{depth} open second-order variables exceed MSO_MAX_SO_VARS={self.max_so_vars}")
        n = self.length
        result: Truth3 = False
        for mask in range(1 << (n * len(variables))):
            inner = dict(so)
            for i, X in enumerate(variables):
                bits = mask >> (i * n)
                inner[X] = tuple(bool(bits >> x & 1) for x in range(n))
            result = _or(result, self._eval(body, fo, inner, depth))
            if result is True:
                break
        return result

    def _search(self, variables: list[str], body: MsoFormula, fo: dict, so: dict, depth: int) -> Truth3:
        n = self.length
        bits = {X: [None] * n for X in variables}
        order = [(X, x) for x in reversed(range(n)) for X in reversed(variables)]

        def current() -> dict:
            return {**so, **{X: tuple(b) for X, b in bits.items()}}

        def dfs(i: int) -> Truth3:
            value = self._eval(body, fo, current(), depth)
            if value is not None or i == len(order):
                return value
            X, x = order[i]
            undecided = False
            for bit in (False, True):
                bits[X][x] = bit
                outcome = dfs(i + 1)
                if outcome is True:
                    bits[X][x] = None
                    return True
                undecided = undecided or outcome is None
            bits[X][x] = None
            return None if undecided else False

        return dfs(0)


def eval_mso(trace: Trace, formula: MsoFormula, assign: Assignment | None = None,
             strategy: str | None = None, atoms=None) -> bool:
    """Decide T, v1, v2 ⊨ formula.

    Atom predicates of the trace alphabet (and of `atoms`) are bound
    automatically unless `assign` already binds the name.
    """
    assign = assign or Assignment()
    v2 = {**atom_assignment(trace, atoms), **assign.v2}
    return MsoEvaluator(trace, strategy).evaluate(formula, Assignment(dict(assign.v1), v2))
