"""ASP fact interchange for alternating and deterministic automata.

    prop(ID,atom).              symbol table; `last` takes the first free id
    state(ID,"formula").        state with its Canonical formula (or label)
    initial_state(ID).
    final_state(ID).            deterministic automata only
    delta(Q,C).                 conjunct C of state Q
    delta(Q,C,Q2).              Q2 belongs to conjunct C
    delta(Q,C,in|out,A).        atom A must be in / out of the letter

A DFA edge is written as a conjunct with exactly one successor.
"""

from __future__ import annotations

from collections import defaultdict

from ..errors import FactFormatError, FormulaSyntaxError
from ..logic.formula import RESERVED_ATOM
from ..logic.parser import parse
from ..trace.model import SymbolTable
from ..utils.asp import const, const_arg, fact, number_arg, read_facts, string_arg
from .afw import Afw, Conjunct
from .dfa import Dfa
from .guards import Guard, sorted_literals

_POLARITY = {True: "in", False: "out"}


def _header(symbols: SymbolTable) -> list[str]:
    return [fact("prop", ident, const(name)) for ident, name in symbols.items()]


def _conjunct_facts(symbols: SymbolTable, state: int, index: int,
                    conditions: Guard, successors) -> list[str]:
    lines = [fact("delta", state, index)]
    for name, polarity in sorted_literals(conditions):
        lines.append(fact("delta", state, index, const(_POLARITY[polarity]), symbols.id_of(name)))
    for successor in sorted(successors):
        lines.append(fact("delta", state, index, successor))
    return lines


def afw_to_facts(afw: Afw) -> str:
    lines = _header(afw.symbols)
    lines += [fact("state", q, afw.label(q)) for q in range(len(afw.states))]
    lines.append(fact("initial_state", afw.initial))
    for q, conjuncts in enumerate(afw.delta):
        for c, conjunct in enumerate(conjuncts):
            lines += _conjunct_facts(afw.symbols, q, c, conjunct.conditions, conjunct.successors)
    return "\n".join(lines) + "\n"


def dfa_to_facts(dfa: Dfa) -> str:
    lines = _header(dfa.symbols)
    lines += [fact("state", q, dfa.labels[q]) for q in range(dfa.size)]
    lines.append(fact("initial_state", dfa.initial))
    lines += [fact("final_state", q) for q in sorted(dfa.finals)]
    for q, out in enumerate(dfa.edges):
        for c, (guard, target) in enumerate(out):
            lines += _conjunct_facts(dfa.symbols, q, c, guard, (target,))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ #
#  Reading                                                            #
# ------------------------------------------------------------------ #
class _FactSet:
    """Automaton facts collected by predicate, validated against the symbol table."""

    def __init__(self, text: str):
        self.props: dict[int, str] = {}
        self.states: dict[int, str] = {}
        self.initial: list[int] = []
        self.finals: set[int] = set()
        self.conjuncts: dict[int, dict[int, dict]] = defaultdict(dict)
        pending_conditions = []
        for line, term in read_facts(text):
            arity = len(term.arguments)
            match (term.name, arity):
                case ("prop", 2):
                    self.props[number_arg(term, 0, line)] = const_arg(term, 1, line)
                case ("state", 2):
                    self.states[number_arg(term, 0, line)] = string_arg(term, 1, line)
                case ("initial_state", 1):
                    self.initial.append(number_arg(term, 0, line))
                case ("final_state", 1):
                    self.finals.add(number_arg(term, 0, line))
                case ("delta", 2):
                    self._conjunct(number_arg(term, 0, line), number_arg(term, 1, line))
                case ("delta", 3):
                    entry = self._conjunct(number_arg(term, 0, line), number_arg(term, 1, line))
                    entry["successors"].add(number_arg(term, 2, line))
                case ("delta", 4):
                    pending_conditions.append((line, term))
                case _:
                    raise FactFormatError(f"unexpected predicate {term.name}/{arity}", line)
        self.symbols = self._symbol_table()
        for line, term in pending_conditions:
            entry = self._conjunct(number_arg(term, 0, line), number_arg(term, 1, line))
            polarity = const_arg(term, 2, line)
            if polarity not in ("in", "out"):
                raise FactFormatError(f"condition type must be in or out, got {polarity}", line)
            try:
                name = self.symbols.name_of(number_arg(term, 3, line))
            except KeyError as exc:
                raise FactFormatError(str(exc.args[0]), line) from None
            entry["conditions"].add((name, polarity == "in"))
        self._validate()

    def _conjunct(self, state: int, index: int) -> dict:
        return self.conjuncts[state].setdefault(index, {"conditions": set(), "successors": set()})

    def _symbol_table(self) -> SymbolTable:
        names = [name for _, name in sorted(self.props.items()) if name != RESERVED_ATOM]
        symbols = SymbolTable.for_atoms(names)
        if sorted(self.props.items()) != symbols.items():
            raise FactFormatError("prop/2 ids must number atoms by name from 1, with last next")
        return symbols

    def _validate(self):
        if len(self.initial) != 1:
            raise FactFormatError(f"expected one initial_state/1 fact, found {len(self.initial)}")
        if sorted(self.states) != list(range(len(self.states))):
            raise FactFormatError("state ids must be 0..n-1")
        known = set(self.states)
        referenced = {self.initial[0], *self.finals, *self.conjuncts}
        for per_state in self.conjuncts.values():
            for entry in per_state.values():
                referenced |= entry["successors"]
        if referenced - known:
            raise FactFormatError(f"undeclared states: {sorted(referenced - known)}")
        for state, per_state in self.conjuncts.items():
            if sorted(per_state) != list(range(len(per_state))):
                raise FactFormatError(f"conjunct ids of state {state} must be 0..n-1")

    def ordered(self, state: int) -> list[dict]:
        per_state = self.conjuncts.get(state, {})
        return [per_state[c] for c in sorted(per_state)]


def afw_from_facts(text: str) -> Afw:
    facts = _FactSet(text)
    states = []
    for q in range(len(facts.states)):
        try:
            states.append(parse(facts.states[q]))
        except FormulaSyntaxError as exc:
            raise FactFormatError(f"state {q}: {exc}") from None
    delta = tuple(
        tuple(Conjunct(frozenset(e["conditions"]), frozenset(e["successors"])) for e in facts.ordered(q))
        for q in range(len(states))
    )
    return Afw(facts.symbols, tuple(states), facts.initial[0], delta)


def dfa_from_facts(text: str) -> Dfa:
    facts = _FactSet(text)
    edges = []
    for q in range(len(facts.states)):
        out = []
        for entry in facts.ordered(q):
            if len(entry["successors"]) != 1:
                raise FactFormatError(f"deterministic transition of state {q} needs exactly one successor")
            if any(name == RESERVED_ATOM for name, _ in entry["conditions"]):
                raise FactFormatError(f"deterministic transition of state {q} mentions last")
            out.append((frozenset(entry["conditions"]), next(iter(entry["successors"]))))
        edges.append(tuple(out))
    labels = tuple(facts.states[q] for q in range(len(facts.states)))
    return Dfa(facts.symbols, facts.initial[0], tuple(edges), frozenset(facts.finals), labels)
