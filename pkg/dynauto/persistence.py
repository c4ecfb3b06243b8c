"""Save/load automata as JSON."""

import json
from pathlib import Path

from .automata.afw import Afw, Conjunct
from .automata.dfa import Dfa
from .automata.nfa import Nfa
from .errors import DynautoError
from .logic.parser import parse
from .trace.model import SymbolTable

FORMAT_VERSION = 1


# ------------------------------------------------------------------ #
#  Guard serialization                                                #
# ------------------------------------------------------------------ #
def _serialize_guard(guard) -> list:
    return [[name, polarity] for name, polarity in sorted(guard)]


def _deserialize_guard(items: list) -> frozenset:
    return frozenset((name, bool(polarity)) for name, polarity in items)


# ------------------------------------------------------------------ #
#  Automaton serialization                                            #
# ------------------------------------------------------------------ #
def to_dict(automaton: Afw | Nfa | Dfa) -> dict:
    """JSON-safe dict; keys are stable so dumps are byte-identical across runs."""
    if not isinstance(automaton, (Afw, Nfa, Dfa)):
        raise TypeError(f"cannot serialize {type(automaton).__name__}")
    d = {
        "version": FORMAT_VERSION,
        "_type": type(automaton).__name__,
        "atoms": list(automaton.symbols.atoms),
    }
    if isinstance(automaton, Afw):
        d["states"] = [automaton.label(q) for q in range(len(automaton.states))]
        d["initial"] = automaton.initial
        d["delta"] = [
            [{"conditions": _serialize_guard(c.conditions), "successors": sorted(c.successors)}
             for c in conjuncts]
            for conjuncts in automaton.delta
        ]
    elif isinstance(automaton, Nfa):
        d["states"] = [sorted(s) for s in automaton.states]
        d["initial"] = sorted(automaton.initial)
        d["transitions"] = [[source, _serialize_guard(guard), target]
                            for source, guard, target in automaton.transitions]
        d["finals"] = sorted(automaton.finals)
    else:
        d["labels"] = list(automaton.labels)
        d["initial"] = automaton.initial
        d["edges"] = [[[_serialize_guard(guard), target] for guard, target in out]
                      for out in automaton.edges]
        d["finals"] = sorted(automaton.finals)
    return d


def from_dict(d: dict) -> Afw | Nfa | Dfa:
    if d.get("version") != FORMAT_VERSION:
        raise DynautoError(f"unsupported automaton format version: {d.get('version')!r}")
    symbols = SymbolTable.for_atoms(d["atoms"])
    type_name = d.get("_type")

    if type_name == "Afw":
        delta = tuple(
            tuple(Conjunct(_deserialize_guard(c["conditions"]), frozenset(c["successors"]))
                  for c in conjuncts)
            for conjuncts in d["delta"]
        )
        return Afw(symbols, tuple(parse(s) for s in d["states"]), d["initial"], delta)
    if type_name == "Nfa":
        transitions = tuple((source, _deserialize_guard(guard), target)
                            for source, guard, target in d["transitions"])
        return Nfa(symbols, tuple(frozenset(s) for s in d["states"]), frozenset(d["initial"]),
                   transitions, frozenset(d["finals"]))
    if type_name == "Dfa":
        edges = tuple(tuple((_deserialize_guard(guard), target) for guard, target in out)
                      for out in d["edges"])
        return Dfa(symbols, d["initial"], edges, frozenset(d["finals"]), tuple(d["labels"]))
    raise DynautoError(f"unknown automaton type: {type_name!r}")


# ------------------------------------------------------------------ #
#  Save / Load                                                        #
# ------------------------------------------------------------------ #
def dumps(automaton: Afw | Nfa | Dfa) -> str:
    return json.dumps(to_dict(automaton), indent=2, ensure_ascii=False) + "\n"


def save_automaton(automaton: Afw | Nfa | Dfa, filepath: str):
    """Write an automaton to a JSON file."""
    Path(filepath).write_text(dumps(automaton), encoding="utf-8")


def load_automaton(filepath: str) -> Afw | Nfa | Dfa:
    data = json.loads(Path(filepath).read_text(encoding="utf-8"))
    return from_dict(data)
