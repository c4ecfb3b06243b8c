"""Built-in engines."""

from __future__ import annotations

from ..automata.afw import accepts, build_afw
from ..automata.dfa import dfa_accepts, minimize_dfa, nfa_to_dfa
from ..automata.nfa import afw_to_nfa, nfa_accepts
from ..config import CONFIG, DynConfig
from ..logic.formula import DynFormula, atoms
from ..mso.evaluate import Assignment, MsoEvaluator, atom_assignment
from ..mso.translate import ENTRY_VAR, mso_enc, st_m
from ..semantics.direct import sat
from ..trace.model import Trace
from .registry import Checker, Engine, EngineRegistry

ENGINE_NAMES = ("direct", "afw", "nfa", "dfa", "dfa-min", "mso-st", "mso-enc")
AUTOMATON_ENGINES = ("direct", "afw", "nfa", "dfa", "dfa-min")


def _direct(formula: DynFormula) -> Checker:
    return lambda trace: sat(trace, 0, formula)


def _afw(formula: DynFormula) -> Checker:
    afw = build_afw(formula)
    return lambda trace: accepts(afw, trace)


def _nfa(formula: DynFormula) -> Checker:
    nfa = afw_to_nfa(build_afw(formula))
    return lambda trace: nfa_accepts(nfa, trace)


def _dfa(config: DynConfig, minimal: bool):
    def prepare(formula: DynFormula) -> Checker:
        dfa = nfa_to_dfa(afw_to_nfa(build_afw(formula)), state_cap=config.DFA_STATE_CAP)
        if minimal:
            dfa = minimize_dfa(dfa)
        return lambda trace: dfa_accepts(dfa, trace)
    return prepare


def _mso(config: DynConfig, translate):
    def prepare(formula: DynFormula) -> Checker:
        translated = translate(ENTRY_VAR, formula)
        names = atoms(formula)

        def check(trace: Trace) -> bool:
            evaluator = MsoEvaluator(trace, config.MSO_STRATEGY, config.MSO_NODE_BUDGET,
                                     config.MSO_MAX_SO_VARS, config.MSO_MAX_TRACE_LEN)
            return evaluator.evaluate(translated, Assignment({ENTRY_VAR: 0}, atom_assignment(trace, names)))
        return check
    return prepare


def get_builtin_engines(config: DynConfig | None = None) -> list[Engine]:
    config = config or CONFIG
    return [
        Engine(
            name="direct",
            description="Evaluate the semantics directly over the trace.",
            prepare=_direct,
        ),
        Engine(
            name="afw",
            description="Run the alternating automaton with an antichain of obligation sets.",
            prepare=_afw,
        ),
        Engine(
            name="nfa",
            description="Run the subset-construction NFA of the alternating automaton.",
            prepare=_nfa,
        ),
        Engine(
            name="dfa",
            description="Run the determinized automaton.",
            prepare=_dfa(config, minimal=False),
        ),
        Engine(
            name="dfa-min",
            description="Run the minimized deterministic automaton.",
            prepare=_dfa(config, minimal=True),
        ),
        Engine(
            name="mso-st",
            description="Evaluate the standard MSO translation at position 0.",
            prepare=_mso(config, st_m),
            max_trace_len=config.MSO_MAX_TRACE_LEN,
        ),
        Engine(
            name="mso-enc",
            description="Evaluate the closure-predicate MSO encoding at position 0.",
            prepare=_mso(config, mso_enc),
            max_trace_len=config.MSO_MAX_TRACE_LEN,
        ),
    ]


def default_registry(config: DynConfig | None = None) -> EngineRegistry:
    registry = EngineRegistry()
    for engine in get_builtin_engines(config):
        registry.register(engine)
    return registry
