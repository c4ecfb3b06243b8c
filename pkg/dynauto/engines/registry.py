"""Engine registry: independent deciders of trace ⊨ formula."""

from dataclasses import dataclass
from typing import Callable

from ..logic.formula import DynFormula
from ..trace.model import Trace

Checker = Callable[[Trace], bool]


@dataclass
class Engine:
    """A way of deciding acceptance.

    `prepare` does the per-formula work once (building an automaton,
    translating to MSO) and returns a per-trace checker. Traces longer than
    `max_trace_len` are outside what the engine can decide.
    """
    name: str
    description: str
    prepare: Callable[[DynFormula], Checker] = None
    max_trace_len: int | None = None

    def handles(self, trace: Trace) -> bool:
        return self.max_trace_len is None or len(trace) <= self.max_trace_len


class EngineRegistry:
    """Registry of available engines, in registration order."""

    def __init__(self):
        self._engines: dict[str, Engine] = {}

    def register(self, engine: Engine):
        self._engines[engine.name] = engine

    def get(self, name: str) -> Engine | None:
        return self._engines.get(name)

    def names(self) -> list[str]:
        return list(self._engines)

    def checker(self, name: str, formula: DynFormula) -> Checker:
        """Prepared checker; raises KeyError for unknown engines."""
        engine = self._engines.get(name)
        if engine is None:
            raise KeyError(f"unknown engine: {name}")
        if engine.prepare is None:
            raise KeyError(f"engine '{name}' has no bound function")
        return engine.prepare(formula)
