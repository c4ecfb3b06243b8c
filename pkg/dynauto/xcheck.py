"""Differential checking: every engine over every bounded trace."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .engines.builtins import AUTOMATON_ENGINES
from .engines.registry import EngineRegistry
from .logging_config import log_event
from .logic.corpus import CorpusEntry
from .logic.printer import to_text
from .trace.model import Trace

logger = logging.getLogger("dynauto.xcheck")


@dataclass
class Disagreement:
    trace: Trace
    verdicts: dict[str, bool]

    def describe(self) -> str:
        votes = ", ".join(f"{name}={'accept' if v else 'reject'}" for name, v in self.verdicts.items())
        return f"{self.trace}: {votes}"


@dataclass
class XcheckResult:
    name: str
    formula: str
    engines: tuple[str, ...]
    checked: int = 0
    accepted: dict[str, int] = field(default_factory=dict)
    disagreement: Disagreement | None = None

    @property
    def unanimous(self) -> bool:
        return self.disagreement is None

    def record(self) -> dict:
        """Flat JSON-safe summary for the metrics sink."""
        return {
            "name": self.name,
            "formula": self.formula,
            "traces": self.checked,
            "accepted": dict(self.accepted),
            "unanimous": self.unanimous,
            "counterexample": None if self.disagreement is None else self.disagreement.describe(),
        }


def cross_check(entry: CorpusEntry, traces: Iterable[Trace], registry: EngineRegistry,
                engines: Iterable[str] = AUTOMATON_ENGINES) -> XcheckResult:
    """Run `engines` over `traces` (shortest first) and stop at the first disagreement.

    With traces enumerated shortest first the reported counterexample is a
    minimal one. An engine only votes on traces within its length cap.
    """
    engines = tuple(engines)
    checkers = {name: registry.checker(name, entry.formula) for name in engines}
    skipped = {name: 0 for name in engines}
    result = XcheckResult(entry.name, to_text(entry.formula), engines,
                          accepted={name: 0 for name in engines})
    for trace in traces:
        verdicts = {}
        for name, check in checkers.items():
            if not registry.get(name).handles(trace):
                skipped[name] += 1
                continue
            verdicts[name] = bool(check(trace))
        result.checked += 1
        for name, verdict in verdicts.items():
            result.accepted[name] += verdict
        if len(set(verdicts.values())) > 1:
            result.disagreement = Disagreement(trace, verdicts)
            log_event("DISAGREE", logger="dynauto.xcheck", formula=entry.name, trace=str(trace))
            break
    if any(skipped.values()):
        logger.info("%s: traces over the length cap skipped per engine: %s", entry.name,
                    ", ".join(f"{name}={count}" for name, count in skipped.items() if count))
    log_event("XCHECK", logger="dynauto.xcheck", formula=entry.name,
              traces=result.checked, unanimous=result.unanimous)
    return result
