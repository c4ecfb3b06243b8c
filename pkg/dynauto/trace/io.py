"""Trace serialization: JSON, JSON-lines corpora and ASP facts."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from ..errors import FactFormatError, TraceError, TraceFormatError
from ..logic.formula import RESERVED_ATOM
from ..utils.asp import fact, number_arg, read_facts
from .model import SymbolTable, Trace


# ------------------------------------------------------------------ #
#  JSON                                                               #
# ------------------------------------------------------------------ #
def trace_to_json(trace: Trace) -> object:
    states = [sorted(s) for s in trace.states]
    if trace.alphabet == frozenset().union(*trace.states):
        return states
    return {"alphabet": sorted(trace.alphabet), "states": states}


def trace_from_json(data: object, line: int = 0) -> Trace:
    alphabet = None
    states = data
    if isinstance(data, dict):
        if "states" not in data:
            raise TraceFormatError("trace object needs a 'states' list", line)
        states = data["states"]
        alphabet = data.get("alphabet")
        if not isinstance(alphabet, list) or not all(isinstance(a, str) for a in alphabet):
            raise TraceFormatError("'alphabet' must be a list of atom names", line)
    if not isinstance(states, list):
        raise TraceFormatError("a trace is a list of states", line)
    for index, state in enumerate(states):
        if not isinstance(state, list) or not all(isinstance(a, str) for a in state):
            raise TraceFormatError(f"state {index} must be a list of atom names", line)
    try:
        return Trace.of(states, alphabet)
    except TraceError as exc:
        raise TraceFormatError(str(exc), line) from None


def write_trace(trace: Trace, fmt: str = "json", symbols: SymbolTable | None = None) -> str:
    if fmt == "json":
        return json.dumps(trace_to_json(trace), separators=(",", ":"))
    if fmt == "facts":
        return trace_to_facts(trace, symbols or SymbolTable.for_atoms(trace.alphabet))
    raise ValueError(f"unknown trace format: {fmt!r}")


def read_trace(text: str, fmt: str = "json", symbols: SymbolTable | None = None) -> Trace:
    """Inverse of write_trace. Facts need the symbol table they were written with."""
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TraceFormatError(exc.msg, exc.lineno, exc.colno) from None
        return trace_from_json(data)
    if fmt == "facts":
        if symbols is None:
            raise TraceFormatError("reading trace facts requires a symbol table")
        return trace_from_facts(text, symbols)
    raise ValueError(f"unknown trace format: {fmt!r}")


# ------------------------------------------------------------------ #
#  JSON-lines corpora                                                 #
# ------------------------------------------------------------------ #
def write_jsonl(path: str | Path, records: Iterable[dict]) -> int:
    """Sorted-key objects, one per line and flushed as produced; returns the count.

    `records` may be a generator, so a long run leaves every finished record
    on disk.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
            fh.flush()
            count += 1
    return count


def read_jsonl(text: str) -> Iterator[tuple[int, object]]:
    """(line number, value) per non-blank line."""
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            value = json.loads(line)
        except json.JSONDecodeError as exc:
            raise TraceFormatError(exc.msg, number, exc.colno) from None
        yield number, value


def write_trace_corpus(traces: Iterable[Trace], path: str | Path) -> int:
    """One trace object per line; returns the number written."""
    return write_jsonl(path, ({"alphabet": sorted(t.alphabet), "states": [sorted(s) for s in t.states]}
                              for t in traces))


def read_trace_corpus(text: str) -> list[Trace]:
    return [trace_from_json(data, number) for number, data in read_jsonl(text)]


# ------------------------------------------------------------------ #
#  ASP facts                                                          #
# ------------------------------------------------------------------ #
def trace_to_facts(trace: Trace, symbols: SymbolTable) -> str:
    """`trace(ID,STEP).` per true atom, then `trace(LAST,λ-1).`."""
    lines = []
    for step, state in enumerate(trace.states):
        for ident in sorted(symbols.id_of(a) for a in state):
            lines.append(fact("trace", ident, step))
    lines.append(fact("trace", symbols.last_id, len(trace) - 1))
    return "\n".join(lines) + "\n"


def trace_from_facts(text: str, symbols: SymbolTable) -> Trace:
    pairs: list[tuple[int, str, int]] = []
    final: int | None = None
    for line, term in read_facts(text):
        if term.name != "trace" or len(term.arguments) != 2:
            raise FactFormatError(f"expected trace/2, got {term.name}/{len(term.arguments)}", line)
        ident, step = number_arg(term, 0, line), number_arg(term, 1, line)
        if step < 0:
            raise FactFormatError("negative time step", line)
        try:
            name = symbols.name_of(ident)
        except KeyError as exc:
            raise FactFormatError(str(exc.args[0]), line) from None
        if name == RESERVED_ATOM:
            if final is not None and final != step:
                raise FactFormatError("two different last steps", line)
            final = step
        else:
            pairs.append((line, name, step))
    if final is None:
        raise FactFormatError("no trace fact for the last step")
    states: list[set[str]] = [set() for _ in range(final + 1)]
    for line, name, step in pairs:
        if step > final:
            raise FactFormatError(f"step {step} lies after the last step {final}", line)
        states[step].add(name)
    return Trace.of(states, symbols.atoms)
