from .io import (
    read_jsonl, read_trace, read_trace_corpus, trace_from_facts, trace_from_json,
    trace_to_facts, trace_to_json, write_jsonl, write_trace, write_trace_corpus,
)
from .model import (
    Letter, SymbolTable, Trace, count_traces, enumerate_traces, letter_at,
    random_traces, subsets,
)

__all__ = [
    "Letter", "SymbolTable", "Trace", "count_traces", "enumerate_traces",
    "letter_at", "random_traces", "read_jsonl", "read_trace", "read_trace_corpus", "subsets",
    "trace_from_facts", "trace_from_json", "trace_to_facts", "trace_to_json",
    "write_jsonl", "write_trace", "write_trace_corpus",
]
