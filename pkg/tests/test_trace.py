import pytest

from dynauto.errors import AlphabetTooLargeError, FactFormatError, TraceError, TraceFormatError
from dynauto.trace import (
    SymbolTable, Trace, count_traces, enumerate_traces, letter_at, random_traces,
    read_jsonl, read_trace, read_trace_corpus, subsets, trace_from_facts, trace_to_facts,
    trace_to_json, write_jsonl, write_trace, write_trace_corpus,
)


class TestTraceModel:

    def test_empty_trace_rejected(self):
        with pytest.raises(TraceError):
            Trace.of([])

    def test_atoms_must_be_in_alphabet(self):
        with pytest.raises(TraceError):
            Trace.of([{"a"}], {"b"})

    def test_reserved_atom_rejected(self):
        with pytest.raises(TraceError):
            Trace.of([{"a"}], {"a", "last"})

    def test_last_marks_the_final_letter(self, accepted_trace):
        assert letter_at(accepted_trace, 0) == {"b"}
        assert letter_at(accepted_trace, 2) == {"b", "last"}
        with pytest.raises(TraceError):
            letter_at(accepted_trace, 3)

    def test_str(self, accepted_trace):
        assert str(accepted_trace) == "{b}·{a,b}·{b}"


class TestEnumeration:

    def test_counts(self):
        assert count_traces(1, 1) == 2
        assert count_traces(2, 2) == 20
        assert count_traces(2, 3) == 84

    def test_enumeration_matches_count(self):
        traces = list(enumerate_traces({"a", "b"}, 3))
        assert len(traces) == count_traces(2, 3)
        assert len(set(traces)) == len(traces)

    def test_shortest_first(self):
        lengths = [len(t) for t in enumerate_traces({"a"}, 3)]
        assert lengths == sorted(lengths)

    def test_alphabet_cap(self):
        with pytest.raises(AlphabetTooLargeError):
            next(enumerate_traces({"a", "b"}, 2, max_alphabet=1))

    def test_subsets_order(self):
        assert subsets({"b", "a"}) == [frozenset(), {"a"}, {"b"}, {"a", "b"}]

    def test_random_traces_are_seeded(self):
        first = random_traces({"a", "b"}, 20, 5, seed=3)
        again = random_traces({"a", "b"}, 20, 5, seed=3)
        assert first == again
        assert all(1 <= len(t) <= 5 for t in first)


class TestJson:

    def test_list_form(self):
        trace = Trace.of([{"b"}, {"a", "b"}])
        assert trace_to_json(trace) == [["b"], ["a", "b"]]
        assert write_trace(trace) == '[["b"],["a","b"]]'

    def test_object_form_keeps_unused_atoms(self):
        trace = Trace.of([{"a"}], {"a", "c"})
        assert trace_to_json(trace) == {"alphabet": ["a", "c"], "states": [["a"]]}
        assert read_trace(write_trace(trace)) == trace

    def test_read(self, accepted_trace):
        assert read_trace('[["b"], ["a", "b"], ["b"]]') == accepted_trace

    @pytest.mark.parametrize("text", ["[]", "[[1]]", '[["last"]]', "[[", '{"alphabet": ["a"]}'])
    def test_malformed(self, text):
        with pytest.raises(TraceFormatError):
            read_trace(text)

    def test_corpus_file(self, tmp_path, traces_ab_3):
        path = tmp_path / "traces.jsonl"
        assert write_trace_corpus(traces_ab_3[:10], path) == 10
        assert read_trace_corpus(path.read_text()) == traces_ab_3[:10]

    def test_corpus_error_carries_line(self):
        with pytest.raises(TraceFormatError) as info:
            read_trace_corpus('[["a"]]\n[[2]]\n')
        assert info.value.line == 2

    def test_jsonl_records_are_sorted_and_flushed(self, tmp_path):
        path = tmp_path / "out" / "m.jsonl"
        seen = []

        def records():
            yield {"b": 1, "a": 2}
            seen.append(path.read_text(encoding="utf-8"))
            yield {"c": None}

        assert write_jsonl(path, records()) == 2
        assert seen == ['{"a": 2, "b": 1}\n']
        assert path.read_text(encoding="utf-8") == '{"a": 2, "b": 1}\n{"c": null}\n'

    def test_jsonl_skips_blank_lines(self):
        assert list(read_jsonl('{"a": 1}\n\n[2]\n')) == [(1, {"a": 1}), (3, [2])]


class TestFacts:

    def test_symbol_ids(self):
        symbols = SymbolTable.for_atoms({"b", "a"})
        assert symbols.id_of("a") == 1
        assert symbols.id_of("b") == 2
        assert symbols.id_of("last") == 3
        assert symbols.name_of(3) == "last"
        with pytest.raises(KeyError):
            symbols.id_of("c")

    def test_worked_example_facts(self, accepted_trace):
        symbols = SymbolTable.for_atoms({"a", "b"})
        text = trace_to_facts(accepted_trace, symbols)
        assert text == "trace(2,0).\ntrace(1,1).\ntrace(2,1).\ntrace(2,2).\ntrace(3,2).\n"
        assert trace_from_facts(text, symbols) == accepted_trace

    def test_facts_through_read_write(self, rejected_trace):
        symbols = SymbolTable.for_atoms({"a", "b"})
        assert read_trace(write_trace(rejected_trace, "facts", symbols), "facts", symbols) == rejected_trace

    def test_missing_last(self):
        with pytest.raises(FactFormatError):
            trace_from_facts("trace(1,0).\n", SymbolTable.for_atoms({"a"}))

    def test_step_after_last(self):
        with pytest.raises(FactFormatError):
            trace_from_facts("trace(1,3).\ntrace(2,1).\n", SymbolTable.for_atoms({"a"}))

    def test_unknown_id(self):
        with pytest.raises(FactFormatError):
            trace_from_facts("trace(7,0).\ntrace(2,0).\n", SymbolTable.for_atoms({"a"}))

    def test_facts_need_symbols(self):
        with pytest.raises(TraceFormatError):
            read_trace("trace(2,0).", "facts")
