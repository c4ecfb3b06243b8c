import pytest

from dynauto.automata import afw_to_nfa, build_afw, dfa_accepts, minimize_dfa, nfa_to_dfa
from dynauto.config import DynConfig
from dynauto.engines import AUTOMATON_ENGINES, ENGINE_NAMES, Engine, default_registry
from dynauto.logic import parse
from dynauto.logic.corpus import CorpusEntry, corpus, two_atom_corpus
from dynauto.trace import enumerate_traces
from dynauto.xcheck import cross_check


@pytest.fixture(scope="module")
def registry():
    return default_registry()


def flipped_dfa_engine() -> Engine:
    """Minimal DFA with every final flag inverted."""
    def prepare(formula):
        dfa = minimize_dfa(nfa_to_dfa(afw_to_nfa(build_afw(formula))))
        return lambda trace: not dfa_accepts(dfa, trace)
    return Engine(name="broken", description="inverted DFA", prepare=prepare)


class TestRegistry:

    def test_builtin_names(self, registry):
        assert registry.names() == list(ENGINE_NAMES)

    def test_unknown_engine(self, registry):
        with pytest.raises(KeyError):
            registry.checker("oracle", parse("a"))
        assert registry.get("oracle") is None

    def test_checker(self, registry, always_next, accepted_trace, rejected_trace):
        check = registry.checker("afw", always_next)
        assert check(accepted_trace)
        assert not check(rejected_trace)

    def test_unbound_engine(self, always_next):
        registry = default_registry()
        registry.register(Engine(name="idle", description="no prepare"))
        with pytest.raises(KeyError):
            registry.checker("idle", always_next)

    def test_mso_engines_carry_the_trace_cap(self, accepted_trace):
        registry = default_registry(DynConfig(MSO_MAX_TRACE_LEN=2))
        assert registry.get("mso-st").max_trace_len == 2
        assert not registry.get("mso-enc").handles(accepted_trace)
        assert registry.get("dfa-min").handles(accepted_trace)


class TestCrossCheck:

    def test_worked_example_on_every_engine(self, registry, traces_ab_3):
        entry = corpus(["always_next"])[0]
        result = cross_check(entry, traces_ab_3, registry, ENGINE_NAMES)
        assert result.unanimous
        assert result.checked == 84
        assert result.accepted == {name: 6 for name in ENGINE_NAMES}

    def test_single_atom(self, registry):
        result = cross_check(CorpusEntry("a", "a"), enumerate_traces({"a"}, 2), registry)
        assert result.checked == 6
        assert result.record() == {
            "name": "a", "formula": "a", "traces": 6,
            "accepted": {name: 3 for name in AUTOMATON_ENGINES},
            "unanimous": True, "counterexample": None,
        }

    @pytest.mark.parametrize("entry", two_atom_corpus(), ids=lambda e: e.name)
    def test_corpus_is_unanimous(self, registry, entry, traces_ab_4):
        result = cross_check(entry, traces_ab_4, registry)
        assert result.unanimous, result.disagreement.describe()

    def test_disagreement_is_reported_at_the_shortest_trace(self, registry, traces_ab_3):
        registry = default_registry()
        registry.register(flipped_dfa_engine())
        result = cross_check(corpus(["always_next"])[0], traces_ab_3, registry, ["direct", "broken"])
        assert not result.unanimous
        assert result.checked == 1
        assert len(result.disagreement.trace) == 1
        assert result.disagreement.verdicts == {"direct": False, "broken": True}
        assert "direct=reject" in result.disagreement.describe()

    def test_capped_engine_skips_long_traces(self, traces_ab_3):
        registry = default_registry(DynConfig(MSO_MAX_TRACE_LEN=2))
        result = cross_check(corpus(["always_next"])[0], traces_ab_3, registry, ["direct", "mso-st"])
        assert result.unanimous
        assert result.checked == 84
        assert result.accepted == {"direct": 6, "mso-st": 2}
