import pytest

from dynauto.automata import (
    Conjunct, accepts, afw_from_facts, afw_to_dot, afw_to_facts, build_afw, delta_at,
    delta_explicit, letters,
)
from dynauto.automata.afw import antichain
from dynauto.config import DynConfig
from dynauto.errors import FactFormatError, ResourceLimitError
from dynauto.logic import STEP, Box, Prop, Star, parse
from dynauto.logic.corpus import two_atom_corpus
from dynauto.semantics import models

b_in = ("b", True)
last_in, last_out = ("last", True), ("last", False)

ALWAYS_NEXT_FACTS = """\
prop(1,a).
prop(2,b).
prop(3,last).
state(0,"<(([step*] b)?) ; step> a").
state(1,"a").
state(2,"[step*] b").
initial_state(0).
delta(0,0).
delta(0,0,in,2).
delta(0,0,out,3).
delta(0,0,1).
delta(0,0,2).
delta(1,0).
delta(1,0,in,1).
delta(2,0).
delta(2,0,in,2).
delta(2,0,out,3).
delta(2,0,2).
delta(2,1).
delta(2,1,in,2).
delta(2,1,in,3).
"""


class TestWorkedExample:

    def test_states(self, always_next):
        afw = build_afw(always_next)
        assert afw.states == (always_next, Prop("a"), Box(Star(STEP), Prop("b")))
        assert afw.initial == 0

    def test_transitions(self, always_next):
        afw = build_afw(always_next)
        assert afw.delta[0] == (Conjunct(frozenset({b_in, last_out}), frozenset({1, 2})),)
        assert afw.delta[1] == (Conjunct(frozenset({("a", True)}), frozenset()),)
        assert afw.delta[2] == (Conjunct(frozenset({b_in, last_out}), frozenset({2})),
                                Conjunct(frozenset({b_in, last_in}), frozenset()))

    def test_runs(self, always_next, accepted_trace, rejected_trace):
        afw = build_afw(always_next)
        assert accepts(afw, accepted_trace)
        assert not accepts(afw, rejected_trace)

    def test_facts(self, always_next):
        assert afw_to_facts(build_afw(always_next)) == ALWAYS_NEXT_FACTS

    def test_facts_round_trip(self, always_next):
        afw = build_afw(always_next)
        assert afw_from_facts(afw_to_facts(afw)) == afw

    def test_dot_has_a_hub_for_the_split(self, always_next):
        text = afw_to_dot(build_afw(always_next))
        assert text.startswith("digraph afw {")
        assert 'u0_0 [shape=box, label="∀"];' in text


class TestConstants:

    def test_true_is_one_valid_state(self):
        afw = build_afw(parse("tt"))
        assert len(afw.states) == 1
        assert afw.valid == {0}

    def test_false_has_no_conjuncts(self):
        afw = build_afw(parse("ff"))
        assert afw.delta == ((),)

    def test_end(self):
        afw = build_afw(parse("end"))
        assert len(afw.states) == 2
        assert Conjunct(frozenset({last_in}), frozenset()) in afw.delta[0]
        assert afw.delta[1] == ()


class TestStarLoops:

    def test_test_only_star_is_skipped(self):
        afw = build_afw(parse("<((a)? + (b)?)*> b"))
        assert afw.delta[0] == (Conjunct(frozenset({b_in}), frozenset()),)

    def test_diamond_loop_without_step_is_false(self):
        afw = build_afw(parse("<((a)? + step)*> (b & end)"))
        assert len(afw.states) == 2
        assert all(("a", True) not in c.conditions for c in afw.delta[0])
        assert Conjunct(frozenset({b_in, last_in}), frozenset()) in afw.delta[0]
        assert Conjunct(frozenset({last_out}), frozenset({0})) in afw.delta[0]


class TestExplicitDelta:

    def test_split_into_two_obligations(self, always_next):
        afw = build_afw(always_next)
        assert delta_explicit(afw, 0, frozenset({"b"})) == {frozenset({1, 2})}
        assert delta_explicit(afw, 0, frozenset({"b", "last"})) == frozenset()
        assert delta_explicit(afw, 2, frozenset({"b", "last"})) == {frozenset()}

    def test_antichain_over_formula_sets(self):
        a, b = Prop("a"), Box(Star(STEP), Prop("b"))
        sets = [frozenset({a, b}), frozenset({b}), frozenset({a, b, Prop("c")})]
        assert antichain(sets) == {frozenset({b})}

    def test_letter_cap(self, monkeypatch):
        afw = build_afw(parse("a & b"))
        monkeypatch.setattr("dynauto.automata.afw.CONFIG", DynConfig(EXPLICIT_LETTER_CAP=1))
        with pytest.raises(ResourceLimitError):
            delta_explicit(afw, 0, frozenset())
        with pytest.raises(ResourceLimitError):
            letters(["a", "b"], max_atoms=1)


@pytest.mark.parametrize("entry", two_atom_corpus(), ids=lambda e: e.name)
class TestCoherence:

    def test_symbolic_matches_explicit(self, entry):
        afw = build_afw(entry.formula)
        for state in range(len(afw.states)):
            for letter in letters(["a", "b"], with_last=True):
                assert delta_at(afw, state, letter) == delta_explicit(afw, state, letter)

    def test_runs_agree_with_semantics(self, entry, traces_ab_3):
        afw = build_afw(entry.formula)
        for trace in traces_ab_3:
            assert accepts(afw, trace) == models(trace, entry.formula)


class TestFactErrors:

    def test_two_initial_states(self):
        with pytest.raises(FactFormatError):
            afw_from_facts('prop(1,a).\nprop(2,last).\nstate(0,"a").\nstate(1,"a").\n'
                           'initial_state(0).\ninitial_state(1).\n')

    def test_undeclared_successor(self):
        with pytest.raises(FactFormatError):
            afw_from_facts('prop(1,a).\nprop(2,last).\nstate(0,"a").\ninitial_state(0).\n'
                           'delta(0,0).\ndelta(0,0,5).\n')

    def test_bad_polarity(self):
        with pytest.raises(FactFormatError):
            afw_from_facts('prop(1,a).\nprop(2,last).\nstate(0,"a").\ninitial_state(0).\n'
                           'delta(0,0).\ndelta(0,0,maybe,1).\n')

    def test_symbol_ids_must_follow_names(self):
        with pytest.raises(FactFormatError):
            afw_from_facts('prop(2,a).\nprop(1,last).\nstate(0,"a").\ninitial_state(0).\n')

    def test_missing_period(self):
        with pytest.raises(FactFormatError):
            afw_from_facts("prop(1,a)\n")
