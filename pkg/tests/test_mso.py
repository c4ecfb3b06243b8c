import re

import pytest

from dynauto.engines import default_registry
from dynauto.errors import ConfigError, ResourceLimitError, TraceError, UnassignedVariableError
from dynauto.logic import STEP, Box, Diamond, Prop, Seq, Star, Test, parse
from dynauto.logic.corpus import corpus, two_atom_corpus
from dynauto.mso import (
    VERUM, And, Assignment, Bound, Eq, ExistsFO, ExistsSO, First, ForallSO, Last, Le, Less,
    Member, MsoEvaluator, NextIn, Not, SetEq, Subset, Succ, VarGen, bound_variables,
    emit_mona, eval_mso, expand_all, free_variables, mso_enc, predicate_names, st_m, st_p,
)
from dynauto.semantics import rel, sat
from dynauto.trace import Trace, random_traces

# every entry over {a, b}; the evaluator decides each on all traces up to length 3
TRANSLATED = two_atom_corpus()


def holds(trace, formula, **v1):
    return eval_mso(trace, formula, Assignment(v1))


class TestVarGen:

    def test_sequences(self):
        gen = VarGen()
        assert [gen.fo(), gen.fo(), gen.so(), gen.pred()] == ["V0", "V1", "X0", "Q0"]


class TestMacros:

    @pytest.fixture
    def trace(self):
        return Trace.of([{"a"}, set(), {"a"}], {"a"})

    def test_order_macros(self, trace):
        for x in range(3):
            assert holds(trace, First("x"), x=x) == (x == 0)
            assert holds(trace, Last("x"), x=x) == (x == 2)
            for y in range(3):
                assert holds(trace, Succ("x", "y"), x=x, y=y) == (y == x + 1)
                assert holds(trace, Eq("x", "y"), x=x, y=y) == (x == y)
                assert holds(trace, Le("x", "y"), x=x, y=y) == (x <= y)
                assert holds(trace, Less("x", "y"), x=x, y=y) == (x < y)

    def test_consecutive_members(self, trace):
        assert holds(trace, NextIn("a", "x", "y"), x=0, y=2)
        assert not holds(trace, NextIn("a", "x", "y"), x=0, y=1)
        assert not holds(trace, NextIn("a", "x", "y"), x=2, y=2)

    def test_set_macros(self, trace):
        assignment = Assignment({"x": 0, "y": 2}, {"Y": frozenset({0, 1, 2}), "E": frozenset()})
        assert eval_mso(trace, Bound("a", "x", "y"), assignment)
        assert eval_mso(trace, Subset("a", "Y"), assignment)
        assert not eval_mso(trace, Subset("Y", "a"), assignment)
        assert eval_mso(trace, SetEq("E", "E"), assignment)

    def test_expansion_has_no_macros(self):
        expanded = expand_all(And(Succ("x", "y"), NextIn("X", "x", "y")))
        assert "Succ" not in repr(expanded)
        assert "NextIn" not in repr(expanded)


class TestEvaluator:

    def test_singleton_witness(self, accepted_trace):
        formula = ExistsSO("X", And(Bound("X", "z", "z"), Member("X", "z")))
        assert holds(accepted_trace, formula, z=0)

    def test_second_order_universal(self, accepted_trace):
        formula = ForallSO("X", Not(And(Member("X", "z"), Not(Member("X", "z")))))
        assert holds(accepted_trace, formula, z=1)

    def test_atoms_are_bound_from_the_trace(self, rejected_trace):
        assert holds(rejected_trace, Member("a", "x"), x=1)
        assert not holds(rejected_trace, Member("a", "x"), x=0)

    def test_unassigned_variable(self, accepted_trace):
        with pytest.raises(UnassignedVariableError):
            eval_mso(accepted_trace, Member("Y", "x"))

    def test_position_out_of_range(self, accepted_trace):
        with pytest.raises(TraceError):
            holds(accepted_trace, Member("a", "x"), x=5)

    def test_unknown_strategy(self, accepted_trace):
        with pytest.raises(ConfigError):
            MsoEvaluator(accepted_trace, "greedy")

    def test_trace_length_limit(self):
        trace = Trace.of([set()] * 7, set())
        with pytest.raises(ResourceLimitError):
            MsoEvaluator(trace, max_trace_len=6)

    def test_exhaustive_variable_cap(self, accepted_trace):
        formula = VERUM
        for i in range(13):
            formula = ExistsSO(f"X{i}", formula)
        evaluator = MsoEvaluator(accepted_trace, "exhaustive", max_so_vars=12)
        with pytest.raises(ResourceLimitError):
            evaluator.evaluate(formula, Assignment())

    def test_node_budget(self, always_next, accepted_trace):
        evaluator = MsoEvaluator(accepted_trace, "pruned", node_budget=10)
        with pytest.raises(ResourceLimitError):
            evaluator.evaluate(st_m("T", always_next), Assignment({"T": 0}, {"a": frozenset({1}),
                                                                       "b": frozenset({0, 1, 2})}))

    def test_repeated_quantifier_is_memoized(self, accepted_trace):
        formula = st_m("T", corpus(["nested_star"])[0].formula)
        evaluator = MsoEvaluator(accepted_trace, "pruned")
        assignment = Assignment({"T": 0}, {"a": frozenset({1}), "b": frozenset({0, 1, 2})})
        first = evaluator.evaluate(formula, assignment)
        assert evaluator.nodes > 1
        assert evaluator.evaluate(formula, assignment) == first
        assert evaluator.nodes == 1

    def test_pruned_agrees_with_exhaustive_on_nested_stars(self, traces_ab_3):
        entry = corpus(["nested_star"])[0]
        translated = st_m("T", entry.formula)
        for trace in traces_ab_3[:40]:
            pruned = eval_mso(trace, translated, Assignment({"T": 0}), strategy="pruned")
            assert pruned == eval_mso(trace, translated, Assignment({"T": 0}), strategy="exhaustive")


class TestStandardTranslation:

    def test_step(self):
        assert st_p("w", "v", STEP) == Succ("w", "v")

    def test_atom(self):
        assert st_m("T", Prop("a")) == Member("a", "T")

    def test_free_variables(self, always_next):
        fo, so = free_variables(st_m("T", always_next))
        assert fo == {"T"}
        assert so == {"a", "b"}

    def test_one_set_quantifier_per_star(self, always_next):
        assert [v for v in bound_variables(st_m("T", always_next)) if v.startswith("X")] == ["X0"]

    @pytest.mark.parametrize("entry", TRANSLATED, ids=lambda e: e.name)
    def test_binders_are_fresh(self, entry):
        names = bound_variables(st_m("T", entry.formula))
        assert len(names) == len(set(names))

    def test_successor_helpers_are_distinct(self):
        translated = st_m("T", parse("<step + step> a"))
        names = bound_variables(translated)
        assert len(names) == len(set(names))
        binders = re.findall(r"(?:ex1|all1|ex2|all2) (\w+):", emit_mona(translated, {"a"}))
        assert len(binders) == len(set(binders))

    @pytest.mark.parametrize("path", [
        STEP, Test(Prop("a")), Star(STEP), Seq(STEP, Star(Test(Prop("b")))),
        Star(Seq(Test(Prop("a")), STEP)), parse("<((a)? + step)*> tt").path,
    ])
    def test_paths(self, path, traces_ab_3):
        translated = st_p("w", "v", path)
        for trace in traces_ab_3:
            pairs = rel(path, trace)
            for w in range(len(trace)):
                for v in range(len(trace)):
                    assert holds(trace, translated, w=w, v=v) == ((w, v) in pairs)

    @pytest.mark.parametrize("entry", TRANSLATED, ids=lambda e: e.name)
    def test_matches_semantics(self, entry, traces_ab_3):
        translated = st_m("T", entry.formula)
        for trace in traces_ab_3:
            for k in range(len(trace)):
                assert holds(trace, translated, T=k) == sat(trace, k, entry.formula)

    def test_exhaustive_strategy_agrees(self, always_next, traces_ab_3):
        translated = st_m("T", always_next)
        for trace in traces_ab_3:
            verdict = eval_mso(trace, translated, Assignment({"T": 0}), strategy="exhaustive")
            assert verdict == sat(trace, 0, always_next)


class TestClosureEncoding:

    def test_atom_needs_no_predicates(self):
        assert mso_enc("T", Prop("a")) == Member("a", "T")

    def test_worked_example_predicates(self, always_next):
        names = predicate_names(always_next)
        assert names == {
            "Q0": always_next,
            "Q1": Diamond(Test(Box(Star(STEP), Prop("b"))), Diamond(STEP, Prop("a"))),
            "Q2": Box(Star(STEP), Prop("b")),
            "Q3": Box(STEP, Box(Star(STEP), Prop("b"))),
            "Q4": Diamond(STEP, Prop("a")),
        }

    def test_one_set_quantifier_per_member(self, always_next):
        encoded = mso_enc("T", always_next)
        assert sorted(v for v in bound_variables(encoded) if v.startswith("Q")) == [
            "Q0", "Q1", "Q2", "Q3", "Q4"]
        assert free_variables(encoded) == ({"T"}, {"a", "b"})

    @pytest.mark.parametrize("entry", TRANSLATED, ids=lambda e: e.name)
    def test_binders_are_fresh(self, entry):
        names = bound_variables(mso_enc("T", entry.formula))
        assert len(names) == len(set(names))

    @pytest.mark.parametrize("entry", TRANSLATED, ids=lambda e: e.name)
    def test_matches_semantics(self, entry, traces_ab_3):
        encoded = mso_enc("T", entry.formula)
        for trace in traces_ab_3:
            for k in range(len(trace)):
                assert holds(trace, encoded, T=k) == sat(trace, k, entry.formula)

    def test_exhaustive_strategy_agrees(self, traces_ab_3):
        formula = parse("X a")
        encoded = mso_enc("T", formula)
        for trace in traces_ab_3:
            verdict = eval_mso(trace, encoded, Assignment({"T": 0}), strategy="exhaustive")
            assert verdict == sat(trace, 0, formula)


class TestMona:

    def test_atom_program(self):
        assert emit_mona(st_m("T", Prop("a")), ["a"]) == "m2l-str;\nvar2 a;\nvar1 T;\nT in a;\n"

    def test_header(self, always_next):
        lines = emit_mona(st_m("T", always_next), {"a", "b"}).splitlines()
        assert lines[:3] == ["m2l-str;", "var2 a, b;", "var1 T;"]
        assert lines[-1].endswith(";")

    def test_quantifier_counts(self, always_next):
        assert emit_mona(st_m("T", always_next), {"a", "b"}).count("ex2 ") == 1
        assert emit_mona(mso_enc("T", always_next), {"a", "b"}).count("ex2 ") == 5

    def test_deterministic(self, always_next):
        assert emit_mona(mso_enc("T", always_next), ["b", "a"]) == emit_mona(mso_enc("T", always_next), ["a", "b"])

    def test_keyword_atoms_are_renamed(self):
        assert emit_mona(Member("in", "T"), ["in"]) == "m2l-str;\nvar2 A_in;\nvar1 T;\nT in A_in;\n"

    def test_equality_is_native(self):
        assert emit_mona(Eq("x", "y"), []).splitlines()[-1] == "x = y;"

    def test_free_set_must_be_an_atom(self):
        with pytest.raises(ValueError):
            emit_mona(ExistsFO("x", Member("X", "x")), ["a"])


class TestRandomTraces:

    @pytest.fixture(scope="class")
    def traces(self):
        return random_traces({"a", "b", "c"}, 60, 6, seed=5)

    @pytest.mark.parametrize("name", ["always_next", "until", "response", "even_steps"])
    def test_engines_match_semantics(self, name, traces):
        formula = corpus([name])[0].formula
        registry = default_registry()
        checks = {engine: registry.checker(engine, formula) for engine in ("mso-st", "mso-enc")}
        for trace in traces:
            expected = sat(trace, 0, formula)
            for engine, check in checks.items():
                assert check(trace) == expected, f"{engine} on {trace}"
