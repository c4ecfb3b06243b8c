import pytest

from dynauto.logic import (
    STEP, TRUE, Box, Choice, Diamond, Neg, Next, Or, Prop, PropPath, Release, Seq, Star,
    Test, Until, WeakNext, atoms, closure, core, desugar, guard_stars, is_core,
    is_test_only, nnf, parse, positive_closure, size, to_text,
)
from dynauto.logic.corpus import CORPUS

a, b = Prop("a"), Prop("b")


class TestDesugaring:

    @pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
    def test_core_output(self, entry):
        assert is_core(core(entry.formula))

    def test_next(self):
        assert desugar(Next(a)) == Diamond(STEP, a)

    def test_prop_path(self):
        assert desugar(Diamond(PropPath(a), b)) == Diamond(Seq(Test(a), STEP), b)

    def test_until(self):
        assert desugar(Until(a, b)) == Diamond(Star(Seq(Test(a), STEP)), b)

    def test_core_is_identity_on_core(self, always_next):
        assert core(always_next) is always_next


class TestNnf:

    def test_de_morgan(self):
        assert to_text(nnf(parse("!(a & b)"))) == "!a | !b"

    def test_modal_duality(self):
        assert nnf(parse("![step] a")) == Diamond(STEP, Neg(a))

    def test_temporal_duals(self):
        assert nnf(parse("!X a")) == WeakNext(Neg(a))
        assert nnf(parse("!(a U b)")) == Release(Neg(a), Neg(b))

    def test_double_negation(self):
        assert nnf(parse("!!a")) == a

    def test_negation_reaches_tests(self):
        assert nnf(parse("<(!!a)?> b")) == Diamond(Test(a), b)

    @pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
    def test_negations_only_on_atoms(self, entry):
        def check(node):
            if isinstance(node, Neg):
                assert isinstance(node.arg, Prop)
            for value in vars(node).values():
                if hasattr(value, "__dataclass_fields__"):
                    check(value)
        check(nnf(entry.formula))


class TestClosure:

    def test_worked_example_members(self, always_next):
        members = positive_closure(always_next)
        assert members == (
            always_next,
            Diamond(Test(Box(Star(STEP), b)), Diamond(STEP, a)),
            Box(Star(STEP), b),
            Box(STEP, Box(Star(STEP), b)),
            b,
            Diamond(STEP, a),
            a,
        )

    def test_full_closure_adds_negations(self, always_next):
        members = closure(always_next)
        assert len(members) == 14
        assert Neg(always_next) in members

    def test_closure_of_negation_does_not_double(self):
        members = closure(parse("!a"))
        assert members == (Neg(a), a)

    def test_star_closure_terminates(self):
        assert len(positive_closure(parse("[step**] a"))) < 10


class TestStructure:

    def test_atoms(self, always_next):
        assert atoms(always_next) == {"a", "b"}
        assert atoms(TRUE) == frozenset()

    def test_size(self):
        assert size(parse("a & b")) == 3

    def test_test_only(self):
        assert is_test_only(Star(Choice(Test(a), Test(b))))
        assert not is_test_only(Seq(Test(a), STEP))
        assert not is_test_only(PropPath(a))


class TestGuardStars:

    def test_test_only_star_collapses(self):
        assert guard_stars(parse("<((a)?)*> b")) == Diamond(Test(TRUE), b)

    def test_step_star_unchanged(self):
        assert guard_stars(parse("<step*> a")) == Diamond(Star(STEP), a)

    def test_mixed_star_keeps_the_step(self):
        assert guard_stars(parse("<((a)? + step)*> b")) == Diamond(Star(STEP), b)

    def test_output_is_core(self):
        for entry in CORPUS:
            assert is_core(guard_stars(entry.formula))

    def test_or_is_preserved(self):
        guarded = guard_stars(Or(a, b))
        assert guarded == desugar(Or(a, b))
