"""Bundled formula corpus.

Entries are Canonical text. The φ1–φ3 planning constraints are given over
fixed propositional atoms; the primed variants map them onto {a, b} so they
fit the two-atom exhaustive suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .formula import DynFormula
from .parser import parse


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    note: str = ""

    @cached_property
    def formula(self) -> DynFormula:
        return parse(self.text)


_MOVE_SIDEWAYS = "(move_r* + move_l*)"

CORPUS: tuple[CorpusEntry, ...] = (
    # worked example: []b & X a
    CorpusEntry("always_next", "<(([step*] b)?) ; step> a", "always b and next a"),

    # planning constraints, propositionalized
    CorpusEntry("pickup_delivered", "[step*] [(pickup_s)?] <(step ; ((move)? + (wait)?))* ; (deliver_s)?> tt",
                "every pickup is eventually followed by a delivery"),
    CorpusEntry("delivery_cycles", "<(move* ; pickup_s* ; move* ; deliver_s ; move* ; putdown)* ; wait*> end",
                "delivery cycles then waiting"),
    CorpusEntry("grid_routine",
                f"<(wait* ; {_MOVE_SIDEWAYS} ; move_u* ; pickup_s ; {_MOVE_SIDEWAYS} ; move_u* ; "
                f"deliver_s ; {_MOVE_SIDEWAYS} ; move_d* ; putdown)* ; wait*> end",
                "grid delivery routine then waiting"),
    CorpusEntry("pickup_ab", "[step*] [(a)?] <(step ; ((!b)?))* ; (b)?> tt", "pickup_delivered over a, b"),
    CorpusEntry("cycle_ab", "<(b* ; a* ; b* ; a ; b* ; !b)* ; (!a)*> end", "delivery_cycles over a, b"),
    CorpusEntry("routine_ab", "<((!a)* ; (b* + !b*) ; a ; (b* + !b*) ; b)* ; (!a)*> end", "grid_routine over a, b"),

    # derived operators
    CorpusEntry("and", "a & b"),
    CorpusEntry("or", "a | b"),
    CorpusEntry("implies", "a -> X b"),
    CorpusEntry("not", "!(a & b)"),
    CorpusEntry("next", "X a"),
    CorpusEntry("weak_next", "wX a"),
    CorpusEntry("final", "<> end"),
    CorpusEntry("last_has_a", "<> (a & end)"),
    CorpusEntry("eventually", "<> a"),
    CorpusEntry("always", "[] (a -> X b)"),
    CorpusEntry("until", "a U b"),
    CorpusEntry("release", "a R b"),
    CorpusEntry("response", "[] (a -> <> b)"),
    CorpusEntry("neg_always_next", "!<(([step*] b)?) ; step> a"),

    # stars
    CorpusEntry("test_star", "<((a)? + (b)?)*> b", "test-only star collapses"),
    CorpusEntry("test_star_box", "[((a)?)*] a"),
    CorpusEntry("mixed_star", "<((a)? + step)*> (b & end)", "star body may loop without moving"),
    CorpusEntry("nested_star", "<((a ; step*)*)> b"),
    CorpusEntry("even_steps", "<(step ; step)*> (a & end)"),
    CorpusEntry("box_star_seq", "[(a ; b)*] !b"),
    CorpusEntry("star_of_star", "[step**] (a | b)"),
    CorpusEntry("nested_tests", "<((<step> a)? ; step)*> ([step] ff)"),
    CorpusEntry("constant_true", "tt"),
    CorpusEntry("constant_false", "ff"),
)


def corpus(names: list[str] | None = None) -> tuple[CorpusEntry, ...]:
    """Corpus entries, optionally restricted to `names` (in corpus order)."""
    if not names:
        return CORPUS
    unknown = set(names) - {entry.name for entry in CORPUS}
    if unknown:
        raise KeyError(f"unknown corpus entries: {', '.join(sorted(unknown))}")
    return tuple(entry for entry in CORPUS if entry.name in names)


def two_atom_corpus() -> tuple[CorpusEntry, ...]:
    """Entries over atoms {a, b} only."""
    from .formula import atoms
    return tuple(entry for entry in CORPUS if atoms(entry.formula) <= {"a", "b"})
