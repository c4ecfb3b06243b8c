"""Finite traces, letters and the shared symbol table."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from ..config import CONFIG
from ..errors import AlphabetTooLargeError, TraceError
from ..logic.formula import RESERVED_ATOM

Letter = frozenset[str]


@dataclass(frozen=True)
class Trace:
    """Non-empty sequence of atom sets over a fixed alphabet."""

    states: tuple[frozenset[str], ...]
    alphabet: frozenset[str]

    def __post_init__(self):
        states = tuple(frozenset(s) for s in self.states)
        alphabet = frozenset(self.alphabet)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        if not states:
            raise TraceError("traces have at least one state")
        if RESERVED_ATOM in alphabet:
            raise TraceError(f"'{RESERVED_ATOM}' is reserved and cannot be a trace atom")
        for index, state in enumerate(states):
            extra = state - alphabet
            if extra:
                raise TraceError(f"state {index} uses atoms outside the alphabet: {sorted(extra)}")

    @classmethod
    def of(cls, states: Iterable[Iterable[str]], alphabet: Iterable[str] | None = None) -> "Trace":
        """Build a trace; the alphabet defaults to the atoms that occur."""
        states = tuple(frozenset(s) for s in states)
        if alphabet is None:
            alphabet = frozenset().union(*states)
        return cls(states, frozenset(alphabet))

    def __len__(self) -> int:
        return len(self.states)

    def letter_at(self, index: int) -> Letter:
        return letter_at(self, index)

    def letters(self) -> Iterator[Letter]:
        for index in range(len(self.states)):
            yield letter_at(self, index)

    def __str__(self) -> str:
        return "·".join("{" + ",".join(sorted(s)) + "}" for s in self.states)


def letter_at(trace: Trace, index: int) -> Letter:
    """T_i, plus `last` exactly at the final index."""
    if not 0 <= index < len(trace.states):
        raise TraceError(f"index {index} outside [0, {len(trace.states)})")
    state = trace.states[index]
    return state | {RESERVED_ATOM} if index == len(trace.states) - 1 else state


def subsets(alphabet: Iterable[str]) -> list[frozenset[str]]:
    """All subsets of `alphabet`, ordered by bitmask over the sorted names."""
    names = sorted(alphabet)
    return [frozenset(n for bit, n in enumerate(names) if mask >> bit & 1)
            for mask in range(1 << len(names))]


def enumerate_traces(alphabet: Iterable[str], max_len: int,
                     max_alphabet: int | None = None) -> Iterator[Trace]:
    """Every trace of length 1..max_len over `alphabet`, shortest first."""
    alphabet = frozenset(alphabet)
    cap = CONFIG.ENUM_MAX_ALPHABET if max_alphabet is None else max_alphabet
    if len(alphabet) > cap:
        raise AlphabetTooLargeError(f"alphabet of {len(alphabet)} atoms exceeds the cap of {cap}")
    letters = subsets(alphabet)
    for length in range(1, max_len + 1):
        for states in product(letters, repeat=length):
            yield Trace(states, alphabet)


def count_traces(alphabet_size: int, max_len: int) -> int:
    base = 2 ** alphabet_size
    return sum(base ** n for n in range(1, max_len + 1))


def random_traces(alphabet: Iterable[str], count: int, max_len: int,
                  seed: int | None = None) -> list[Trace]:
    """`count` traces with lengths uniform in [1, max_len] and fair atom bits."""
    names = sorted(alphabet)
    rng = np.random.RandomState(CONFIG.RANDOM_SEED if seed is None else seed)
    traces = []
    for _ in range(count):
        length = rng.randint(1, max_len + 1)
        bits = rng.randint(0, 2, size=(length, len(names)))
        states = [frozenset(n for n, bit in zip(names, row) if bit) for row in bits]
        traces.append(Trace(tuple(states), frozenset(names)))
    return traces


@dataclass(frozen=True)
class SymbolTable:
    """Integer ids for atoms: user atoms sorted by name from 1, `last` next."""

    atoms: tuple[str, ...]

    @classmethod
    def for_atoms(cls, atoms: Iterable[str]) -> "SymbolTable":
        names = sorted(set(atoms) - {RESERVED_ATOM})
        return cls(tuple(names))

    @property
    def last_id(self) -> int:
        return len(self.atoms) + 1

    def id_of(self, name: str) -> int:
        if name == RESERVED_ATOM:
            return self.last_id
        try:
            return self.atoms.index(name) + 1
        except ValueError:
            raise KeyError(f"atom {name!r} is not in the symbol table") from None

    def name_of(self, ident: int) -> str:
        if ident == self.last_id:
            return RESERVED_ATOM
        if 1 <= ident <= len(self.atoms):
            return self.atoms[ident - 1]
        raise KeyError(f"no atom with id {ident}")

    def items(self) -> list[tuple[int, str]]:
        return [(i + 1, name) for i, name in enumerate(self.atoms)] + [(self.last_id, RESERVED_ATOM)]

    def __contains__(self, name: str) -> bool:
        return name == RESERVED_ATOM or name in self.atoms
