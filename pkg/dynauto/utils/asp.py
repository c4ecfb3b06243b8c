"""Reading and writing ground ASP facts through clingo's term API."""

from __future__ import annotations

from typing import Iterator

import clingo
from clingo import Function, Number, String, SymbolType

from ..errors import FactFormatError


def symbol(value) -> clingo.Symbol:
    if isinstance(value, clingo.Symbol):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans have no ASP term")
    if isinstance(value, int):
        return Number(value)
    return String(str(value))


def fact(name: str, *args) -> str:
    """`name(args).` with ints as numbers, `Const` ids as constants, the rest as strings."""
    return f"{Function(name, [symbol(a) for a in args])}."


def const(name: str) -> clingo.Symbol:
    return Function(name, [])


def read_facts(text: str) -> Iterator[tuple[int, clingo.Symbol]]:
    """Yield (line number, symbol) for each fact; `%` comment lines are skipped."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if not line.endswith("."):
            raise FactFormatError("fact must end with '.'", number)
        try:
            term = clingo.parse_term(line[:-1])
        except RuntimeError as exc:
            raise FactFormatError(f"cannot parse fact: {exc}", number) from None
        if term.type is not SymbolType.Function or not term.name:
            raise FactFormatError(f"not a predicate fact: {line}", number)
        yield number, term


def number_arg(term: clingo.Symbol, index: int, line: int) -> int:
    arg = term.arguments[index]
    if arg.type is not SymbolType.Number:
        raise FactFormatError(f"argument {index + 1} of {term.name} must be an integer", line)
    return arg.number


def string_arg(term: clingo.Symbol, index: int, line: int) -> str:
    arg = term.arguments[index]
    if arg.type is not SymbolType.String:
        raise FactFormatError(f"argument {index + 1} of {term.name} must be a string", line)
    return arg.string


def const_arg(term: clingo.Symbol, index: int, line: int) -> str:
    arg = term.arguments[index]
    if arg.type is not SymbolType.Function or arg.arguments:
        raise FactFormatError(f"argument {index + 1} of {term.name} must be a constant", line)
    return arg.name
