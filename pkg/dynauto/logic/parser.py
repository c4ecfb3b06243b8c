"""Recursive-descent parsers for the Canonical and TheoryGrammar dialects.

Canonical, weakest binding first:

    ->  (right)   |   &   prefix ! X wX <> []   U R (right)   <ρ>φ [ρ]φ   atoms

Paths: `+` weakest, then `;`, postfix `*`, `(φ)?` tests, `step`, and a bare
formula φ standing for (φ?;step).

TheoryGrammar, weakest first:

    |   &   ρ .>? φ / ρ .>* φ (right)   prefix ~   atoms &true &false

Paths: `+`, `;;`, prefix `*`, prefix `?`, `&t`.

Path and formula syntax overlap at `(`; the parsers try the alternatives in a
fixed order and memoize every attempt by token position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from ..errors import FormulaSyntaxError, ReservedAtomError
from .dialect import Dialect
from .formula import (
    FALSE, RESERVED_ATOM, STEP, TRUE,
    Always, And, Box, Choice, Diamond, DynFormula, Eventually, Final, Implies,
    Neg, Next, Or, PathExpr, Prop, PropPath, Release, Seq, Star, Test, Until,
    WeakNext,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_CANONICAL_LEXICON = re.compile(r"""
    (?P<NEWLINE>\n)
  | (?P<SKIP>[ \t\r]+|\#[^\n]*)
  | (?P<OP>->|<>|\[\]|[|&!<>\[\]()+;*?])
  | (?P<WORD>[A-Za-z][A-Za-z0-9_]*)
""", re.VERBOSE)

_THEORY_LEXICON = re.compile(r"""
    (?P<NEWLINE>\n)
  | (?P<SKIP>[ \t\r]+|\#[^\n]*)
  | (?P<OP>\.>\?|\.>\*|;;|&[a-z]+|[&|~?*+()])
  | (?P<WORD>[a-z][A-Za-z0-9_]*)
""", re.VERBOSE)

_CANONICAL_KEYWORDS = {"tt", "ff", "end", "step", "wX", "X", "U", "R"}
_THEORY_CONSTANTS = {"&true", "&false", "&t"}


def tokenize(text: str, dialect: Dialect = Dialect.CANONICAL) -> list[Token]:
    """Split `text` into tokens; the list always ends with an EOF token."""
    lexicon = _CANONICAL_LEXICON if dialect is Dialect.CANONICAL else _THEORY_LEXICON
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = lexicon.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, column)
        kind, lexeme = match.lastgroup, match.group()
        pos = match.end()
        if kind == "NEWLINE":
            line, line_start = line + 1, pos
            continue
        if kind == "SKIP":
            continue
        if kind == "OP":
            if lexeme.startswith("&") and len(lexeme) > 1 and lexeme not in _THEORY_CONSTANTS:
                raise FormulaSyntaxError(f"unknown constant {lexeme!r}", line, column,
                                         _THEORY_CONSTANTS)
            tokens.append(Token(lexeme, lexeme, line, column))
            continue
        if lexeme == RESERVED_ATOM:
            raise ReservedAtomError(f"'{RESERVED_ATOM}' is reserved and cannot be used as an atom",
                                    line, column)
        if dialect is Dialect.CANONICAL and lexeme in _CANONICAL_KEYWORDS:
            tokens.append(Token(lexeme, lexeme, line, column))
        elif lexeme[0].islower():
            tokens.append(Token("ATOM", lexeme, line, column))
        else:
            raise FormulaSyntaxError(f"unknown operator {lexeme!r}", line, column, {"X", "U", "R"})
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    """Token cursor with memoized backtracking."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self._memo: dict[tuple, tuple] = {}
        self._furthest: FormulaSyntaxError | None = None

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def accept(self, kind: str) -> bool:
        if self.peek().kind == kind:
            self.advance()
            return True
        return False

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            self.fail({kind})
        return self.advance()

    def fail(self, expected: set[str]):
        token = self.peek()
        found = "end of input" if token.kind == "EOF" else repr(token.text)
        raise FormulaSyntaxError(f"unexpected {found}", token.line, token.column, expected)

    def attempt(self, key: tuple, production: Callable):
        """Run `production` at the current position; None (and no movement) on failure."""
        key = (key, self.pos)
        if key not in self._memo:
            start = self.pos
            try:
                result = production()
                self._memo[key] = (result, self.pos)
            except FormulaSyntaxError as exc:
                self._note(exc)
                self._memo[key] = (None, start)
            self.pos = start
        result, end = self._memo[key]
        if result is not None:
            self.pos = end
        return result

    def _note(self, exc: FormulaSyntaxError):
        if self._furthest is None or (exc.line, exc.column) > (self._furthest.line, self._furthest.column):
            self._furthest = exc

    def finish(self, result):
        if self.peek().kind != "EOF":
            try:
                self.fail({"EOF"})
            except FormulaSyntaxError as exc:
                self._note(exc)
                raise self._furthest from None
        return result


# ------------------------------------------------------------------ #
#  Canonical                                                          #
# ------------------------------------------------------------------ #
_CANONICAL_PREFIX = {"!": Neg, "X": Next, "wX": WeakNext, "<>": Eventually, "[]": Always}
_FORMULA_INFIX = {"&", "|", "->", "U", "R"}


class CanonicalParser(_Parser):

    def formula(self) -> DynFormula:
        left = self._disjunction()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def _disjunction(self) -> DynFormula:
        left = self._conjunction()
        while self.accept("|"):
            left = Or(left, self._conjunction())
        return left

    def _conjunction(self) -> DynFormula:
        left = self._unary()
        while self.accept("&"):
            left = And(left, self._unary())
        return left

    def _unary(self) -> DynFormula:
        node = _CANONICAL_PREFIX.get(self.peek().kind)
        if node is not None:
            self.advance()
            return node(self._unary())
        return self._temporal()

    def _temporal(self) -> DynFormula:
        left = self._modal()
        if self.accept("U"):
            return Until(left, self._temporal())
        if self.accept("R"):
            return Release(left, self._temporal())
        return left

    def _modal(self) -> DynFormula:
        if self.accept("<"):
            path = self.path()
            self.expect(">")
            return Diamond(path, self._modal_operand())
        if self.accept("["):
            path = self.path()
            self.expect("]")
            return Box(path, self._modal_operand())
        return self._primary()

    def _modal_operand(self) -> DynFormula:
        node = _CANONICAL_PREFIX.get(self.peek().kind)
        if node is not None:
            self.advance()
            return node(self._modal_operand())
        return self._modal()

    def _primary(self) -> DynFormula:
        token = self.peek()
        if token.kind == "ATOM":
            self.advance()
            return Prop(token.text)
        if self.accept("tt"):
            return TRUE
        if self.accept("ff"):
            return FALSE
        if self.accept("end"):
            return Final()
        if self.accept("("):
            inner = self.formula()
            self.expect(")")
            return inner
        self.fail({"ATOM", "tt", "ff", "end", "(", "<", "[", *_CANONICAL_PREFIX})

    # paths
    def path(self) -> PathExpr:
        left = self._sequence()
        while self.accept("+"):
            left = Choice(left, self._sequence())
        return left

    def _sequence(self) -> PathExpr:
        left = self._postfix()
        while self.accept(";"):
            left = Seq(left, self._postfix())
        return left

    def _postfix(self) -> PathExpr:
        node = self._path_primary()
        while self.accept("*"):
            node = Star(node)
        return node

    def _path_primary(self) -> PathExpr:
        if self.accept("step"):
            return STEP
        if self.peek().kind == "(":
            test = self.attempt(("test",), self._parenthesized_test)
            if test is not None:
                return test
            group = self.attempt(("group",), self._parenthesized_path)
            if group is not None and self.peek().kind not in _FORMULA_INFIX:
                return group
            bare = self.attempt(("bare",), self._bare_formula)
            if bare is not None:
                return bare
            if group is not None:
                return group
            raise self._furthest
        return self._bare_formula()

    def _parenthesized_test(self) -> PathExpr:
        self.expect("(")
        formula = self.formula()
        self.expect(")")
        self.expect("?")
        return Test(formula)

    def _parenthesized_path(self) -> PathExpr:
        self.expect("(")
        inner = self.path()
        self.expect(")")
        return inner

    def _bare_formula(self) -> PathExpr:
        formula = self.formula()
        if self.accept("?"):
            return Test(formula)
        return PropPath(formula)


# ------------------------------------------------------------------ #
#  TheoryGrammar                                                      #
# ------------------------------------------------------------------ #
class TheoryParser(_Parser):

    def formula(self) -> DynFormula:
        left = self._conjunction()
        while self.accept("|"):
            left = Or(left, self._conjunction())
        return left

    def _conjunction(self) -> DynFormula:
        left = self._dynamic()
        while self.accept("&"):
            left = And(left, self._dynamic())
        return left

    def _dynamic(self) -> DynFormula:
        modal = self.attempt(("modal",), self._modal_path)
        if modal is not None:
            path, operator = modal
            body = self._dynamic()
            return Diamond(path, body) if operator == ".>?" else Box(path, body)
        return self._unary()

    def _modal_path(self) -> tuple[PathExpr, str]:
        path = self.path()
        operator = self.peek().kind
        if operator not in (".>?", ".>*"):
            self.fail({".>?", ".>*"})
        self.advance()
        return path, operator

    def _unary(self) -> DynFormula:
        if self.accept("~"):
            return Neg(self._unary())
        return self._primary()

    def _primary(self) -> DynFormula:
        token = self.peek()
        if token.kind == "ATOM":
            self.advance()
            return Prop(token.text)
        if self.accept("&true"):
            return TRUE
        if self.accept("&false"):
            return FALSE
        if self.accept("("):
            inner = self.formula()
            self.expect(")")
            return inner
        self.fail({"ATOM", "&true", "&false", "(", "~"})

    # paths
    def path(self) -> PathExpr:
        left = self._sequence()
        while self.accept("+"):
            left = Choice(left, self._sequence())
        return left

    def _sequence(self) -> PathExpr:
        left = self._prefix()
        while self.accept(";;"):
            left = Seq(left, self._prefix())
        return left

    def _prefix(self) -> PathExpr:
        if self.accept("*"):
            return Star(self._prefix())
        if self.accept("?"):
            return Test(self._unary())
        if self.accept("&t"):
            return STEP
        if self.accept("("):
            inner = self.path()
            self.expect(")")
            return inner
        self.fail({"*", "?", "&t", "("})


def _parser(text: str, dialect: Dialect) -> _Parser:
    tokens = tokenize(text, dialect)
    return CanonicalParser(tokens) if dialect is Dialect.CANONICAL else TheoryParser(tokens)


def parse(text: str, dialect: Dialect | str = Dialect.CANONICAL) -> DynFormula:
    """Parse one formula; raises FormulaSyntaxError with a line:column position."""
    parser = _parser(text, Dialect.parse(dialect))
    return parser.finish(parser.formula())


def parse_path(text: str, dialect: Dialect | str = Dialect.CANONICAL) -> PathExpr:
    """Parse one path expression."""
    parser = _parser(text, Dialect.parse(dialect))
    return parser.finish(parser.path())
