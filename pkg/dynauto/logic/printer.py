"""Pretty-printing for both dialects.

Binary nodes are parenthesized everywhere except at the top of a formula or
a modality's path, so every printed string re-parses to the same tree.
"""

from __future__ import annotations

from .dialect import Dialect
from .formula import (
    Always, And, Box, Choice, Diamond, DynFormula, Eventually, Falsity, Final,
    Implies, Neg, Next, Or, PathExpr, Prop, PropPath, Release, Seq, Star, Step,
    Test, Truth, Until, WeakNext, desugar, desugar_path,
)

_PREFIX = {Neg: "!", Next: "X ", WeakNext: "wX ", Eventually: "<> ", Always: "[] "}
_INFIX = {And: "&", Or: "|", Implies: "->", Until: "U", Release: "R"}


def to_text(node: DynFormula | PathExpr, dialect: Dialect | str = Dialect.CANONICAL) -> str:
    """Render a formula or path expression in the given dialect."""
    dialect = Dialect.parse(dialect)
    if isinstance(node, PathExpr):
        return _canonical_path(node, True) if dialect is Dialect.CANONICAL else _theory_path(node, True)
    return _canonical(node, True) if dialect is Dialect.CANONICAL else _theory(node, True)


# ------------------------------------------------------------------ #
#  Canonical                                                          #
# ------------------------------------------------------------------ #
def _canonical(formula: DynFormula, top: bool) -> str:
    match formula:
        case Truth():
            return "tt"
        case Falsity():
            return "ff"
        case Final():
            return "end"
        case Prop(name):
            return name
        case Diamond(path, body):
            return f"<{_canonical_path(path, True)}> {_canonical(body, False)}"
        case Box(path, body):
            return f"[{_canonical_path(path, True)}] {_canonical(body, False)}"
    kind = type(formula)
    if kind in _PREFIX:
        return _PREFIX[kind] + _canonical(formula.arg, False)
    if kind in _INFIX:
        left = _operand(formula.left, kind)
        right = _operand(formula.right, kind)
        text = f"{left} {_INFIX[kind]} {right}"
        return text if top else f"({text})"
    raise TypeError(f"not a formula: {formula!r}")


def _operand(formula: DynFormula, parent: type) -> str:
    text = _canonical(formula, False)
    # prefix operators bind weaker than U and R
    if parent in (Until, Release) and type(formula) in _PREFIX:
        return f"({text})"
    return text


def _canonical_path(path: PathExpr, top: bool) -> str:
    match path:
        case Step():
            return "step"
        case Test(formula):
            text = f"({_canonical(formula, True)})?"
            return text if top else f"({text})"
        case PropPath(formula):
            return _canonical(formula, False)
        case Star(body):
            return _canonical_path(body, False) + "*"
        case Choice(left, right):
            text = f"{_canonical_path(left, False)} + {_canonical_path(right, False)}"
            return text if top else f"({text})"
        case Seq(left, right):
            text = f"{_canonical_path(left, False)} ; {_canonical_path(right, False)}"
            return text if top else f"({text})"
    raise TypeError(f"not a path expression: {path!r}")


# ------------------------------------------------------------------ #
#  TheoryGrammar                                                      #
# ------------------------------------------------------------------ #
def _theory(formula: DynFormula, top: bool) -> str:
    match formula:
        case Truth():
            return "&true"
        case Falsity():
            return "&false"
        case Prop(name):
            return name
        case Neg(arg):
            return "~" + _theory_atomic(arg)
        case Diamond(path, body):
            text = f"{_theory_path(path, True)} .>? {_theory(body, False)}"
        case Box(path, body):
            text = f"{_theory_path(path, True)} .>* {_theory(body, False)}"
        case And(left, right):
            text = f"{_theory(left, False)} & {_theory(right, False)}"
        case Or(left, right):
            text = f"{_theory(left, False)} | {_theory(right, False)}"
        case _:
            # no token for this connective
            return _theory(desugar(formula), top)
    return text if top else f"({text})"


def _theory_atomic(formula: DynFormula) -> str:
    if isinstance(formula, (Truth, Falsity, Prop, Neg)):
        return _theory(formula, False)
    return f"({_theory(formula, True)})"


def _theory_path(path: PathExpr, top: bool) -> str:
    match path:
        case Step():
            return "&t"
        case Test(formula):
            return "?" + _theory_atomic(formula)
        case Star(body):
            return "*" + _theory_path(body, False)
        case Choice(left, right):
            text = f"{_theory_path(left, False)} + {_theory_path(right, False)}"
        case Seq(left, right):
            text = f"{_theory_path(left, False)} ;; {_theory_path(right, False)}"
        case PropPath():
            return _theory_path(desugar_path(path), top)
        case _:
            raise TypeError(f"not a path expression: {path!r}")
    return text if top else f"({text})"
