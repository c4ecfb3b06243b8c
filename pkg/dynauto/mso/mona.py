"""MONA program text (M2L-Str mode) for MSO formulas."""

from __future__ import annotations

from typing import Iterable

from .formula import (
    And, Eq, ExistsFO, ExistsSO, Falsum, ForallFO, ForallSO, Fresh, Iff, Implies, Less, Macro,
    Member, MsoFormula, Not, Or, Verum, free_variables, helper_names,
)

KEYWORD_PREFIX = "A_"

MONA_KEYWORDS = frozenset("""
    all0 all1 all2 allpos assert const defaultwhere1 defaultwhere2 empty ex0 ex1 ex2
    execute export false guide import in include inter lastpos let0 let1 let2
    m2l-str m2l-tree macro max min notin pred prefix restrict root sethat setminus
    sub tree true union universe var0 var1 var2 variant where ws1s ws2s
""".split())

_BINARY = {And: "&", Or: "|", Implies: "=>", Iff: "<=>"}
_QUANTIFIER = {ExistsFO: "ex1", ForallFO: "all1", ExistsSO: "ex2", ForallSO: "all2"}


def mona_name(name: str) -> str:
    return KEYWORD_PREFIX + name if name in MONA_KEYWORDS else name


def _text(f: MsoFormula, fresh: Fresh) -> str:
    match f:
        case Verum():
            return "true"
        case Falsum():
            return "false"
        case Member(X, x):
            return f"{mona_name(x)} in {mona_name(X)}"
        case Less(x, y):
            return f"{mona_name(x)} < {mona_name(y)}"
        case Eq(x, y):
            return f"{mona_name(x)} = {mona_name(y)}"
        case Macro():
            return _text(f.expand(fresh), fresh)
        case Not(arg):
            return f"~{_text(arg, fresh)}"
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return f"({_text(l, fresh)} {_BINARY[type(f)]} {_text(r, fresh)})"
        case ExistsFO(v, b) | ForallFO(v, b) | ExistsSO(v, b) | ForallSO(v, b):
            return f"({_QUANTIFIER[type(f)]} {mona_name(v)}: {_text(b, fresh)})"
    raise TypeError(f"not an MSO formula: {f!r}")


def emit_mona(formula: MsoFormula, alphabet: Iterable[str]) -> str:
    """`m2l-str;` header, `var2` per atom, `var1` for free positions, then the formula.

    Atom names that are MONA keywords get the prefix ``A_``.
    """
    atoms = sorted(set(alphabet))
    free_fo, free_so = free_variables(formula)
    undeclared = sorted(free_so - set(atoms))
    if undeclared:
        raise ValueError(f"free second-order variables are not atoms: {', '.join(undeclared)}")
    lines = ["m2l-str;"]
    if atoms:
        lines.append("var2 " + ", ".join(mona_name(a) for a in atoms) + ";")
    if free_fo:
        lines.append("var1 " + ", ".join(mona_name(v) for v in sorted(free_fo)) + ";")
    lines.append(_text(formula, helper_names()) + ";")
    return "\n".join(lines) + "\n"
