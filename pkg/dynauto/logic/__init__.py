from .dialect import Dialect
from .formula import (
    FALSE, RESERVED_ATOM, STEP, TRUE,
    Always, And, Box, Choice, Diamond, DynFormula, Eventually, Falsity, Final,
    Implies, Neg, Next, Or, PathExpr, Prop, PropPath, Release, Seq, Star, Step,
    Test, Truth, Until, WeakNext,
    atoms, closure, core, desugar, desugar_path, guard_stars, is_core,
    is_test_only, nnf, nnf_path, positive_closure, size,
)
from .parser import parse, parse_path, tokenize
from .printer import to_text

__all__ = [
    "Dialect", "FALSE", "RESERVED_ATOM", "STEP", "TRUE",
    "Always", "And", "Box", "Choice", "Diamond", "DynFormula", "Eventually",
    "Falsity", "Final", "Implies", "Neg", "Next", "Or", "PathExpr", "Prop",
    "PropPath", "Release", "Seq", "Star", "Step", "Test", "Truth", "Until",
    "WeakNext",
    "atoms", "closure", "core", "desugar", "desugar_path", "guard_stars",
    "is_core", "is_test_only", "nnf", "nnf_path", "parse", "parse_path",
    "positive_closure", "size", "to_text", "tokenize",
]
