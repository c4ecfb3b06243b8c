"""Reference evaluator over total traces.

Formulas evaluate to boolean vectors over the positions [0, λ); path
expressions to λ×λ boolean relation matrices. Star is the least fixpoint of
composition starting from the identity.
"""

from __future__ import annotations

import numpy as np

from ..errors import TraceError
from ..logic.formula import (
    Box, Choice, Diamond, DynFormula, Falsity, Neg, PathExpr, Prop, Seq, Star,
    Step, Test, Truth, core, desugar_path,
)
from ..trace.model import Trace


class Evaluator:
    """Evaluation context for one trace; caches are private to the instance."""

    def __init__(self, trace: Trace, memo: bool = True):
        self.trace = trace
        self.length = len(trace)
        self.memo = memo
        self._sat: dict[DynFormula, np.ndarray] = {}
        self._rel: dict[PathExpr, np.ndarray] = {}

    # formulas
    def sat_vector(self, formula: DynFormula) -> np.ndarray:
        if self.memo and formula in self._sat:
            return self._sat[formula]
        result = self._sat_vector(formula)
        if self.memo:
            self._sat[formula] = result
        return result

    def _sat_vector(self, formula: DynFormula) -> np.ndarray:
        n = self.length
        match formula:
            case Truth():
                return np.ones(n, dtype=bool)
            case Falsity():
                return np.zeros(n, dtype=bool)
            case Prop(name):
                return np.array([name in state for state in self.trace.states], dtype=bool)
            case Neg(arg):
                return ~self.sat_vector(arg)
            case Diamond(path, body):
                return np.any(self.rel_matrix(path) & self.sat_vector(body)[None, :], axis=1)
            case Box(path, body):
                return np.all(~self.rel_matrix(path) | self.sat_vector(body)[None, :], axis=1)
        return self.sat_vector(core(formula))

    # paths
    def rel_matrix(self, path: PathExpr) -> np.ndarray:
        if self.memo and path in self._rel:
            return self._rel[path]
        result = self._rel_matrix(path)
        if self.memo:
            self._rel[path] = result
        return result

    def _rel_matrix(self, path: PathExpr) -> np.ndarray:
        n = self.length
        match path:
            case Step():
                return np.eye(n, k=1, dtype=bool)
            case Test(formula):
                return np.diag(self.sat_vector(formula))
            case Choice(left, right):
                return self.rel_matrix(left) | self.rel_matrix(right)
            case Seq(left, right):
                return _compose(self.rel_matrix(left), self.rel_matrix(right))
            case Star(body):
                step = self.rel_matrix(body)
                closure = np.eye(n, dtype=bool)
                while True:
                    grown = closure | _compose(closure, step)
                    if np.array_equal(grown, closure):
                        return closure
                    closure = grown
        return self.rel_matrix(desugar_path(path))

    def sat(self, k: int, formula: DynFormula) -> bool:
        if not 0 <= k < self.length:
            raise TraceError(f"time point {k} outside [0, {self.length})")
        return bool(self.sat_vector(formula)[k])

    def rel(self, path: PathExpr) -> frozenset[tuple[int, int]]:
        rows, cols = np.nonzero(self.rel_matrix(path))
        return frozenset(zip(rows.tolist(), cols.tolist()))


def _compose(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return (left.astype(np.int64) @ right.astype(np.int64)) > 0


def rel(path: PathExpr, trace: Trace, memo: bool = True) -> frozenset[tuple[int, int]]:
    """Accessibility relation of `path` on `trace` as a set of (k, i) pairs."""
    return Evaluator(trace, memo).rel(path)


def sat(trace: Trace, k: int, formula: DynFormula, memo: bool = True) -> bool:
    return Evaluator(trace, memo).sat(k, formula)


def models(trace: Trace, formula: DynFormula) -> bool:
    return sat(trace, 0, formula)
