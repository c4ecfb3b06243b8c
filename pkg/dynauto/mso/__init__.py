from .evaluate import STRATEGIES, Assignment, MsoEvaluator, atom_assignment, eval_mso
from .formula import (
    FALSUM, VERUM, And, Bound, Eq, ExistsFO, ExistsSO, Falsum, First, ForallFO, ForallSO, Iff,
    Implies, Last, Le, Less, Macro, Member, MsoFormula, NextIn, Not, Or, SetEq, Subset, Succ,
    VarGen, Verum, bound_variables, conjunction, expand_all, free_variables,
)
from .mona import KEYWORD_PREFIX, MONA_KEYWORDS, emit_mona, mona_name
from .translate import ENTRY_VAR, mso_enc, predicate_names, st_m, st_p

__all__ = [
    "STRATEGIES", "Assignment", "MsoEvaluator", "atom_assignment", "eval_mso",
    "FALSUM", "VERUM", "And", "Bound", "Eq", "ExistsFO", "ExistsSO", "Falsum", "First",
    "ForallFO", "ForallSO", "Iff", "Implies", "Last", "Le", "Less", "Macro", "Member",
    "MsoFormula", "NextIn", "Not", "Or", "SetEq", "Subset", "Succ", "VarGen", "Verum",
    "bound_variables", "conjunction", "expand_all", "free_variables",
    "KEYWORD_PREFIX", "MONA_KEYWORDS", "emit_mona", "mona_name",
    "ENTRY_VAR", "mso_enc", "predicate_names", "st_m", "st_p",
]
