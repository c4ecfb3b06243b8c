from .afw import Afw, Conjunct, accepts, build_afw, delta_at, delta_explicit
from .dfa import Dfa, dfa_accepts, letters, minimize_dfa, nfa_to_dfa, random_dfa
from .dot import afw_to_dot, dfa_from_dot, dfa_to_dot, nfa_to_dot
from .facts import afw_from_facts, afw_to_facts, dfa_from_facts, dfa_to_facts
from .nfa import Nfa, afw_to_nfa, nfa_accepts

__all__ = [
    "Afw", "Conjunct", "Dfa", "Nfa",
    "accepts", "afw_from_facts", "afw_to_dot", "afw_to_facts", "afw_to_nfa",
    "build_afw", "delta_at", "delta_explicit", "dfa_accepts", "dfa_from_dot",
    "dfa_from_facts", "dfa_to_dot", "dfa_to_facts", "letters", "minimize_dfa",
    "nfa_accepts", "nfa_to_dfa", "nfa_to_dot", "random_dfa",
]
