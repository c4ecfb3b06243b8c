from .builtins import AUTOMATON_ENGINES, ENGINE_NAMES, default_registry, get_builtin_engines
from .registry import Checker, Engine, EngineRegistry

__all__ = [
    "AUTOMATON_ENGINES", "ENGINE_NAMES", "Checker", "Engine", "EngineRegistry",
    "default_registry", "get_builtin_engines",
]
