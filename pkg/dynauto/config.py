from dataclasses import dataclass, fields, replace
import os

try:
    import yaml
except ImportError:
    yaml = None


@dataclass(frozen=True)
class DynConfig:
    # Trace enumeration
    MAX_TRACE_LEN: int = 4            # default bound for xcheck enumeration
    ENUM_MAX_ALPHABET: int = 16       # guard against 2^|P| blow-up

    # Automata construction
    DFA_STATE_CAP: int = 10**6        # determinization bound
    EXPLICIT_LETTER_CAP: int = 10     # largest |P| for explicit-letter mode

    # MSO evaluation
    MSO_MAX_TRACE_LEN: int = 6        # longest trace handed to the evaluator
    MSO_MAX_SO_VARS: int = 12         # open second-order vars, exhaustive strategy
    MSO_NODE_BUDGET: int = 5_000_000  # search nodes, pruned strategy
    MSO_STRATEGY: str = "pruned"      # pruned | exhaustive

    # Randomized suites
    RANDOM_SEED: int = 0
    RANDOM_TRACES: int = 1000
    RANDOM_MAX_LEN: int = 8

    # Surface
    DEFAULT_DIALECT: str = "canonical"
    COLOR: bool = True                # NO_COLOR in the environment overrides


# Safe load of dynauto.yaml, ignoring unknown keys
def load_config(path: str = "dynauto.yaml") -> DynConfig:
    """Load configuration from YAML, filter to DynConfig fields."""
    cfg = DynConfig()
    if os.path.exists(path):
        if yaml is None:
            return cfg  # pyyaml not installed, use defaults
        with open(path, encoding="utf-8") as fh:
            raw = yaml.safe_load(fh) or {}
        valid = {f.name for f in fields(DynConfig)}
        filtered = {k: v for k, v in raw.items() if k in valid}
        cfg = replace(cfg, **filtered)
    if os.environ.get("NO_COLOR"):
        cfg = replace(cfg, COLOR=False)
    return cfg


# Global config instance
CONFIG = load_config()
