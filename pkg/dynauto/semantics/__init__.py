from .direct import Evaluator, models, rel, sat

__all__ = ["Evaluator", "models", "rel", "sat"]
