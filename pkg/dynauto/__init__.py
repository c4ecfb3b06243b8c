"""dynauto: LDLf formulas on finite traces, compiled to alternating and
deterministic automata, checked by several independent engines, and exported
as ASP facts, DOT and MONA input."""

__version__ = "0.1.0"
