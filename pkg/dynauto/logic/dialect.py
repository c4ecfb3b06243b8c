"""Surface syntaxes for formulas."""

from enum import Enum


class Dialect(Enum):
    CANONICAL = "canonical"   # tt, ff, <ρ>φ, [ρ]φ, U, R, ...
    THEORY = "theory"         # &true, &t, .>?, .>*, ;; ...

    @classmethod
    def parse(cls, name: "str | Dialect") -> "Dialect":
        if isinstance(name, Dialect):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown dialect: {name!r} (use canonical or theory)") from None
