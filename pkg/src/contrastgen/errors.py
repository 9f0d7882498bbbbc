"""Exception types shared across the package."""

from __future__ import annotations


class NotJsonError(ValueError):
    """Raised when an input stream cannot be parsed as the expected JSON shape."""


class InconsistentPluralError(ValueError):
    def __init__(self, term: str):
        super().__init__(f"term {term!r} maps to more than one plural/singular form")
        self.term = term


class ArityMismatchError(ValueError):
    """Raised when template slots do not satisfy the template's arity."""


class GroundingFailedError(Exception):
    """A slot required to answer the question grounds to nothing in the scene graph."""

    def __init__(self, slot: str):
        super().__init__(f"slot {slot!r} does not ground in the scene graph")
        self.slot = slot


class MissingPredictionError(Exception):
    def __init__(self, keys):
        self.keys = list(keys)
        preview = ", ".join(self.keys[:5])
        extra = "" if len(self.keys) <= 5 else f" (+{len(self.keys) - 5} more)"
        super().__init__(f"predictions missing for keys: {preview}{extra}")


class DuplicateKeyError(ValueError):
    def __init__(self, key: str):
        super().__init__(f"duplicate key {key!r}")
        self.key = key
