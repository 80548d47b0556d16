from __future__ import annotations


class DomainError(ValueError):
    """Raised when an input violates an operation's precondition.

    ``code`` is a short machine-readable tag (``"not_2_nilpotent"``,
    ``"not_generic"``, ...) that the CLI forwards in its JSON error object.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message

    def to_json(self) -> dict:
        return {"error": self.code, "message": self.message}


class InternalError(RuntimeError):
    """A consistency check that theory says cannot fail did fail."""
