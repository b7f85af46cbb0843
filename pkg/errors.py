from typing import Any


class QuandleLabError(Exception):
    """Base error carrying a process exit code and a detail message."""

    exit_code = 1

    def __init__(self, detail: str, witness: Any = None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness

    def to_dict(self) -> dict:
        payload = {"error": type(self).__name__, "detail": self.detail}
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


class DomainError(QuandleLabError):
    """Violated mathematical precondition or malformed domain input."""

    exit_code = 1


class UsageError(QuandleLabError):
    exit_code = 2


class ResourceGuardError(QuandleLabError):
    """A configured size guard would be exceeded."""

    exit_code = 3
