"""Exception hierarchy shared across the prover."""


class TermiteError(Exception):
    """Base class for all user-facing errors."""


class ParseError(TermiteError):
    """Syntax error in a problem file or a template, with 1-based position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class ValidationError(TermiteError):
    """Template or certificate inconsistent with the rewrite system."""


class ConfigError(TermiteError):
    """Invalid search configuration or strategy."""
