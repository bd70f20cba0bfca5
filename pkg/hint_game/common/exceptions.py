"""Custom exceptions for the hint game simulator."""


class HintGameError(Exception):
    """Base class for all hint_game exceptions."""
    pass


class DomainError(HintGameError, ValueError):
    """Raised when a probability, hint, rate, bit or state is out of its domain."""
    pass


class ConfigurationError(HintGameError):
    """Exception raised when there is an error with configuration."""
    pass


class OutputError(HintGameError):
    """Exception raised when records cannot be emitted to their destination."""

    def __init__(self, path, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"Cannot write output to {self.path}: {reason}")


class UsageError(HintGameError):
    """Exception raised for invalid command-line usage."""
    pass


class VerificationError(HintGameError):
    """Exception raised when the self-consistency suite finds a disagreement."""
    pass
