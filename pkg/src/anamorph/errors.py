"""Exception hierarchy.

DataError and its subclasses correspond to problems in user-supplied data
(CLI exit code 2); the remaining AnamorphError subclasses signal misuse of
the library API.
"""


class AnamorphError(Exception):
    """Base class for all errors raised by this package."""


class DataError(AnamorphError):
    """Bad input data (malformed file, unmappable symbol, empty join...)."""


class SchemaError(DataError):
    """A row does not match the configured column schema."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyDatasetError(DataError):
    """A dataset file contains no usable rows."""


class TokenizationError(DataError):
    """A raw form contains a symbol the inventory cannot map."""

    def __init__(self, message, char=None, offset=None, line=None):
        parts = [message]
        if char is not None:
            parts.append(f"character {char!r}")
        if offset is not None:
            parts.append(f"offset {offset}")
        if line is not None:
            parts.append(f"line {line}")
        super().__init__(", ".join(parts))
        self.char = char
        self.offset = offset
        self.line = line


class ParticleError(DataError):
    """A form consists only of particle separators."""


class InventoryError(DataError):
    """A raw form contains a reserved or control character."""


class RatingError(DataError):
    """A judgment column does not parse as a decimal number."""


class ArityError(AnamorphError):
    """Binding count does not match a pattern's variable count."""


class GuardError(AnamorphError):
    """A combinatorial guard (e.g. shared-position bound) was exceeded."""


class CorrelationError(DataError):
    """Correlation undefined (zero variance or too few points)."""


class EmptyJoinError(DataError):
    """Score/judgment join produced no common rows."""
