class McKayLabelsError(Exception):
    """Base class for every error raised by the library."""


class FieldError(McKayLabelsError, ValueError):
    """Invalid finite-field request: non-prime characteristic, size bound, degree mismatch, log of zero."""


class RootDatumError(McKayLabelsError, ValueError):
    """Invalid (type, rank) pair or unsupported diagram automorphism."""


class ExcludedConfiguration(McKayLabelsError):
    """The (type, q, w) triple is a row of the exclusion table; no labelling exists there."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class UnsupportedConfiguration(McKayLabelsError):
    """The request lies outside what the oracles model (twisted B-level, bad prime, scale)."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
