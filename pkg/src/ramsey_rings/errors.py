"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class RamseyRingsError(Exception):
    """Base class for every error raised deliberately by this package."""


class ParseError(RamseyRingsError, ValueError):
    """Malformed element, sequence or set-description text."""


class CapExceeded(RamseyRingsError):
    """An enumeration would exceed its configured size cap."""


class OrderingViolation(RamseyRingsError, ValueError):
    """Blocks are not strictly increasing (max H_n < min H_{n+1} fails)."""


class SourceTooShort(RamseyRingsError, IndexError):
    """A sequence was evaluated past its declared bound."""


class InsufficientBlocks(SourceTooShort):
    """Not enough blocks remain to complete a requested number of rounds."""


class TooFewTerms(RamseyRingsError, ValueError):
    """A pairwise configuration needs at least two terms."""


class SearchExhausted(RamseyRingsError):
    """A bounded search finished without a witness.

    This never proves non-existence; ``stats`` carries whatever the search
    wants to report (deepest level reached, nodes visited, ...).
    """

    def __init__(self, message: str, **stats: object) -> None:
        super().__init__(message)
        self.stats = stats


class RepeatedTerms(RamseyRingsError, ValueError):
    """A sequence that must be one-to-one repeats a value."""


class OutOfDomain(RamseyRingsError, ValueError):
    """A value falls outside the domain of a finite coloring."""
