"""Exception types shared across the toolkit."""

from __future__ import annotations


class DfmcError(Exception):
    """Base class for all toolkit errors."""


class UnknownVocabularyError(DfmcError, LookupError):
    """Raised when a vocabulary id does not exist."""

    def __init__(self, vocabulary_id: str):
        super().__init__(f"unknown vocabulary: {vocabulary_id!r}")
        self.vocabulary_id = vocabulary_id


class EmptyInputError(DfmcError, ValueError):
    """Raised when free text is empty or whitespace-only after trimming."""


class RejectedInvalidError(DfmcError):
    """Raised when a card with error-severity findings is offered for storage."""

    def __init__(self, diagnostics):
        codes = ", ".join(d.code for d in diagnostics)
        super().__init__(f"card rejected, error diagnostics present: {codes}")
        self.diagnostics = tuple(diagnostics)


class ConflictError(DfmcError):
    """Raised when a stored id already exists and overwrite was not requested."""

    def __init__(self, card_id: str):
        super().__init__(f"card {card_id!r} already stored; pass overwrite to replace it")
        self.card_id = card_id


class StorageError(DfmcError):
    """Raised on filesystem failures in the card store."""
