"""Exception taxonomy shared across the pipeline.

Every error raised on purpose derives from PipelineError so callers (and the
CLI exit-code mapping) can distinguish our failures from genuine bugs.
"""

from __future__ import annotations


class PipelineError(Exception):
    """Base class for all pipeline errors."""


# --- rule-set model -------------------------------------------------------

class SchemaError(PipelineError):
    """Input JSON is missing required fields or has the wrong shape."""


class ConcatMismatch(SchemaError):
    """A statement's text does not equal the concatenation of its containers."""

    def __init__(self, statement_id: int, expected: str, actual: str):
        super().__init__(
            f"statement {statement_id}: text differs from container concatenation"
        )
        self.statement_id = statement_id
        self.expected = expected
        self.actual = actual


class UnsupportedLanguage(PipelineError):
    """Language code is outside the configured set."""


class EmptyDocument(PipelineError):
    """Operation requires at least one statement."""


# --- rendering ------------------------------------------------------------

class UnboundField(PipelineError):
    """A variable unit's binding does not resolve in the data record."""


class AgreementTargetNotNumeric(PipelineError):
    """A lexeme is configured to agree with a unit that is not an integer."""


# --- provider client ------------------------------------------------------

class TransportError(PipelineError):
    """Provider could not be reached or returned a non-auth failure."""


class AuthError(PipelineError):
    """API key missing or rejected."""


class MalformedOutputAfterRetries(PipelineError):
    """Provider kept returning unparseable output after all retries."""

    def __init__(self, message: str, attempts: int, last_raw: str):
        super().__init__(message)
        self.attempts = attempts
        self.last_raw = last_raw


class UnparseableVerdict(PipelineError):
    """Reply could not be normalized to a true/false token."""


class UnparseableScore(PipelineError):
    """Reply does not contain exactly one integer."""


class ScoreOutOfRange(PipelineError):
    """Reply contains an integer outside [0, 100]."""


# --- QA / evaluation ------------------------------------------------------

class OffsetInconsistency(PipelineError):
    """Container offsets do not line up with the document plain text."""


class IndexMismatch(PipelineError):
    """Flag indices and sentence labels refer to different span lists."""


# --- corpus ---------------------------------------------------------------

class NothingCorruptible(PipelineError):
    """No container in the document is eligible for the requested error kind."""


# --- patching -------------------------------------------------------------

class UnknownDecisionTarget(PipelineError):
    """A review decision references a suggestion that does not exist."""
