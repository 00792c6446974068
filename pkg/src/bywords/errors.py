"""Exception and warning types shared across the package."""


class BywordsError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(BywordsError):
    """A rules file or a CleanupRules value is invalid."""


class DictionaryError(BywordsError):
    """A category dictionary file is malformed."""


class TableFormatError(BywordsError):
    """A delimited input file (matrix or external table) cannot be parsed."""


class JoinMismatchError(BywordsError):
    """Record and table row counts disagree, so no join output is written."""


class BywordsWarning(UserWarning):
    """Diagnostic warning for degenerate but processable input."""
