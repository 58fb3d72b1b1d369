"""Exception types raised across the package."""


class TractlabError(Exception):
    """Base class for all package errors."""


class InvalidInputError(TractlabError, ValueError):
    pass


class InvalidConfigError(TractlabError, ValueError):
    pass


class InvalidParamsError(TractlabError, ValueError):
    pass


class FormantExtractionError(TractlabError, RuntimeError):
    """Fewer resonance peaks than requested were found.

    The number of peaks actually located is kept in ``found``.
    """

    def __init__(self, requested, found):
        super().__init__(f"requested {requested} formants, found {found} peaks")
        self.requested = requested
        self.found = found


class DegenerateHullError(TractlabError, ValueError):
    pass


class DatasetParseError(TractlabError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
