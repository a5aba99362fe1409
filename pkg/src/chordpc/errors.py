"""Exception types raised across the package."""


class ChordEvalError(Exception):
    """Base class for all errors raised by chordpc."""


class ChordSyntaxError(ChordEvalError, ValueError):
    """A chord label or Roman numeral could not be parsed.

    Attributes
    ----------
    text : str
        The offending label text.
    offset : int
        Byte offset (UTF-8) into `text` where parsing failed.
    line : int or None
        Line number in the source file, when known.
    """

    def __init__(self, message, text, offset, line=None):
        self.message = message
        self.text = text
        self.offset = offset
        self.line = line
        super().__init__(str(self))

    def __str__(self):
        where = f"offset {self.offset}"
        if self.line is not None:
            where = f"line {self.line}, {where}"
        return f"{self.message} in {self.text!r} ({where})"

    def with_line(self, line):
        return ChordSyntaxError(self.message, self.text, self.offset, line)


class UnsupportedKey(ChordEvalError, ValueError):
    """Key mode is not supported by the requested operation."""


class UnknownQuality(ChordEvalError, ValueError):
    """Chord shorthand has no interval template."""


class UnsupportedLabel(ChordEvalError, ValueError):
    """Label kind cannot be converted (e.g. the unknown marker ``X``)."""


class FormatError(ChordEvalError, ValueError):
    """Malformed line in an annotation file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OrderError(FormatError):
    """Segments are unsorted, overlapping or have non-positive duration."""
