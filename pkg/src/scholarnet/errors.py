"""Exception types shared across the package."""


class ScholarnetError(Exception):
    """Base class for every error raised by this package."""


class CorpusError(ScholarnetError):
    """Fatal problem with an input corpus; nothing usable was produced."""


class EmptyCorpus(CorpusError):
    """The input yielded no valid publication records."""


class DuplicateId(CorpusError):
    """Two publication records share the same id."""


class BibtexParseError(CorpusError):
    """Unrecoverable BibTeX syntax error, e.g. an unbalanced brace."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnknownAuthor(ScholarnetError):
    """An author key that does not occur in the corpus."""


class UnknownPublication(ScholarnetError):
    """A publication id that does not occur in the corpus."""


class SameAuthor(ScholarnetError):
    """Two distinct authors were required but the same key was given twice."""
