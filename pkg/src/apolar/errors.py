"""Exception hierarchy shared by the whole package."""


class ApolarError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(ApolarError):
    """Two values from incompatible ambient contexts were mixed."""


class DomainError(ApolarError):
    """An operation was applied outside its mathematical domain."""


class NotArtinianError(DomainError):
    """A degree cutoff was exceeded without the quotient becoming finite."""


class ParseError(ApolarError):
    """Malformed input text; carries the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position
