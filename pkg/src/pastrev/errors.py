"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside the set where it is defined."""


class ParseError(ValueError):
    """Malformed object-language text.

    ``offset`` is the byte offset (UTF-8) where the problem was detected.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class VerificationError(RuntimeError):
    """A structural guarantee failed to materialize; indicates a bug."""
