"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a precondition (variable mismatch, standing assumption, ...)."""


class ParseError(ValidationError):
    """Operator expression could not be lexed, parsed or elaborated."""

    def __init__(self, message, offset=None, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = message
        if offset is not None:
            detail = f"{message} at byte {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
