"""Exception types shared across the package.

Three failure families are kept apart so callers (and the CLI exit-code
mapping) can tell bad input from blown resource caps:

* ParameterError  -- arguments violate a documented precondition
* CapacityError   -- the request is well-formed but exceeds an enumeration
                     or search cap
* FormatError     -- a file or literal could not be parsed
"""


class ParameterError(ValueError):
    """Arguments violate a documented precondition."""


class CapacityError(RuntimeError):
    """A size or node cap would be exceeded; the request is refused."""


class FormatError(ValueError):
    """A serialized word, code, design, or database failed to parse."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
