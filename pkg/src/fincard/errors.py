"""Exception hierarchy shared by all modules."""


class FincardError(Exception):
    pass


class ArityError(FincardError, ValueError):
    pass


class ShapeError(FincardError, ValueError):
    pass


class BoundsError(FincardError, IndexError):
    pass


class ValidationError(FincardError, ValueError):
    pass


class PreconditionError(FincardError, ValueError):
    """A size precondition is violated; ``required`` names the minimum."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class NotInImageError(FincardError, ValueError):
    pass


class NotAnFImageError(NotInImageError):
    pass


class NotAPhiImageError(NotInImageError):
    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class ParameterError(FincardError, ValueError):
    pass


class SearchSpaceError(FincardError, RuntimeError):
    def __init__(self, message, attempted=None):
        super().__init__(message)
        self.attempted = attempted


class DomainError(FincardError, ValueError):
    pass


class StructuralError(FincardError, TypeError):
    pass


class NoPairError(FincardError, ValueError):
    pass


class ParseError(FincardError, ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
