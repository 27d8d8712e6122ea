"""Exception hierarchy shared by all pipeline stages."""


class FlowgraphsError(Exception):
    """Base class for every error raised by this package."""


class PositionedError(FlowgraphsError):
    def __init__(self, message, pos=None):
        self.message = message
        self.pos = pos
        if pos is not None:
            message = f"{pos[0]}:{pos[1]}: {message}"
        super().__init__(message)


class SyntaxError(PositionedError):  # noqa: A001 - deliberate domain name
    """Input outside the supported Java subset."""

    def __init__(self, message, pos=None, expected=()):
        self.expected = tuple(sorted(set(expected)))
        if self.expected:
            message = f"{message} (expected one of: {', '.join(self.expected)})"
        super().__init__(message, pos)


class SemanticError(PositionedError):
    """Well-formed syntax that violates a static rule of the subset."""


class DuplicateDeclaration(SemanticError):
    pass


class UnboundVariable(SemanticError):
    def __init__(self, name, pos=None):
        self.name = name
        super().__init__(f"unbound variable {name!r}", pos)


class SchemaError(FlowgraphsError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
