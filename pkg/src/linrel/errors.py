"""Exception types shared across the package."""


class LinRelError(Exception):
    """Base class for all errors raised by linrel."""


class DimensionError(LinRelError, ValueError):
    """Shapes or field tags of the operands do not fit together."""


class DomainError(LinRelError, ValueError):
    """A point was required to lie in D(T) but does not."""


class PreconditionError(LinRelError, ValueError):
    """An operation's hypothesis (containment, Hermitian, b < 1, ...) fails."""


class GeneratorError(LinRelError, ValueError):
    """The requested random-relation constraints cannot be met."""
