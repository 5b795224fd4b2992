"""Exception hierarchy shared by every layer of the package."""


class MaxPlusError(ValueError):
    """Base class for all errors raised by :mod:`maxplus`."""


class InversionOfZero(MaxPlusError):
    pass


class ZeroToNonpositivePower(MaxPlusError):
    pass


class DimensionMismatch(MaxPlusError):
    pass


class NotSquare(DimensionMismatch):
    pass


class IrregularInput(MaxPlusError):
    """A vector has a Zero entry, or a matrix has an all-Zero row."""


class NoUnitDiagonalColumn(MaxPlusError):
    pass


class ReducibleMatrix(MaxPlusError):
    """Raised for reducible input; ``components`` lists the strongly connected classes."""

    def __init__(self, components):
        self.components = [list(c) for c in components]
        parts = ", ".join("{" + ", ".join(str(i + 1) for i in c) + "}" for c in self.components)
        super().__init__(f"matrix is reducible; strongly connected components: {parts}")


class InfeasibleCycles(MaxPlusError):
    """The precedence graph has a cycle of positive total lag."""


class TooLarge(MaxPlusError):
    pass


class ParseError(MaxPlusError):
    pass


class ValidationError(MaxPlusError):
    pass
