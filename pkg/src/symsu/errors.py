"""Exception types shared across the package."""


class SymsuError(Exception):
    """Base class for all library-specific errors."""


class DimensionError(SymsuError, ValueError):
    """Operands act on different qubit counts or matrix dimensions."""


class CapacityError(SymsuError, ValueError):
    """Requested size exceeds a configured dense-computation cap."""


class GroupClosureError(SymsuError, ValueError):
    """Generator closure did not terminate within the element cap."""


class UnsupportedSymmetryError(SymsuError, ValueError):
    """Operation requires qubit-permutation symmetries only."""


class NotUnitaryError(SymsuError, ValueError):
    """Matrix fails the unitarity residual check."""


class ProductFormulaError(SymsuError, ValueError):
    """Sum exponential cannot be compiled as a product of term exponentials."""


class NumericError(SymsuError, RuntimeError):
    """A numerical routine failed to reach its accuracy target."""
