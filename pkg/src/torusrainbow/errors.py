"""Exception types shared across the package."""

from __future__ import annotations


class TorusRainbowError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDimsError(TorusRainbowError):
    """A torus shape needs at least one cycle length."""


class DimTooSmallError(TorusRainbowError):
    """A cycle length below the supported minimum."""

    def __init__(self, axis: int, value: int, minimum: int = 2):
        self.axis = axis
        self.value = value
        self.minimum = minimum
        super().__init__(f"cycle length {value} on axis {axis} is below the minimum {minimum}")


class CoordOutOfRangeError(TorusRainbowError):
    """A vertex coordinate outside [0, n_k) for its axis."""


class SameVertexError(TorusRainbowError):
    """An operation that needs two distinct vertices got the same one twice."""


class NotAdjacentError(TorusRainbowError):
    """Two vertices that should span an edge are not adjacent."""


class ShapeMismatchError(TorusRainbowError):
    """Colorings combined over incompatible shapes."""


class PaletteTooLargeError(TorusRainbowError):
    """A palette that must embed into another one is too large to fit."""


class NotInjectiveError(TorusRainbowError):
    """A palette map that must be injective is not."""


class IncompleteColoringError(TorusRainbowError):
    """Some canonical edge has no assigned color."""


class ColorOutOfRangeError(TorusRainbowError):
    """An edge color outside [0, palette_size)."""


class BadParityError(TorusRainbowError):
    """A cycle length with the wrong parity for the requested table/construction."""


class ParityMismatchError(TorusRainbowError):
    """An even/odd pair argument with parities swapped or equal."""


class BudgetExceededError(TorusRainbowError):
    """The exact-search budget refuses this instance."""


class DocumentError(TorusRainbowError):
    """A coloring document that cannot be parsed or validated."""
