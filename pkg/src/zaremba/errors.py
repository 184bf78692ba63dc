"""Exception types shared across the package."""


class ContinuantOverflowError(OverflowError):
    """A continuant recurrence left the signed 64-bit range."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"64-bit overflow at index {index}")


class CapacityError(MemoryError):
    """Requested bitset is larger than the configured capacity."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap."""


class BracketError(ValueError):
    """Root-finding bracket does not straddle the target."""


class BitsetFormatError(ValueError):
    """Malformed bitset file."""
