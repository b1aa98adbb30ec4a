"""Shared exception types; the CLI maps these to distinct exit codes."""


class GroundMismatch(ValueError):
    """Operands live on different ground sets (or on overlapping ones where
    disjointness is required)."""


class CapExceeded(ValueError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: ground size {size} exceeds enumeration cap {cap}")


class DimensionHypothesis(ValueError):
    """The closed antipode formula requires a full-dimensional polytope
    (dimension one less than the ground size); use the Takeuchi expansion."""


class InputError(ValueError):
    """Malformed input document."""
