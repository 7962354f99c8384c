"""Exception types shared across the package."""


class WrongResidueClass(ValueError):
    """The prime is not in the residue class the construction requires."""


class NotIntegral(ValueError):
    """A divisibility hypothesis fails, so a matrix entry would not be an integer."""


class ReductionFailure(RuntimeError):
    """An internal invariant broke during fundamental-domain reduction."""
