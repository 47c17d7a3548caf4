"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a formula's domain; always a caller bug, never data."""


class DegenerateQuadrilateralError(DomainError):
    """The Lambert quadrilateral degenerates: an inverse-tanh argument reached 1."""


class CampaignError(RuntimeError):
    """A feasible grid cell failed an embedding criterion; the certificate is invalid."""

    def __init__(self, message: str, cell=None, index=None):
        super().__init__(message)
        self.cell = cell
        self.index = index
