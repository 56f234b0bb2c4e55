"""Exception taxonomy shared by all modules."""
from __future__ import annotations


class CdspError(Exception):
    """Base class for all library errors."""


class ConstructionError(CdspError):
    """A value could not be built; carries the offending grid point."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class DimensionError(CdspError):
    """An order or window does not fit the grid it is applied to."""


class ParameterError(CdspError):
    """Parameters degenerate the family an operation is defined for."""


class PreconditionError(CdspError):
    """A mathematical hypothesis of an operation fails; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DegenerateDensityError(CdspError):
    """The two candidate exponents of a line density coincide."""


class WrongCaseError(CdspError):
    """The parameters belong to a different case of the analysis."""


class NumericalBudgetError(CdspError):
    """Quadrature did not converge within its evaluation budget."""

    def __init__(self, message: str, best_residual: float, evaluations: int):
        super().__init__(message)
        self.best_residual = best_residual
        self.evaluations = evaluations


class SchemaError(CdspError):
    """An input document does not match the expected JSON schema."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer}: {message}" if pointer else message)
        self.pointer = pointer
