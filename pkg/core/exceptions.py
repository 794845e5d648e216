from typing import Any, Optional


class DuoidalError(Exception):
    """Base class for every error raised by this package"""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InputError(DuoidalError):
    """Malformed or unreadable input; maps to CLI exit code 2"""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.location = location

    def __str__(self):
        base = super().__str__()
        return f"{self.location}: {base}" if self.location else base


class SpanError(DuoidalError):
    pass


class CategoryError(DuoidalError):
    pass


class ModuleAxiomError(DuoidalError):
    pass


class ConstructionInapplicable(DuoidalError):
    pass


class PreconditionError(DuoidalError):
    pass


class FieldError(DuoidalError):
    pass


class DimensionMismatch(DuoidalError):
    pass


class AlgebraError(DuoidalError):
    pass


class BimoduleError(DuoidalError):
    pass


class WellDefinednessError(DuoidalError):
    pass
