from __future__ import annotations


class OmitRootsError(Exception):
    """Base class for every error raised by this package."""


class GammaPoleError(OmitRootsError, ValueError):
    pass


class BranchPointError(OmitRootsError, ValueError):
    pass


class ConvergenceError(OmitRootsError, ArithmeticError):
    pass


class PunctureError(OmitRootsError, ValueError):
    pass


class DomainError(OmitRootsError, ValueError):
    pass


class PathError(OmitRootsError, ValueError):
    """An integration path runs into a singular point or across a branch cut."""


class StepSizeError(OmitRootsError, ArithmeticError):
    pass


class OptimizationError(OmitRootsError, RuntimeError):
    pass
