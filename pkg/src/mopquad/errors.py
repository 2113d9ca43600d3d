"""Exception hierarchy for mopquad.

Every failure mode of the pipeline gets a distinct class so that callers
(and the CLI exit-code mapping) can dispatch on type rather than parse
messages.
"""

from __future__ import annotations

__all__ = [
    "MopquadError",
    "UnknownClassError",
    "ParamCountError",
    "ParamDomainError",
    "BadNError",
    "CoefficientOverflowError",
    "NonPositivePivotError",
    "ZeroPivotError",
    "NegativeProductError",
    "NoConvergenceError",
    "RuleNotConvergedError",
    "PoleError",
    "RangeOverflowError",
    "OutOfSupportError",
    "AccuracyLossError",
    "UnsupportedMomentError",
]


class MopquadError(Exception):
    """Base class for all mopquad errors."""


class UnknownClassError(MopquadError):
    """Family identifier outside 1..9."""


class ParamCountError(MopquadError):
    """Wrong number of parameters for the requested family."""


class ParamDomainError(MopquadError):
    """Parameter vector violates the family's admissible domain."""


class BadNError(MopquadError):
    """Requested number of nodes is too small."""


class CoefficientOverflowError(MopquadError):
    """A recurrence coefficient evaluated to a non-finite value."""


class NonPositivePivotError(MopquadError):
    """Balancing hit a non-positive off-diagonal product a_i * c_{i+1}."""


class ZeroPivotError(MopquadError):
    """Elementary tridiagonal reduction hit a vanishing pivot."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"zero pivot at index {index}")


class NegativeProductError(MopquadError):
    """Symmetrization found sup[i]*sub[i] <= 0."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"non-positive off-diagonal product at index {index}")


class NoConvergenceError(MopquadError):
    """QL iteration exceeded its sweep budget for one eigenvalue."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"eigenvalue {index} did not converge in 30 QL iterations")


class RuleNotConvergedError(MopquadError):
    """A rule with ier != 0 was asked to evaluate an integral."""


class PoleError(MopquadError):
    """Gamma evaluated at a non-positive integer."""


class RangeOverflowError(MopquadError):
    """Function value exceeds the double-precision range."""


class OutOfSupportError(MopquadError):
    """Weight function evaluated outside its support interval."""


class AccuracyLossError(MopquadError):
    """A series or quadrature failed its self-estimated accuracy target."""


class UnsupportedMomentError(MopquadError):
    """No closed-form moment is available for this family."""
