from typing import Optional, Sequence


class ToolkitError(Exception):
    """Base class for every failure raised by the toolkit."""


class DomainError(ToolkitError, ValueError):
    """A parameter lies outside the domain of the operation.

    The message names the violated inequality or hypothesis.
    """


class WrongRegimeError(DomainError):
    """The bound was asked for in the other s-regime."""

    def __init__(self, message: str, use_instead: str):
        super().__init__(f"{message} (use {use_instead})")
        self.use_instead = use_instead


class ConvergenceError(ToolkitError):
    """Quadrature did not reach its tolerance within the subdivision limit."""

    def __init__(self, message: str, best_estimate: float, error_estimate: float):
        super().__init__(f"{message}: best estimate {best_estimate!r} +/- {error_estimate!r}")
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class ResourceError(ToolkitError):
    """The requested discretization exceeds the configured grid cap."""


class SingularityError(ToolkitError):
    """A matrix that has to be inverted is numerically singular."""


class PoleError(DomainError):
    """The point sits on a pole of the map."""


class NormalizationError(ToolkitError):
    """A holomorphic sampler is not normalized by h(0) = 1."""


class HypothesisError(ToolkitError):
    """The operator pair violates the hypotheses of the comparison theorem."""


class NoOmegaError(ToolkitError):
    """No admissible omega was found below the doubling cap."""

    def __init__(self, message: str, final_norm: float, final_omega: float):
        super().__init__(f"{message}: norm {final_norm:.6g} at omega={final_omega:g}")
        self.final_norm = final_norm
        self.final_omega = final_omega


class PartialResultError(ToolkitError):
    """A decomposition finished but some eigenvalues are not certified."""

    def __init__(self, message: str, partial=None, uncertified: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.partial = partial
        self.uncertified = list(uncertified or [])
