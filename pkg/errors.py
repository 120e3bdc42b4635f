"""Exception hierarchy shared by every package."""


class ZeroFreeError(Exception):
    """Base class for all library errors."""


class DomainError(ZeroFreeError, ValueError):
    """A precondition on the arguments does not hold."""


class PoleError(DomainError):
    """Evaluation requested at (or numerically at) a pole."""


class SizeLimitError(DomainError):
    """Matrix size beyond the supported range."""


class DegenerateError(DomainError):
    """Leading coefficient vanishes or a system is singular."""


class UnsupportedModelError(DomainError):
    """Unknown model name or missing Laurent data."""


class ConvergenceError(ZeroFreeError, RuntimeError):
    """Adaptive procedure ran out of budget above tolerance."""


class IllConditionedError(ConvergenceError):
    """Gram matrix condition estimate beyond the configured limit."""


class HalfPlaneResult(ZeroFreeError):
    """R >= 1: the pseudo-disc is the half-plane Re s > shift + sigma0."""

    def __init__(self, boundary):
        super().__init__(f"pseudo-disc degenerates to the half-plane Re s > {boundary}")
        self.boundary = boundary
