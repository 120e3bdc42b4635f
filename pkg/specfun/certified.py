"""Numbers with an absolute error bound, and quadrature settings.

Arithmetic propagates errors to first order in the worst case:
sums add errors, products use |a|*err_b + |b|*err_a + err_a*err_b.
"""
import cmath
import math
from dataclasses import dataclass

from config import (
    PSI_NORM_CUTOFF, QUAD_ABS_TOL, QUAD_MAX_SUBDIVISIONS, QUAD_REL_TOL,
    TAIL_STRATEGIES,
)
from errors import DomainError


@dataclass(frozen=True)
class CertifiedValue:
    value: complex
    err: float = 0.0

    def __post_init__(self):
        err = float(self.err)
        if not math.isfinite(err) or err < 0:
            raise DomainError(f"error bound must be finite and >= 0, got {self.err!r}")
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "err", err)

    @staticmethod
    def lift(x):
        if isinstance(x, CertifiedValue):
            return x
        return CertifiedValue(complex(x), 0.0)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    @property
    def upper(self):
        """Largest value of |x| consistent with the bound."""
        return abs(self.value) + self.err

    @property
    def lower(self):
        return max(0.0, abs(self.value) - self.err)

    def __add__(self, other):
        o = CertifiedValue.lift(other)
        return CertifiedValue(self.value + o.value, self.err + o.err)

    __radd__ = __add__

    def __neg__(self):
        return CertifiedValue(-self.value, self.err)

    def __sub__(self, other):
        return self + (-CertifiedValue.lift(other))

    def __rsub__(self, other):
        return CertifiedValue.lift(other) - self

    def __mul__(self, other):
        o = CertifiedValue.lift(other)
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return CertifiedValue(self.value * o.value, err)

    __rmul__ = __mul__

    def reciprocal(self):
        mag = abs(self.value)
        if mag <= self.err:
            raise DomainError("division by a value whose error bound contains zero")
        return CertifiedValue(1.0 / self.value, self.err / (mag * (mag - self.err)))

    def __truediv__(self, other):
        return self * CertifiedValue.lift(other).reciprocal()

    def __rtruediv__(self, other):
        return CertifiedValue.lift(other) * self.reciprocal()

    def __abs__(self):
        return CertifiedValue(abs(self.value), self.err)

    def __float__(self):
        return float(self.value.real)

    def __complex__(self):
        return self.value

    def sqrt(self):
        """Square root of a nonnegative real value."""
        x = self.value.real
        if x < 0:
            raise DomainError("sqrt of a negative certified value")
        root = math.sqrt(x)
        # sqrt is 1/2-Hoelder at 0
        err = min(math.sqrt(self.err), self.err / root) if root > 0 else math.sqrt(self.err)
        return CertifiedValue(root, err)

    def exp(self):
        v = cmath.exp(self.value)
        return CertifiedValue(v, abs(v) * math.expm1(self.err))

    def to_dict(self):
        return {"re": self.value.real, "im": self.value.imag, "err": self.err}


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = QUAD_REL_TOL
    abs_tol: float = QUAD_ABS_TOL
    max_subdivisions: int = QUAD_MAX_SUBDIVISIONS
    tail_cutoff_strategy: str = "bound-driven"
    cutoff: float = PSI_NORM_CUTOFF

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("rel_tol and abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        if self.tail_cutoff_strategy not in TAIL_STRATEGIES:
            raise DomainError(f"unknown tail strategy {self.tail_cutoff_strategy!r}")
        if not self.cutoff > 1:
            raise DomainError("cutoff must exceed 1")

    def tolerance(self, magnitude):
        return max(self.abs_tol, self.rel_tol * abs(magnitude))
