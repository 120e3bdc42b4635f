"""Mellin transform of the test function phi(t) = (1-t)^(-sigma1) on (0, 1)."""
import numpy as np

from errors import DomainError
from specfun.certified import CertifiedValue, QuadratureSpec
from specfun.gamma import gamma_ratio
from specfun.quadrature import integrate


def phi_hat(s, sigma1):
    """phi_hat(s) = Gamma(s) Gamma(1-sigma1) / Gamma(1+s-sigma1), Re s > 0."""
    s = complex(s)
    if not s.real > 0:
        raise DomainError(f"phi_hat needs Re s > 0, got {s}")
    if not sigma1 < 0.5:
        raise DomainError(f"sigma1 must be < 1/2, got {sigma1}")
    out = gamma_ratio([s, 1 - sigma1], [1 + s - sigma1])
    if s.imag == 0:
        out = CertifiedValue(out.value.real, out.err)
    return out


def phi_hat_quadrature(s, sigma1, spec=None, x_max=None):
    """Direct quadrature of int_0^1 (1-t)^(-sigma1) t^(s-1) dt in x = -log t.

    The x-form avoids the infinite oscillation of t^(i Im s) at t = 0; the
    part beyond x_max is bounded by (1-e^-X)^(-sigma1) e^(-X Re s) / Re s.
    """
    s = complex(s)
    if not s.real > 0:
        raise DomainError(f"phi_hat needs Re s > 0, got {s}")
    spec = spec or QuadratureSpec()
    if x_max is None:
        x_max = 40.0 / s.real
    period = 2 * np.pi / max(abs(s.imag), 1.0)
    breaks = np.arange(0.0, x_max, period / 2)

    def integrand(x):
        return (-np.expm1(-x)) ** (-sigma1) * np.exp(-s * x)

    body = integrate(integrand, 0.0, x_max, spec=spec, breakpoints=breaks,
                     singular="left", power=1.0 / (1.0 - sigma1))
    envelope = (-np.expm1(-x_max)) ** (-max(sigma1, 0.0)) * np.exp(-x_max * s.real) / s.real
    return body + CertifiedValue(0.0, float(envelope))
