"""Constants of the comparison between constrained and unconstrained distances.

theta(psi, r) = xi(P) E(r) Lambda(m, r) / sqrt(mu_m) and the factor
1 + theta sqrt(1 - r) relating dist(w, K_r#) to dist(w, K_r).
"""
import logging
import math
from dataclasses import dataclass, field

from errors import DomainError
from linalg import pascal_min_eigenvalue, xi_proof
from linalg.vandermonde import abs_sum_bound
from model import P_norm2, poly_P, psi_norm_r, zeta_psi_norm_bound

logger = logging.getLogger(__name__)

SERIES_REL_CUTOFF = 1e-16
NORM_SOURCES = ("quadrature", "paper_bound")


@dataclass(frozen=True)
class ComparisonFactor:
    r: float
    theta: float
    factor: float
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.theta < 0 or self.factor < 1:
            raise DomainError(f"invalid comparison factor theta={self.theta}, factor={self.factor}")

    def to_dict(self):
        return {"r": self.r, "theta": self.theta, "factor": self.factor, **self.components}


def E_of_r(r, m=1):
    """E(r) = (2 sum_k (2-2r)^(2k) / (k!)^2)^(1/2), summed until terms drop below 1e-16 of the sum.

    The series does not depend on m; m is checked and kept for the call shape
    used with Lambda(m, r).
    """
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    if not r < 1:
        raise DomainError(f"E(r) needs r < 1, got {r}")
    x2 = (2.0 - 2.0 * r) ** 2
    term, total, k = 1.0, 1.0, 0
    while True:
        k += 1
        term *= x2 / (k * k)
        total += term
        if term < SERIES_REL_CUTOFF * total:
            break
    return math.sqrt(2.0 * total)


def Lambda_m_r(m, r, P_norm2, psi_norm_r):
    """((m-1) 2^m + 1) max(e^m, e^((1-r)m)) (||P||_2^2 + ||psi||_r^2)^(1/2)."""
    if P_norm2 < 0 or psi_norm_r < 0:
        raise DomainError("norms must be nonnegative")
    if not r < 1:
        raise DomainError(f"Lambda(m, r) needs r < 1, got {r}")
    growth = max(math.exp(m), math.exp((1.0 - r) * m))
    return abs_sum_bound(m) * growth * math.hypot(P_norm2, psi_norm_r)


def theta_psi_r(model, r, norm_source="quadrature", spec=None):
    """Assemble theta(psi, r) and the factor 1 + theta sqrt(1 - r).

    norm_source="paper_bound" takes ||psi||_r from C(r, sigma1) (zeta only),
    "quadrature" integrates it.
    """
    if norm_source not in NORM_SOURCES:
        raise DomainError(f"norm_source must be one of {NORM_SOURCES}, got {norm_source!r}")
    model.check_r(r)
    m = model.m_L
    P = poly_P(model)
    if norm_source == "paper_bound":
        if not model.unit_coefficients:
            raise DomainError("the closed-form ||psi||_r bound exists only for zeta")
        psi_norm = zeta_psi_norm_bound(r, model.test_sigma1).upper
    else:
        psi_norm = psi_norm_r(model, r, spec).upper
    xi = xi_proof(P)
    E = E_of_r(r, m)
    Lam = Lambda_m_r(m, r, P_norm2(P), psi_norm)
    mu = pascal_min_eigenvalue(m)
    mu_low = mu.value.real - mu.err
    theta = xi * E * Lam / math.sqrt(mu_low)
    factor = 1.0 + theta * math.sqrt(1.0 - r)
    logger.debug("theta(psi, %.4g) = %.6g from xi=%.4g E=%.4g Lambda=%.4g mu=%.4g",
                 r, theta, xi, E, Lam, mu_low)
    components = {"xi": xi, "E": E, "Lambda": Lam, "mu_m": mu_low, "psi_norm_r": psi_norm,
                  "norm_source": norm_source}
    return ComparisonFactor(r=float(r), theta=theta, factor=factor, components=components)
