"""Pseudo-hyperbolic discs |(mu - lambda) / (mu + conj(lambda) - 2 sigma0)| < R and their Euclidean form."""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from errors import DomainError, HalfPlaneResult

logger = logging.getLogger(__name__)

CERTIFIERS = ("prop61", "thm62", "thm21sharp", "zeta_F")


@dataclass(frozen=True)
class PseudoDisc:
    """Zero-free pseudo-disc around lam, translated by shift = r - sigma0.

    inputs and errors carry the parameters and error bounds the radius R
    was computed from, so every emitted disc can be audited.
    """
    lam: complex
    R: float
    sigma0: float
    shift: float
    certified_by: str = "prop61"
    inputs: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        if not self.lam.real > self.sigma0:
            raise DomainError(f"Re lambda = {self.lam.real} must exceed sigma0 = {self.sigma0}")
        if not 0 <= self.R <= 1:
            raise DomainError(f"R must lie in [0, 1], got {self.R}")
        if self.certified_by not in CERTIFIERS:
            raise DomainError(f"certified_by must be one of {CERTIFIERS}, got {self.certified_by!r}")

    @property
    def is_half_plane(self):
        return self.R >= 1

    def modulus(self, mu):
        """Pseudo-hyperbolic distance from lam of the points s = mu + shift."""
        mu = np.asarray(mu, dtype=complex) - self.shift
        return np.abs((mu - self.lam) / (mu + np.conj(self.lam) - 2 * self.sigma0))

    def to_dict(self):
        return {
            "lambda_re": self.lam.real,
            "lambda_im": self.lam.imag,
            "R": self.R,
            "sigma0": self.sigma0,
            "shift": self.shift,
            "certified_by": self.certified_by,
        }


@dataclass(frozen=True)
class EuclideanDisc:
    center: complex
    radius: float
    R: float
    certified_by: str
    inputs: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if not (math.isfinite(self.radius) and self.radius >= 0):
            raise DomainError(f"radius must be finite and >= 0, got {self.radius}")

    def contains(self, s):
        return np.abs(np.asarray(s, dtype=complex) - self.center) < self.radius

    def boundary(self, n=20):
        phi = 2 * np.pi * np.arange(n) / n
        return self.center + self.radius * np.exp(1j * phi)

    def interior_grid(self, n_radii=10, n_angles=10):
        """n_radii * n_angles points at radii (k + 1/2) / n_radii of the radius."""
        rho = (np.arange(n_radii) + 0.5) / n_radii * self.radius
        phi = 2 * np.pi * np.arange(n_angles) / n_angles
        return (self.center + rho[:, None] * np.exp(1j * phi)[None, :]).ravel()

    def to_dict(self):
        return {
            "center_re": self.center.real,
            "center_im": self.center.imag,
            "radius": self.radius,
            "R": self.R,
            "certified_by": self.certified_by,
            "inputs": self.inputs,
            "errors": self.errors,
        }


def pseudo_to_euclidean(disc):
    """Euclidean form of a pseudo-disc with R < 1.

    center = shift + (a + R^2 (a - 2 sigma0)) / (1 - R^2) + i b,
    radius = 2 R (a - sigma0) / (1 - R^2), with lam = a + i b.
    Raises HalfPlaneResult when R >= 1.
    """
    if disc.is_half_plane:
        raise HalfPlaneResult(disc.shift + disc.sigma0)
    a, b = disc.lam.real, disc.lam.imag
    R2 = disc.R * disc.R
    one = 1.0 - R2
    center = complex(disc.shift + (a + R2 * (a - 2.0 * disc.sigma0)) / one, b)
    radius = 2.0 * disc.R * (a - disc.sigma0) / one
    logger.debug("pseudo-disc R=%.6g around %s -> center %s radius %.6g", disc.R, disc.lam, center, radius)
    inputs = {"lambda_re": a, "lambda_im": b, "sigma0": disc.sigma0, "shift": disc.shift, **disc.inputs}
    return EuclideanDisc(center=center, radius=radius, R=disc.R, certified_by=disc.certified_by,
                         inputs=inputs, errors=dict(disc.errors))


def clip_radius(R, label):
    """Clip a computed R into [0, 1]; above 1 only through loose error bounds."""
    if R > 1:
        logger.warning("%s: R = %.6g exceeds 1, clipped", label, R)
        return 1.0
    return max(0.0, float(R))
