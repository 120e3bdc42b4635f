"""Radii of zero-free pseudo-discs.

Three routes lead to R: the value of h_{A,r} at lambda against its norm,
an upper bound for the distance delta_r(lambda) from u_{r,lambda}, and an
upper bound for the constrained distance d#_r(lambda) from w_lambda. Every
route shifts the disc by r - sigma0.
"""
import logging
import math

import numpy as np

from bounds import Target, distance_upper_bound, f_norm, sharp_distance_from_unconstrained, theta_psi_r
from config import H_LINE_CUTOFF, NORM_MODES
from discs.geometry import PseudoDisc, clip_radius
from errors import DegenerateError, DomainError, UnsupportedModelError
from model import blaschke, g_A, psi1_norm, psi_norm_full, zeta_psi_norm_bound
from specfun import CertifiedValue, QuadratureSpec, gamma, integrate, zeta

logger = logging.getLogger(__name__)

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _check_lambda(lam, sigma0):
    lam = complex(lam)
    if not lam.real > sigma0:
        raise DomainError(f"Re lambda = {lam.real} must exceed sigma0 = {sigma0}")
    return lam


def h_eval(model, A, r, s):
    """h_{A,r}(s) = -(2 pi)^(-1/2) (L phi_hat g_A b_{1,r}^m)(s + r - sigma0)."""
    model.check_r(r)
    z = complex(s) + r - model.sigma0
    b = blaschke(1.0, r, z) ** model.m_L
    value = model.L_eval(z) * model.phi_hat_eval(z) * (g_A(A, z) * b)
    return -INV_SQRT_2PI * value


def _line_tail(model, A, r, Y):
    """Mean-value estimate of int_{|y| > Y} |h(sigma0 + iy)|^2 dy for zeta."""
    sigma1 = model.test_sigma1
    weight = A.weighted_l1(r)
    gamma_sq = abs(gamma(1.0 - sigma1).value) ** 2
    mean_sq = zeta(2.0 * r).value.real
    return 2.0 * mean_sq * weight ** 2 * gamma_sq / (2.0 * math.pi) * Y ** (2.0 * sigma1 - 1.0) / (1.0 - 2.0 * sigma1)


def h_norm_line(model, A, r, spec=None, cutoff=H_LINE_CUTOFF):
    """||h_{A,r}|| over the line Re s = sigma0, by quadrature up to |Im s| = cutoff.

    Beyond the cutoff the mean square zeta(2r) of zeta on Re s = r gives
    the tail, which is also taken as its error; r > 1/2 is needed.
    """
    if not model.unit_coefficients:
        raise UnsupportedModelError(f"no tail estimate for h on the line for model {model.name!r}")
    if not r > 0.5:
        raise DomainError(f"the mean-square tail needs r > 1/2, got {r}")
    spec = spec or QuadratureSpec(rel_tol=1e-8)
    sigma0 = model.sigma0
    Y = float(cutoff)

    def f(y):
        return np.array([abs(h_eval(model, A, r, complex(sigma0, v)).value) ** 2 for v in np.atleast_1d(y)])

    symmetric = all(c.imag == 0 for c in A.c)
    if symmetric:
        body = integrate(f, 0.0, Y, spec=spec, breakpoints=np.arange(1.0, Y))
        body = body + body
    else:
        body = integrate(f, -Y, Y, spec=spec, breakpoints=np.arange(-Y + 1.0, Y))
    tail = _line_tail(model, A, r, Y)
    logger.debug("||h||^2 on the line: body %.8g, tail estimate %.3e", body.value.real, tail)
    return CertifiedValue(body.value.real + tail, body.err + tail).sqrt()


def h_norm(model, A, r, mode="paper_bound", spec=None):
    """Upper bound for ||h_{A,r}|| = ||f_{A,r}||.

    paper_bound: sum |c_j| alpha_j^r (||psi_1|| + C(r, sigma1)), zeta only.
    full_norm: sum |c_j| alpha_j^r ||psi||_{L^2(0, inf)}.
    quadrature: ||f_{A,r}|| from the Gram system of A.
    """
    if mode not in NORM_MODES:
        raise DomainError(f"mode must be one of {NORM_MODES}, got {mode!r}")
    weight = A.weighted_l1(r)
    if weight == 0:
        raise DegenerateError("every c_j vanishes, so h_{A,r} = 0")
    if mode == "paper_bound":
        if not model.unit_coefficients:
            raise UnsupportedModelError("the closed-form ||psi||_r bound exists only for zeta")
        inner = psi1_norm(model, r)
        outer = zeta_psi_norm_bound(r, model.test_sigma1)
        return CertifiedValue(weight * (inner.upper + outer.upper))
    if mode == "full_norm":
        return CertifiedValue(weight * psi_norm_full(model, r, spec).upper)
    norm = f_norm(model, A, r, spec)
    if norm.lower == 0:
        raise DegenerateError("||f_{A,r}|| is not separated from zero")
    return CertifiedValue(norm.upper)


def prop61_radius(model, A, r, lam, mode="paper_bound", spec=None):
    """R = sqrt(4 pi (Re lambda - sigma0)) |h_{A,r}(lambda)| / ||h_{A,r}||, clipped to [0, 1].

    The lower bound of |h(lambda)| and the upper bound of the norm are
    used, so R only shrinks under rounding.
    """
    model.check_r(r)
    lam = _check_lambda(lam, model.sigma0)
    norm = h_norm(model, A, r, mode, spec)
    h = h_eval(model, A, r, lam)
    scale = math.sqrt(4.0 * math.pi * (lam.real - model.sigma0))
    R = clip_radius(scale * h.lower / norm.upper, "prop61")
    logger.info("prop61 radius at lambda=%s, r=%.4g (%s): R=%.6e", lam, r, mode, R)
    inputs = {"r": r, "sigma1": model.test_sigma1, "model": model.name, "mode": mode,
              "sequence": A.to_dict(), "h": h.to_dict(), "h_norm": norm.to_dict()}
    errors = {"h": h.err, "h_norm": norm.err}
    return PseudoDisc(lam=lam, R=R, sigma0=model.sigma0, shift=r - model.sigma0,
                      certified_by="prop61", inputs=inputs, errors=errors)


def _distance_disc(distance, r, lam, sigma0, certified_by):
    if distance < 0:
        raise DomainError(f"a distance bound must be >= 0, got {distance}")
    lam = _check_lambda(lam, sigma0)
    R2 = 1.0 - 2.0 * (lam.real - sigma0) * distance ** 2
    R = math.sqrt(max(0.0, R2))
    return PseudoDisc(lam=lam, R=R, sigma0=sigma0, shift=r - sigma0, certified_by=certified_by,
                      inputs={"r": r, "distance_upper": distance})


def thm62_disc(delta_upper, r, lam, sigma0):
    """R = sqrt(max(0, 1 - 2 (Re lambda - sigma0) delta^2)) for delta >= delta_r(lambda)."""
    return _distance_disc(delta_upper, r, lam, sigma0, "thm62")


def thm21_sharp_disc(d_sharp_upper, r, lam, sigma0):
    """Same radius formula for an upper bound of the constrained distance d#_r(lambda)."""
    return _distance_disc(d_sharp_upper, r, lam, sigma0, "thm21sharp")


def distance_certificates(model, r, lam, grid, constraint="none", spec=None, norm_source="paper_bound"):
    """Both distance routes on one grid.

    delta_r from u_{r,lambda} gives the thm62 disc. d#_r comes from the
    constrained w_lambda distance, or, without the constraint, from the
    unconstrained one times 1 + theta sqrt(1 - r).
    """
    lam = _check_lambda(lam, model.sigma0)
    delta = distance_upper_bound(model, r, Target.u_r_lambda(lam), grid, spec=spec)
    thm62 = thm62_disc(delta.value, r, lam, model.sigma0)
    sharp = distance_upper_bound(model, r, Target.w_lambda(lam), grid, constraint=constraint, spec=spec)
    if constraint == "admissible":
        d_sharp = sharp.value
        factor = None
    else:
        factor = theta_psi_r(model, r, norm_source=norm_source, spec=spec)
        d_sharp = sharp_distance_from_unconstrained(sharp.value, factor)
    thm21 = thm21_sharp_disc(d_sharp, r, lam, model.sigma0)
    logger.info("distance certificates: delta <= %.6g (R=%.4g), d# <= %.6g (R=%.4g)",
                delta.value, thm62.R, d_sharp, thm21.R)
    return {
        "delta": delta,
        "w_distance": sharp,
        "d_sharp_upper": d_sharp,
        "comparison": factor,
        "thm62": thm62,
        "thm21sharp": thm21,
    }
