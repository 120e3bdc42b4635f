"""Zero-free discs for zeta with phi(t) = (1 - t)^(-sigma1) on (0, 1).

F(lambda, r, sigma1) is the single-term radius

    sqrt(2 Re lambda) |Gamma(s) Gamma(1 - sigma1) zeta(s) (s - 1)|
    / ((C(r, sigma1) + ||psi_1||) |Gamma(s + 1 - sigma1) (lambda - r + 1)|),

s = lambda + r, and the disc around lambda is shifted by r. Near lambda = 0.01 + 50i,
r = 0.49, sigma1 = 0.4 it is the disc of center 1/2 + 50i and radius about 1.49e-5.
"""
import logging
import math

import numpy as np
import pandas as pd

from config import GRID_CHECK_POINTS, EXAMPLE_LAMBDA, EXAMPLE_R, EXAMPLE_SIGMA1
from discs.geometry import PseudoDisc, clip_radius, pseudo_to_euclidean
from discs.radius import prop61_radius
from errors import ConvergenceError, DomainError, HalfPlaneResult
from model import Sequence, zeta_model, zeta_psi_norm_bound
from specfun import gamma_ratio, zeta

logger = logging.getLogger(__name__)

SINGLE_TERM = Sequence((1.0,), (1.0,))


def _check(lam, r, sigma1):
    lam = complex(lam)
    if not sigma1 < 0.5:
        raise DomainError(f"sigma1 must be < 1/2, got {sigma1}")
    if not max(0.0, sigma1) < r < 1:
        raise DomainError(f"need max(0, sigma1) < r < 1, got r = {r}, sigma1 = {sigma1}")
    if not lam.real > 0:
        raise DomainError(f"Re lambda must be positive, got {lam}")
    return lam


def zeta_F(lam=EXAMPLE_LAMBDA, r=EXAMPLE_R, sigma1=EXAMPLE_SIGMA1):
    lam = _check(lam, r, sigma1)
    s = lam + r
    gam = gamma_ratio([s, 1.0 - sigma1], [s + 1.0 - sigma1])
    z = zeta(s)
    numerator = gam * z * ((s - 1.0) / (lam - r + 1.0))
    C = zeta_psi_norm_bound(r, sigma1)
    psi1 = 1.0 / ((1.0 - sigma1) * math.sqrt(2.0 - 2.0 * r))
    F = math.sqrt(2.0 * lam.real) * numerator.lower / (C.upper + psi1)
    R = clip_radius(F, "zeta_F")
    logger.info("F(%s, %.4g, %.4g) = %.6e", lam, r, sigma1, F)
    inputs = {
        "r": r,
        "sigma1": sigma1,
        "F": F,
        "zeta": z.to_dict(),
        "gamma_ratio": gam.to_dict(),
        "C_r_sigma1": C.to_dict(),
        "psi1_norm": psi1,
    }
    errors = {"zeta": z.err, "gamma_ratio": gam.err, "C_r_sigma1": C.err, "numerator": numerator.err}
    return PseudoDisc(lam=lam, R=R, sigma0=0.0, shift=r, certified_by="zeta_F",
                      inputs=inputs, errors=errors)


def certify_zeta(lam=EXAMPLE_LAMBDA, r=EXAMPLE_R, sigma1=EXAMPLE_SIGMA1, mode="paper_bound", spec=None):
    """Euclidean zero-free disc for zeta from the single-term sequence A = ((1), (1)).

    mode="paper_bound" evaluates F directly; the other modes go through
    prop61_radius with a sharper ||h||. Raises HalfPlaneResult when R = 1.
    """
    lam = _check(lam, r, sigma1)
    if mode == "paper_bound":
        pseudo = zeta_F(lam, r, sigma1)
    else:
        pseudo = prop61_radius(zeta_model(sigma1), SINGLE_TERM, r, lam, mode=mode, spec=spec)
    disc = pseudo_to_euclidean(pseudo)
    logger.info("zeta has no zero in the disc of center %s and radius %.6e", disc.center, disc.radius)
    return disc


def zero_free_grid_check(disc, shape=GRID_CHECK_POINTS):
    """min |zeta| over the center and a polar grid inside the disc.

    A floating-point sanity check of a certificate, not a proof.
    """
    points = np.concatenate(([disc.center], disc.interior_grid(*shape)))
    values = [zeta(p) for p in points]
    lowest = min(values, key=lambda v: v.lower)
    report = {
        "points": len(points),
        "min_abs_zeta": abs(lowest.value),
        "max_err": max(v.err for v in values),
        "zero_free": lowest.lower > 0,
    }
    logger.debug("grid check on %d points: min |zeta| = %.6e", len(points), report["min_abs_zeta"])
    return report


def batch_certify(lambdas, r=EXAMPLE_R, sigma1=EXAMPLE_SIGMA1, mode="paper_bound", spec=None):
    """One row per lambda: R, center and radius of the zeta disc, or why there is none."""
    rows = []
    for lam in lambdas:
        lam = complex(lam)
        row = {"lambda_re": lam.real, "lambda_im": lam.imag, "r": r, "sigma1": sigma1, "mode": mode}
        try:
            disc = certify_zeta(lam, r, sigma1, mode, spec)
        except HalfPlaneResult as exc:
            row.update(R=1.0, center_re=np.nan, center_im=np.nan, radius=np.inf,
                       status=f"half-plane Re s > {exc.boundary}")
        except DomainError as exc:
            row.update(R=np.nan, center_re=np.nan, center_im=np.nan, radius=np.nan, status=f"error: {exc}")
        except ConvergenceError as exc:
            logger.warning("no certificate at lambda=%s: %s", lam, exc)
            row.update(R=np.nan, center_re=np.nan, center_im=np.nan, radius=np.nan,
                       status=f"numeric error: {exc}")
        else:
            row.update(R=disc.R, center_re=disc.center.real, center_im=disc.center.imag,
                       radius=disc.radius, status="ok")
        rows.append(row)
    logger.info("certified %d of %d lambda values", sum(row["status"] == "ok" for row in rows), len(rows))
    return pd.DataFrame(rows)
