"""Hardy-space pieces on half-planes Re s > r: Blaschke factor, reproducing
kernel, and the targets w_lambda and u_{r,lambda} of the distance problems.

Mellin transforms here are f_hat(s) = int_0^inf f(t) t^(s-1) dt.
"""
import math
from math import comb, factorial

import numpy as np

from errors import DegenerateError, DomainError, PoleError

POLE_DIST = 1e-14


def blaschke(lam, r, s):
    """b_{lambda,r}(s) = (s - lambda) / (s + conj(lambda) - 2r)."""
    lam, s = complex(lam), complex(s)
    den = s + lam.conjugate() - 2 * r
    if abs(den) < POLE_DIST:
        raise PoleError(f"Blaschke factor has a pole at s = {2 * r - lam.conjugate()}")
    return (s - lam) / den


def kernel(lam, r, s):
    """k_{lambda,r}(s) = 1 / (2 pi (s - 2r + conj(lambda)))."""
    lam, s = complex(lam), complex(s)
    if not lam.real > r:
        raise DomainError(f"kernel needs Re lambda > r, got {lam} and r = {r}")
    den = s - 2 * r + lam.conjugate()
    if abs(den) < POLE_DIST:
        raise PoleError(f"kernel has a pole at s = {2 * r - lam.conjugate()}")
    return 1.0 / (2 * math.pi * den)


def kernel_norm(lam, r):
    lam = complex(lam)
    if not lam.real > r:
        raise DomainError(f"kernel needs Re lambda > r, got {lam} and r = {r}")
    return (4 * math.pi * (lam.real - r)) ** -0.5


def _check_lambda(model, lam):
    lam = complex(lam)
    if not lam.real > model.sigma0:
        raise DomainError(f"lambda = {lam} must satisfy Re lambda > sigma0 = {model.sigma0}")
    return lam


def w_lambda_array(model, lam, t):
    """w_lambda(t) = t^(conj(lambda) - 2 sigma0) on (0, 1], zero beyond."""
    lam = _check_lambda(model, lam)
    t = np.asarray(t, dtype=float)
    inside = t <= 1
    out = np.zeros(t.shape, dtype=complex)
    out[inside] = np.exp((lam.conjugate() - 2 * model.sigma0) * np.log(t[inside]))
    return out


def w_lambda_norm2(model, lam):
    """||w_lambda||^2 in L^2(dt / t^(1 - 2 sigma0)) = 1 / (2 (Re lambda - sigma0))."""
    lam = _check_lambda(model, lam)
    return 1.0 / (2 * (lam.real - model.sigma0))


def _ab(model, r, lam):
    A = 2.0 - 2.0 * r
    B = r + model.sigma0 - 1.0 - lam.conjugate()
    if B == 0:
        raise DegenerateError("B = r + sigma0 - 1 - conj(lambda) vanishes")
    return A, B


def q_coefficients(model, r, lam, published_sign=False):
    """Coefficients q_0..q_{m-1} of Q_{r,lambda}(x) = sum_j q_j x^j.

    q_j = (sum_{k<=m-1-j} C(m,k) (A/B)^(m-k)) (-B)^j / j!, the residue of
    2 pi k / b^m at s = 1 + sigma0 - r. published_sign=True returns the
    negated polynomial, whose Mellin transform misses the identity.
    """
    lam = _check_lambda(model, lam)
    model.check_r(r)
    A, B = _ab(model, r, lam)
    m = model.m_L
    ratio = A / B
    q = []
    for j in range(m):
        inner = sum(comb(m, k) * ratio ** (m - k) for k in range(m - j))
        q.append(inner * (-B) ** j / factorial(j))
    q = np.array(q, dtype=complex)
    return -q if published_sign else q


def u_r_lambda_lead(model, r, lam):
    """(1 + A/B)^m, the coefficient of the branch on (0, 1]."""
    lam = _check_lambda(model, lam)
    A, B = _ab(model, r, lam)
    return (1 + A / B) ** model.m_L


def u_r_lambda_array(model, r, lam, t, published_sign=False):
    """(1 + A/B)^m t^(conj(lambda) - 2 sigma0) on (0, 1], Q(log t) t^(r - sigma0 - 1) beyond."""
    lam = _check_lambda(model, lam)
    q = q_coefficients(model, r, lam, published_sign)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError("u_{r,lambda} needs t > 0")
    out = np.zeros(t.shape, dtype=complex)
    inside = t <= 1
    lead = u_r_lambda_lead(model, r, lam)
    out[inside] = lead * np.exp((lam.conjugate() - 2 * model.sigma0) * np.log(t[inside]))
    lt = np.log(t[~inside])
    out[~inside] = np.polynomial.polynomial.polyval(lt, q) * t[~inside] ** (r - model.sigma0 - 1)
    return out


def u_r_lambda(model, r, lam, t):
    return complex(u_r_lambda_array(model, r, lam, np.array([float(t)]))[0])


def mellin_u_closed_form(model, r, lam, s, published_sign=False):
    """u_hat(s) from the two branches:
    (1 + A/B)^m / (s + conj(lambda) - 2 sigma0) + sum_j q_j j! / c^(j+1),
    c = 1 + sigma0 - r - s.
    """
    lam = _check_lambda(model, lam)
    s = complex(s)
    lo, hi = 2 * model.sigma0 - lam.real, 1 + model.sigma0 - r
    if not lo < s.real < hi:
        raise DomainError(f"Re s = {s.real} outside the strip ({lo}, {hi})")
    A, B = _ab(model, r, lam)
    q = q_coefficients(model, r, lam, published_sign)
    c = 1 + model.sigma0 - r - s
    head = (1 + A / B) ** model.m_L / (s + lam.conjugate() - 2 * model.sigma0)
    tail = sum(qj * factorial(j) / c ** (j + 1) for j, qj in enumerate(q))
    return head + tail


def mellin_u_target(model, r, lam, s):
    """2 pi k_{lambda,sigma0}(s) / b_{1,r}^m(s + r - sigma0)."""
    lam = _check_lambda(model, lam)
    k = kernel(lam, model.sigma0, s)
    b = blaschke(1.0, r, complex(s) + r - model.sigma0)
    if b == 0:
        raise PoleError("Blaschke factor vanishes at s = 1 + sigma0 - r")
    return 2 * math.pi * k / b ** model.m_L


def mellin_u_check(model, r, lam, s, published_sign=False):
    """|u_hat(s) - 2 pi k / b^m| at a point of the strip."""
    model.check_r(r)
    closed = mellin_u_closed_form(model, r, lam, s, published_sign)
    return abs(closed - mellin_u_target(model, r, lam, s))


def u_r_lambda_norm2(model, r, lam):
    """||u_{r,lambda}||^2 in L^2(dt / t^(1 - 2 sigma0)) from its two branches.

    The outer branch gives sum_{i,j} q_i conj(q_j) (i+j)! / (2-2r)^(i+j+1);
    the total equals 1 / (2 (Re lambda - sigma0)).
    """
    lam = _check_lambda(model, lam)
    q = q_coefficients(model, r, lam)
    inner = abs(u_r_lambda_lead(model, r, lam)) ** 2 / (2 * (lam.real - model.sigma0))
    base = 2.0 - 2.0 * r
    outer = 0j
    for i, qi in enumerate(q):
        for j, qj in enumerate(q):
            outer += qi * np.conj(qj) * factorial(i + j) / base ** (i + j + 1)
    return inner + outer.real
