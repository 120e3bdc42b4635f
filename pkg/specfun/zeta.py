"""Riemann and Hurwitz zeta functions.

zeta() uses the Chebyshev-accelerated alternating series for eta(s)
(Borwein's second algorithm) whenever its error bound is usable, and an
Euler-Maclaurin evaluation otherwise. euler_maclaurin_zeta() is kept
callable on its own as an independent cross-check.
"""
import cmath
import logging
import math

import numpy as np
from scipy.special import bernoulli, factorial

from config import (
    BORWEIN_MAX_IM, BORWEIN_MAX_TERMS, BORWEIN_MIN_FACTOR, EM_BERNOULLI_TERMS,
    HURWITZ_SHIFT, HURWITZ_TERMS, ZETA_POLE_DIST, ZETA_TARGET_ERR,
)
from errors import DomainError, PoleError
from specfun.certified import CertifiedValue
from specfun.gamma import gamma

logger = logging.getLogger(__name__)

LOG_BORWEIN_RATE = math.log(3 + math.sqrt(8))
EPS = np.finfo(float).eps

# B_{2j} / (2j)! for j = 1..EM_BERNOULLI_TERMS + 1
_B = bernoulli(2 * EM_BERNOULLI_TERMS + 2)
BERNOULLI_OVER_FACT = np.array(
    [_B[2 * j] / factorial(2 * j, exact=False) for j in range(1, EM_BERNOULLI_TERMS + 2)]
)


def borwein_terms(s):
    """Number of terms n such that the eta error bound is below target."""
    t = abs(s.imag)
    factor = abs(1 - 2 ** (1 - s))
    need = (math.log(3 * (1 + 2 * t) / (factor * ZETA_TARGET_ERR)) + math.pi * t / 2) / LOG_BORWEIN_RATE
    return max(8, int(math.ceil(need)))


def borwein_zeta(s, n=None):
    """zeta(s) for Re s > 0 through eta(s) / (1 - 2^(1-s))."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError("alternating-series zeta needs Re s > 0")
    factor = 1 - 2 ** (1 - s)
    if n is None:
        n = borwein_terms(s)
    n = min(n, BORWEIN_MAX_TERMS)
    # d_k / d_n accumulated from term ratios to stay in range
    i = np.arange(n)
    ratios = 4.0 * (n + i) * (n - i) / ((2 * i + 1) * (2 * i + 2))
    terms = np.concatenate(([1.0 / n], (1.0 / n) * np.cumprod(ratios)))
    d = n * np.cumsum(terms)
    dn = d[-1]
    k = np.arange(n)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    weights = signs * (d[:n] - dn) / dn
    powers = np.exp(-s * np.log(k + 1.0))
    eta = -np.sum(weights * powers)
    t = abs(s.imag)
    bound = 3 * (1 + 2 * t) * math.exp(math.pi * t / 2 - n * LOG_BORWEIN_RATE)
    # the (1+2|t|)e^{pi|t|/2} form is stated for Re s >= 1/2; use 1/|Gamma| below
    if s.real < 0.5:
        bound = max(bound, 4 * math.exp(-n * LOG_BORWEIN_RATE) / gamma(s).lower)
    rounding = 4 * n * EPS * float(np.sum(np.abs(weights * powers)))
    value = eta / factor
    return CertifiedValue(value, (bound + rounding) / abs(factor))


def euler_maclaurin_zeta(s, N=None):
    """zeta(s) for any s != 1 by Euler-Maclaurin summation."""
    s = complex(s)
    if abs(s - 1) < ZETA_POLE_DIST:
        raise PoleError("zeta has a pole at s = 1")
    if N is None:
        N = 10 + int(math.ceil(abs(s)))
    n = np.arange(1, N, dtype=float)
    head = np.sum(np.exp(-s * np.log(n)))
    logN = math.log(N)
    total = head + cmath.exp((1 - s) * logN) / (s - 1) + 0.5 * cmath.exp(-s * logN)
    rounding = 4 * EPS * (N + abs(total))
    poch = s  # (s)_{2j-1}
    used = EM_BERNOULLI_TERMS
    for j in range(1, EM_BERNOULLI_TERMS + 1):
        term = BERNOULLI_OVER_FACT[j - 1] * poch * cmath.exp((-s - 2 * j + 1) * logN)
        total += term
        poch = poch * (s + 2 * j - 1) * (s + 2 * j)
        if abs(term) < 0.1 * EPS * abs(total):
            used = j
            break
    # remainder after J terms: |next term| * |s + 2J + 1| / (Re s + 2J + 1)
    nxt = abs(BERNOULLI_OVER_FACT[used] * poch) * math.exp((-s.real - 2 * used - 1) * logN)
    sigma = s.real + 2 * used + 1
    rem = nxt * abs(s + 2 * used + 1) / sigma if sigma > 0 else nxt * abs(s + 2 * used + 1)
    return CertifiedValue(total, rem + rounding)


def zeta(s):
    """Riemann zeta(s) as a CertifiedValue; raises PoleError at s = 1."""
    s = complex(s)
    if abs(s - 1) < ZETA_POLE_DIST:
        raise PoleError("zeta has a pole at s = 1")
    use_borwein = (
        s.real > 0
        and abs(s.imag) <= BORWEIN_MAX_IM
        and abs(1 - 2 ** (1 - s)) >= BORWEIN_MIN_FACTOR
    )
    if use_borwein:
        out = borwein_zeta(s)
    else:
        logger.debug("zeta(%s): Euler-Maclaurin route", s)
        out = euler_maclaurin_zeta(s)
    if s.imag == 0:
        out = CertifiedValue(out.value.real, out.err)
    return out


def hurwitz_zeta_array(sigma, x):
    """Hurwitz zeta(sigma, x) for real sigma != 1 and x > 0, vectorised over x."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for k in range(HURWITZ_SHIFT):
        out += (x + k) ** (-sigma)
    y = x + HURWITZ_SHIFT
    out += y ** (1 - sigma) / (sigma - 1) + 0.5 * y ** (-sigma)
    poch = sigma
    for j in range(1, HURWITZ_TERMS + 1):
        out += BERNOULLI_OVER_FACT[j - 1] * poch * y ** (-sigma - 2 * j + 1)
        poch *= (sigma + 2 * j - 1) * (sigma + 2 * j)
    return out


def hurwitz_tail_series(sigma, t):
    """sum_j B_2j/(2j)! (sigma)_{2j-1} t^{1-2j}, the smooth part of t^sigma zeta(sigma, t)."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    poch = sigma
    for j in range(1, HURWITZ_TERMS + 1):
        out += BERNOULLI_OVER_FACT[j - 1] * poch * t ** (1 - 2 * j)
        poch *= (sigma + 2 * j - 1) * (sigma + 2 * j)
    return out


def hurwitz_mean_square(sigma):
    """Integral over theta in (0,1] of zeta(sigma, theta)^2, for sigma < 1/2."""
    if not sigma < 0.5:
        raise DomainError("mean square of zeta(sigma, .) is finite only for sigma < 1/2")
    g = gamma(1 - sigma)
    z = zeta(2 - 2 * sigma)
    scale = 2.0 / (2 * math.pi) ** (2 - 2 * sigma)
    return g * g * z * scale
