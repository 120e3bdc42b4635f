"""Norms of psi and P, and Mellin transforms of psi by quadrature.

||psi||_r^2 = int_1^inf |psi(t)|^2 dt / t^(1+2r) is integrated over unit
segments up to the cutoff T with the left end of each segment flattened,
since psi jumps and, for sigma1 > 0, blows up like theta^(-sigma1) right
after every integer. Beyond T the "bound-driven" tail uses the Hurwitz
form of psi for zeta; the "geometric" tail extrapolates dyadic blocks.
"""
import logging
import math
from math import comb, factorial

import numpy as np

from config import HURWITZ_TERMS, MELLIN_F_CUTOFF
from errors import ConvergenceError, DomainError, UnsupportedModelError
from model.psi import poly_P, psi_array
from model.sequence import g_A
from specfun import (
    CertifiedValue, QuadratureSpec, Weight, hurwitz_mean_square, hurwitz_zeta_array, integrate, zeta,
)
from specfun.zeta import BERNOULLI_OVER_FACT

logger = logging.getLogger(__name__)


def _log_moment_form(P, base):
    """sum_{i,j} p_i conj(p_j) (-1)^(i+j) (i+j)! / base^(i+j+1) = int_0^1 |P(log u)|^2 u^(base-1) du."""
    p = np.array(P.p)
    total = 0j
    for i in range(P.m):
        for j in range(P.m):
            n = i + j
            total += p[i] * np.conj(p[j]) * (-1) ** n * factorial(n) / base ** (n + 1)
    return total.real


def P_norm2(P):
    return math.sqrt(_log_moment_form(P, 2.0))


def psi1_norm(model, r):
    """||psi_1|| in L^2((0,1), du/u^(1+2r)); ((1-sigma1)^2 (2-2r))^(-1/2) for zeta."""
    if not r < 1:
        raise DomainError(f"psi_1 is square integrable near 0 only for r < 1, got {r}")
    value = _log_moment_form(poly_P(model), 2.0 - 2.0 * r)
    return CertifiedValue(math.sqrt(value), 8 * np.finfo(float).eps * math.sqrt(value))


def zeta_C_sigma1(sigma1):
    eps1 = 1.0 if sigma1 >= 0 else -1.0
    one = 1.0 - sigma1
    return 1.0 / (1.0 - 2.0 * sigma1) + 1.0 / (one ** 2 * (3.0 - 2.0 * sigma1)) + eps1 / one ** 2


def zeta_psi_norm_bound(r, sigma1):
    """C(r, sigma1) = sqrt(1/(2r) + C(sigma1) zeta(1 + 2r - 2 sigma1)) >= ||psi||_r for zeta."""
    if not max(0.0, sigma1) < r < 1:
        raise DomainError(f"need max(0, sigma1) < r < 1, got r = {r}, sigma1 = {sigma1}")
    squared = 1.0 / (2.0 * r) + zeta_C_sigma1(sigma1) * zeta(1.0 + 2.0 * r - 2.0 * sigma1)
    return squared.sqrt()


def smooth_part_bound(sigma1, T):
    """sum_j |B_2j/(2j)! (sigma1)_{2j-1}| T^(1-2j), bounding |S(t)| for t >= T."""
    total = 0.0
    poch = sigma1
    for j in range(1, HURWITZ_TERMS + 1):
        total += abs(BERNOULLI_OVER_FACT[j - 1] * poch) * T ** (1 - 2 * j)
        poch *= (sigma1 + 2 * j - 1) * (sigma1 + 2 * j)
    return total


def zeta_square_tail(sigma1, r, T):
    """int_T^inf |psi|^2 dt/t^(1+2r) for zeta at an integer T.

    psi = 1/2 + S(t) - t^sigma1 zeta(sigma1, theta): the periodic square
    contributes its mean M2 T^(-kappa)/kappa, kappa = 2r - 2 sigma1, and
    the constant 1/4 gives T^(-2r)/(8r). Oscillating remainders are bounded
    with the second mean value theorem on whole periods.
    """
    if T != int(T):
        raise DomainError(f"the zeta tail needs an integer cutoff, got {T}")
    kappa = 2.0 * r - 2.0 * sigma1
    m2 = hurwitz_mean_square(sigma1)
    s_max = smooth_part_bound(sigma1, T)
    main = m2 * (T ** -kappa / kappa) + T ** (-2.0 * r) / (8.0 * r)
    err = (
        2.0 * m2.upper * T ** (-kappa - 1.0)
        + 4.0 * math.sqrt(m2.upper) * (0.5 + s_max) * T ** (sigma1 - 1.0 - 2.0 * r)
        + (s_max + s_max ** 2) * T ** (-2.0 * r) / (2.0 * r)
    )
    return main + CertifiedValue(0.0, err)


def _power(sigma1):
    return 1.0 / (1.0 - 2.0 * sigma1) if sigma1 > 0 else 2.0


def _square_integrand(model):
    def f(t, d, lo, hi):
        return np.abs(psi_array(model, t, theta=d)) ** 2
    return f


def _square_block(model, r, a, b, spec):
    breaks = np.arange(math.floor(a) + 1, math.ceil(b))
    return integrate(_square_integrand(model), float(a), float(b), weight=Weight.POWER_R,
                     param=r, spec=spec, breakpoints=breaks, singular="left",
                     power=_power(model.test_sigma1), with_offset=True)


def _geometric_square(model, r, spec, T):
    quarter, half = math.floor(T / 4), math.floor(T / 2)
    if quarter < 2:
        raise DomainError(f"cutoff {T} too small for dyadic tail extrapolation")
    head = _square_block(model, r, 1, quarter, spec)
    first = _square_block(model, r, quarter, half, spec)
    last = _square_block(model, r, half, T, spec)
    rho = last.value.real / first.value.real
    if not 0 <= rho < 1:
        raise ConvergenceError(f"dyadic blocks do not decay (ratio {rho:.4f}); raise the cutoff")
    extra = last.value.real * rho / (1.0 - rho)
    logger.debug("geometric tail: ratio %.4f, tail %.4e", rho, extra)
    return head + first + last, CertifiedValue(extra, extra)


def psi_norm_squared(model, r, spec=None):
    """(body over [1, T], tail beyond T) for ||psi||_r^2."""
    model.check_r(r)
    spec = spec or QuadratureSpec()
    T = spec.cutoff
    strategy = spec.tail_cutoff_strategy
    if strategy == "bound-driven" and not model.unit_coefficients:
        logger.warning("no tail envelope for model %r; using geometric extrapolation", model.name)
        strategy = "geometric"
    if strategy == "geometric":
        return _geometric_square(model, r, spec, T)
    T = float(math.floor(T))
    body = _square_block(model, r, 1, T, spec)
    return body, zeta_square_tail(model.test_sigma1, r, T)


def psi_norm_r(model, r, spec=None):
    """||psi||_r with a certified tail; checked against C(r, sigma1) for zeta."""
    body, tail = psi_norm_squared(model, r, spec)
    squared = body + tail
    if model.unit_coefficients:
        bound = zeta_psi_norm_bound(r, model.test_sigma1)
        if squared.lower > bound.upper ** 2:
            raise ConvergenceError(
                f"||psi||_r^2 = {squared.value.real:.6g} exceeds the closed-form bound "
                f"{bound.value.real ** 2:.6g}"
            )
    return CertifiedValue(squared.value.real, squared.err).sqrt()


def psi_norm_full(model, r, spec=None):
    """||psi|| in L^2((0, inf), du/u^(1+2r)) = sqrt(||psi_1||^2 + ||psi||_r^2)."""
    inner = psi1_norm(model, r)
    outer = psi_norm_r(model, r, spec)
    return (inner * inner + outer * outer).sqrt()


def zeta_mellin_tail(sigma1, s, T):
    """int_T^inf psi(u) u^(-1-s) du for zeta, Re s > 0, T >= PSI_ASYMPTOTIC_FROM.

    With a = sigma1 - 1 - s and G the periodic antiderivative of
    zeta(sigma1, .) vanishing at the integers, of mean
    c_G = -zeta(sigma1 - 1) / (1 - sigma1), two integrations by parts leave
    T^a (G(theta_T) - c_G) in closed form and an |a|^2 T^(Re a - 1) remainder.
    """
    s = complex(s)
    if not s.real > 0:
        raise DomainError(f"the Mellin tail needs Re s > 0, got {s}")
    T = float(T)
    theta_T = T - math.ceil(T) + 1.0
    a = sigma1 - 1.0 - s
    m2 = hurwitz_mean_square(sigma1)
    s_max = smooth_part_bound(sigma1, T)
    zeta_shift = zeta(sigma1 - 1.0).value.real
    c_G = -zeta_shift / (1.0 - sigma1)
    G_T = (float(hurwitz_zeta_array(sigma1 - 1.0, np.array([theta_T]))[0]) - zeta_shift) / (1.0 - sigma1)
    Ta = T ** a
    value = T ** (-s) / (2.0 * s) + Ta * (G_T - c_G)
    sup_H = math.sqrt(m2.upper) + abs(c_G)
    err = (
        s_max * T ** (-s.real) / s.real
        + abs(a) * sup_H * T ** (a.real - 1.0) * (1.0 + abs(a - 1.0) / abs(a.real - 1.0))
        + 64 * np.finfo(float).eps * abs(Ta) * (abs(G_T) + abs(c_G) + 1.0)
    )
    return CertifiedValue(value, err)


def psi_mellin_integral(model, s, spec=None):
    """int_1^inf psi(u) u^(-1-s) du, the part of H(s) carried by u > 1."""
    if not model.unit_coefficients:
        raise UnsupportedModelError("Mellin tails are only available for zeta")
    s = complex(s)
    if not s.real > model.r0:
        raise DomainError(f"need Re s > r0 = {model.r0}, got {s}")
    spec = spec or QuadratureSpec()
    T = float(math.floor(spec.cutoff))

    def f(t, d, lo, hi):
        return psi_array(model, t, theta=d) * np.exp(-(s + 1.0) * np.log(t))

    body = integrate(f, 1.0, T, spec=spec, breakpoints=np.arange(2, T), singular="left",
                     power=_power(model.test_sigma1), with_offset=True)
    return body + zeta_mellin_tail(model.test_sigma1, s, T)


def psi_mellin(model, s, spec=None):
    """int_0^inf psi(1/t) t^(s-1) dt, which equals -L(s) phi_hat(s) on r0 < Re s < 1.

    The (0, 1] part in u is closed form: sum_k p_k (-1)^k k! / (1-s)^(k+1).
    """
    s = complex(s)
    if not s.real < 1:
        raise DomainError(f"need Re s < 1, got {s}")
    P = poly_P(model)
    head = sum(p * (-1) ** k * factorial(k) / (1 - s) ** (k + 1) for k, p in enumerate(P.p))
    return psi_mellin_integral(model, s, spec) + head


def f_A_mellin(model, A, r, s, spec=None):
    """int_0^inf f_{A,r}(t) t^(s-1) dt by quadrature in t, w = s + r - sigma0.

    [eps, max alpha] is integrated with every alpha_j / k as a right-singular
    breakpoint, eps = min alpha / MELLIN_F_CUTOFF. Below eps each term is
    c_j alpha_j^w times the Mellin tail of psi beyond alpha_j / eps. Above
    max alpha every u = alpha_j / t is <= 1, where psi(u) = u P(log u) and
    int_0^U u^(-w) (log u)^k du = U^(1-w) sum_i C(k,i) (log U)^(k-i) (-1)^i i! / (1-w)^(i+1).
    """
    if not model.unit_coefficients:
        raise UnsupportedModelError("Mellin tails are only available for zeta")
    model.check_r(r)
    w = complex(s) + r - model.sigma0
    if not model.r0 < w.real < 1:
        raise DomainError(f"need r0 < Re(s + r - sigma0) < 1, got {w}")
    spec = spec or QuadratureSpec()
    sigma1 = model.test_sigma1
    alpha = np.asarray(A.alpha, dtype=float)
    c = np.asarray(A.c, dtype=complex)
    top = float(alpha.max())
    eps = float(alpha.min()) / MELLIN_F_CUTOFF
    breaks = np.unique(np.concatenate([a / np.arange(1, math.floor(a / eps) + 1) for a in alpha]))
    breaks = breaks[(breaks > eps) & (breaks < top)]

    def f(t, d, lo, hi):
        total = np.zeros(t.shape, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            for a, cj in zip(alpha, c):
                u = a / t
                ratio = a / hi
                k = np.rint(ratio)
                edge = (k >= 1) & (np.abs(ratio - k) <= 1e-9 * k)
                theta = np.where(edge, k * d / t, u - np.ceil(u) + 1.0)
                total += cj * psi_array(model, u, theta=theta)
        return total * np.exp((w - 1.0) * np.log(t))

    body = integrate(f, eps, top, spec=spec, breakpoints=breaks, singular="right",
                     power=_power(sigma1), with_offset=True)
    p = poly_P(model).p
    for a, cj in zip(alpha, c):
        scale = cj * np.exp(w * math.log(a))
        body = body + zeta_mellin_tail(sigma1, w, a / eps) * scale
        U = a / top
        L = math.log(U)
        head = sum(
            pk * sum(comb(k, i) * L ** (k - i) * (-1) ** i * factorial(i) / (1 - w) ** (i + 1)
                     for i in range(k + 1))
            for k, pk in enumerate(p)
        )
        body = body + scale * np.exp((1 - w) * L) * head
    logger.debug("f_A Mellin transform at s=%s: %d breakpoints", s, len(breaks))
    return body


def f_A_mellin_check(model, A, r, s, spec=None):
    """|f_A_mellin - (-L(w) phi_hat(w) g_A(w))| at w = s + r - sigma0."""
    w = complex(s) + r - model.sigma0
    got = f_A_mellin(model, A, r, s, spec)
    want = -(CertifiedValue.lift(model.L_eval(w)) * model.phi_hat_eval(w)).value * g_A(A, w)
    return abs(got.value - want)
