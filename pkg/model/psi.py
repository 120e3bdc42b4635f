"""psi(u) = res(L(s) phi_hat(s) u^s, s=1) - sum_{n<u} a_n phi(n/u).

For u <= 1 the sum is empty and psi(u) = psi_1(u) = u P(log u). Above 1
the finite sum is written with u = N + theta, N = ceil(u) - 1, so that
phi(n/u) = ((theta + j)/u)^(-sigma1) for n = N - j. Callers integrating
near an integer pass theta directly to avoid the cancellation in u - N.
"""
import numpy as np

from config import HURWITZ_SHIFT, PSI_ASYMPTOTIC_FROM
from errors import DomainError, PoleError, UnsupportedModelError
from linalg import PolyP
from specfun import CertifiedValue, hurwitz_tail_series, hurwitz_zeta_array

EPS = np.finfo(float).eps


def poly_P(model):
    if model.m_L < 1:
        raise DomainError(f"model {model.name!r} has no pole at s = 1")
    if model.laurent is None:
        raise UnsupportedModelError(f"model {model.name!r} carries no Laurent data at s = 1")
    return PolyP(model.laurent)


def psi1_array(model, u):
    u = np.asarray(u, dtype=float)
    return u * poly_P(model)(np.log(u))


def _coefficient_table(model, n_max):
    return np.array([complex(model.coefficients(n)) for n in range(1, n_max + 1)])


def _split(u, theta):
    if theta is None:
        n = np.ceil(u) - 1.0
        return n, u - n
    theta = np.asarray(theta, dtype=float)
    return np.rint(u - theta), theta


def psi_array(model, u, theta=None):
    """psi over an array of u > 0; theta (same shape) is u - ceil(u) + 1 if known."""
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0):
        raise DomainError("psi needs u > 0")
    out = psi1_array(model, u).astype(complex)
    big = u > 1
    if not np.any(big):
        return out
    ub = u[big]
    n, th = _split(ub, None if theta is None else np.broadcast_to(theta, u.shape)[big])
    sigma1 = model.test_sigma1
    vals = out[big]

    near = np.ones(len(ub), dtype=bool)
    if model.unit_coefficients:
        far = ub >= PSI_ASYMPTOTIC_FROM
        if np.any(far):
            t = ub[far]
            vals[far] = (0.5 - t ** sigma1 * hurwitz_zeta_array(sigma1, th[far])
                         + hurwitz_tail_series(sigma1, t))
        near = ~far

    if np.any(near):
        un, tn = ub[near], th[near]
        nn = n[near].astype(int)
        table = _coefficient_table(model, int(nn.max()))
        acc = np.zeros(len(un), dtype=complex)
        for j in range(int(nn.max())):
            active = nn > j
            k = nn[active] - j
            acc[active] += table[k - 1] * ((tn[active] + j) / un[active]) ** (-sigma1)
        vals[near] = vals[near] - acc
    out[big] = vals
    return out


def psi(model, u):
    """psi(u) as a CertifiedValue with a rounding bound."""
    u = float(u)
    if not u > 0:
        raise DomainError(f"psi needs u > 0, got {u}")
    value = complex(psi_array(model, np.array([u]))[0])
    scale = abs(complex(psi1_array(model, np.array([u]))[0]))
    if u > 1:
        n, theta = _split(np.array([u]), None)
        sigma1 = model.test_sigma1
        terms = min(int(n[0]), HURWITZ_SHIFT) + 1
        scale += u ** max(sigma1, 0.0) * (float(theta[0]) ** min(-sigma1, 0.0) + terms)
    return CertifiedValue(value, 32 * EPS * max(scale, 1.0))


def H_eval(model, s):
    """H(s) = sum_k k! p_k / (s-1)^(k+1) - L(s) phi_hat(s), analytic on Re s > r0."""
    s = complex(s)
    if s == 1:
        raise PoleError("H is evaluated through its Laurent part, which has a pole at s = 1")
    P = poly_P(model)
    principal = 0j
    fact = 1.0
    for k, p in enumerate(P.p):
        if k:
            fact *= k
        principal += fact * p / (s - 1) ** (k + 1)
    return CertifiedValue(principal) - model.L_eval(s) * model.phi_hat_eval(s)
