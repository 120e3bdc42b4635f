"""The residue polynomial P and its lower-triangular binomial system."""
from dataclasses import dataclass
from math import comb

import numpy as np
from scipy.linalg import solve_triangular as _solve_lower

from config import DEGENERATE_RATIO
from errors import DegenerateError, DomainError
from linalg.pascal import check_size


@dataclass(frozen=True)
class PolyP:
    """Coefficients (p_0, ..., p_{m-1}) with p_{m-1} != 0."""
    p: tuple

    def __post_init__(self):
        coeffs = tuple(complex(x) for x in np.atleast_1d(self.p))
        if not coeffs:
            raise DomainError("PolyP needs at least one coefficient")
        if coeffs[-1] == 0:
            raise DegenerateError("leading coefficient p_{m-1} must be nonzero")
        object.__setattr__(self, "p", coeffs)

    @property
    def m(self):
        return len(self.p)

    @property
    def sup_norm(self):
        return max(abs(x) for x in self.p)

    def __call__(self, x):
        """P(x) = sum p_k x^k."""
        return np.polynomial.polynomial.polyval(x, np.array(self.p))


def triangular_matrix(P):
    """M_{k,i} = C(i+m-1-k, i) p_{i+m-1-k} for i <= k."""
    m = P.m
    M = np.zeros((m, m), dtype=complex)
    for k in range(m):
        for i in range(k + 1):
            j = i + m - 1 - k
            M[k, i] = comb(j, i) * P.p[j]
    return M


def xi_proof(P):
    """(1/|p_{m-1}|)(1 + sum_{j=1}^{m-1} m^{j-1} q^j), q = ||P||_inf / |p_{m-1}|."""
    lead = abs(P.p[-1])
    if P.m == 1:
        return 1.0 / lead
    q = P.sup_norm / lead
    m = P.m
    return (1.0 + sum(m ** (j - 1) * q ** j for j in range(1, m))) / lead


def xi_display(P):
    """Closed form (1/|p_{m-1}|)(1 + q ((mq)^{m-2} - 1)/(mq - 1)); limit m - 2 at mq = 1."""
    lead = abs(P.p[-1])
    if P.m == 1:
        return 1.0 / lead
    q = P.sup_norm / lead
    m = P.m
    x = m * q
    ratio = (m - 2.0) if abs(x - 1.0) < 1e-12 else (x ** (m - 2) - 1.0) / (x - 1.0)
    return (1.0 + q * ratio) / lead


def xi_report(P):
    proof, display = xi_proof(P), xi_display(P)
    return {
        "xi": proof,
        "xi_display": display,
        "discrepancy": abs(proof - display) > 1e-12 * max(proof, display),
    }


def solve_triangular(P, beta):
    """Solve beta_k = sum_{i<=k} C(i+m-1-k, i) p_{i+m-1-k} y_i; returns (y, xi(P))."""
    if not isinstance(P, PolyP):
        P = PolyP(tuple(P))
    check_size(P.m)
    beta = np.atleast_1d(np.asarray(beta, dtype=complex))
    if len(beta) != P.m:
        raise DomainError(f"beta has length {len(beta)}, expected {P.m}")
    if abs(P.p[-1]) < DEGENERATE_RATIO * P.sup_norm:
        raise DegenerateError("|p_{m-1}| is negligible against ||P||_inf")
    y = _solve_lower(triangular_matrix(P), beta, lower=True)
    return y, xi_proof(P)
