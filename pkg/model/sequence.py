"""Finite sequences A = (alpha, c) and the functions f_{A,r}, g_A built from them."""
from dataclasses import dataclass

import numpy as np

from config import ADMISSIBLE_TOL
from errors import DomainError
from model.psi import psi_array
from specfun import CertifiedValue

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Sequence:
    alpha: tuple
    c: tuple

    def __post_init__(self):
        alpha = tuple(float(a) for a in np.atleast_1d(self.alpha))
        c = tuple(complex(x) for x in np.atleast_1d(self.c))
        if not alpha:
            raise DomainError("a sequence needs at least one term")
        if len(alpha) != len(c):
            raise DomainError(f"alpha has {len(alpha)} entries but c has {len(c)}")
        if any(not 0 < a <= 1 for a in alpha):
            raise DomainError("every alpha_j must lie in (0, 1]")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "c", c)

    def __len__(self):
        return len(self.alpha)

    @property
    def alpha_array(self):
        return np.array(self.alpha)

    @property
    def c_array(self):
        return np.array(self.c)

    def concat(self, other):
        return Sequence(self.alpha + other.alpha, self.c + other.c)

    def weighted_l1(self, r):
        """sum |c_j| alpha_j^r."""
        return float(np.sum(np.abs(self.c_array) * self.alpha_array ** r))

    def to_dict(self):
        return {
            "alpha": list(self.alpha),
            "c": [{"re": x.real, "im": x.imag} for x in self.c],
        }


@dataclass(frozen=True)
class AdmissibilityReport:
    moments: tuple
    is_admissible: bool
    tol: float

    @property
    def max_moment(self):
        return max(abs(x) for x in self.moments)


def moments(A, m):
    """sum_j c_j alpha_j (log alpha_j)^k for k = 0..m-1."""
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    la = np.log(A.alpha_array)
    k = np.arange(m)[:, None]
    return (A.c_array * A.alpha_array)[None, :] * la[None, :] ** k


def admissibility(A, m, tol=ADMISSIBLE_TOL):
    mom = moments(A, m).sum(axis=1)
    ok = bool(np.max(np.abs(mom)) < tol)
    return AdmissibilityReport(tuple(complex(x) for x in mom), ok, float(tol))


def g_A(A, s):
    s = complex(s)
    return complex(np.sum(A.c_array * np.exp(s * np.log(A.alpha_array))))


def f_A_array(model, A, r, t):
    """f_{A,r}(t) = t^(r - sigma0) sum_j c_j psi(alpha_j / t) over an array of t > 0."""
    model.check_r(r)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError("f_A needs t > 0")
    total = np.zeros(t.shape, dtype=complex)
    for a, c in zip(A.alpha, A.c):
        if c != 0:
            total += c * psi_array(model, a / t)
    return t ** (r - model.sigma0) * total


def f_A(model, A, r, t):
    t = float(t)
    value = complex(f_A_array(model, A, r, np.array([t]))[0])
    scale = t ** (r - model.sigma0) * sum(
        abs(c) * max(1.0, abs(complex(psi_array(model, np.array([a / t]))[0])))
        for a, c in zip(A.alpha, A.c)
    )
    return CertifiedValue(value, 64 * EPS * scale)
