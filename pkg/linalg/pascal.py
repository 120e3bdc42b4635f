"""Symmetric Pascal matrices A_ij = C(i+j, i) and their extreme eigenvalues."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np
from scipy.linalg import eigh, pascal

from config import MAX_MATRIX_SIZE, QUAD_FORM_MIN_A
from errors import DomainError, SizeLimitError
from specfun.certified import CertifiedValue, QuadratureSpec
from specfun.quadrature import integrate

EPS = np.finfo(float).eps


def check_size(m):
    if int(m) != m or m < 1:
        raise DomainError(f"matrix size must be a positive integer, got {m!r}")
    if m > MAX_MATRIX_SIZE:
        raise SizeLimitError(f"m = {m} exceeds the supported size {MAX_MATRIX_SIZE}")


def exact_determinant(rows):
    """Determinant of an integer matrix by Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return det


@dataclass(frozen=True)
class PascalMatrix:
    m: int

    def __post_init__(self):
        check_size(self.m)

    @property
    def entries(self):
        return pascal(self.m, kind="symmetric", exact=True)

    def as_float(self):
        return np.asarray(pascal(self.m, kind="symmetric"), dtype=float)

    def exact_rows(self):
        return [[comb(i + j, i) for j in range(self.m)] for i in range(self.m)]

    def determinant(self):
        return exact_determinant(self.exact_rows())

    def leading_minors(self):
        rows = self.exact_rows()
        return [exact_determinant([r[:k] for r in rows[:k]]) for k in range(1, self.m + 1)]

    def characteristic_polynomial(self):
        """Integer coefficients c_0..c_m of det(X I - A), c_m = 1 (Faddeev-LeVerrier)."""
        n = self.m
        a = [[Fraction(x) for x in row] for row in self.exact_rows()]
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
            c = -sum(am[i][i] for i in range(n)) / k
            coeffs[n - k] = c
            mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        return [int(c) for c in coeffs]

    def is_palindromic(self):
        """chi(X) = +/- X^m chi(1/X): coefficients equal their reverse up to sign."""
        c = self.characteristic_polynomial()
        rev = c[::-1]
        return c == rev or c == [-x for x in rev]


def pascal_eigenvalues(m):
    check_size(m)
    return eigh(PascalMatrix(m).as_float(), eigvals_only=True)


def pascal_min_eigenvalue(m):
    """Smallest eigenvalue mu_m of the m x m Pascal matrix, as 1 / mu_max.

    The characteristic polynomial is palindromic, so mu_min = 1 / mu_max and
    the reciprocal of the well-conditioned largest eigenvalue keeps full
    relative accuracy where a direct eigh loses it for m near 12.
    """
    eig = pascal_eigenvalues(m)
    mu_max = float(eig[-1])
    mu = 1.0 / mu_max
    err = 8 * m * EPS * mu
    return CertifiedValue(mu, err)


def pascal_lower_bound(m):
    """Elementary lower bound 3 / (4^m - 1) for mu_m."""
    check_size(m)
    return 3.0 / (4 ** m - 1)


def pascal_min_eigenvector(m):
    check_size(m)
    _, vecs = eigh(PascalMatrix(m).as_float())
    return vecs[:, 0]


def pascal_quadratic_lower_bound(z, a):
    """Closed form of both sides of int_0^inf |sum z_j t^j/j!|^2 e^(-at) dt >= mu_m sum |z_j|^2 / a^(2j+1).

    lhs = z* S z with S_ij = C(i+j, i) / a^(i+j+1); rhs = mu_m sum |z_j|^2 / a^(2j+1).
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    m = len(z)
    check_size(m)
    if not a >= QUAD_FORM_MIN_A:
        raise DomainError(f"a must be >= {QUAD_FORM_MIN_A}, got {a}")
    idx = np.arange(m)
    s = PascalMatrix(m).as_float() / a ** (idx[:, None] + idx[None, :] + 1)
    lhs = float(np.real(np.conj(z) @ s @ z))
    mu = pascal_min_eigenvalue(m).value.real
    rhs = mu * float(np.sum(np.abs(z) ** 2 / a ** (2 * idx + 1)))
    return lhs, rhs


def pascal_quadratic_integral(z, a, spec=None):
    """int_0^inf |sum_j z_j t^j / j!|^2 e^(-a t) dt by adaptive quadrature."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    m = len(z)
    check_size(m)
    if not a >= QUAD_FORM_MIN_A:
        raise DomainError(f"a must be >= {QUAD_FORM_MIN_A}, got {a}")
    coeffs = np.array([zj / factorial(j) for j, zj in enumerate(z)])[::-1]

    def f(t):
        return np.abs(np.polyval(coeffs, t)) ** 2 * np.exp(-a * t)

    spec = spec or QuadratureSpec(rel_tol=1e-12, abs_tol=1e-15)
    return integrate(f, 0.0, np.inf, spec=spec, breakpoints=np.arange(1, 4 * m + 4) / a)
