"""Explicit inverse of the Vandermonde matrix V_m = (j^(i-1)) on nodes 1..m.

w_ij = (-1)^(m-j) e_{m-j}(1, .., i^, .., m) / prod_{k != i} (i - k), built
exactly with Fractions from elementary symmetric polynomials.
"""
from fractions import Fraction
from functools import lru_cache

import numpy as np

from errors import DomainError
from linalg.pascal import check_size


def elementary_symmetric(values):
    """[e_0, e_1, ..., e_n] of the given integers."""
    e = [1] + [0] * len(values)
    for v in values:
        for k in range(len(values), 0, -1):
            e[k] += v * e[k - 1]
    return e


@lru_cache(maxsize=None)
def vandermonde_inverse_exact(m):
    """W_m as a tuple of rows of Fractions, rows i = 1..m, columns j = 1..m."""
    check_size(m)
    rows = []
    for i in range(1, m + 1):
        others = [k for k in range(1, m + 1) if k != i]
        e = elementary_symmetric(others)
        denom = 1
        for k in others:
            denom *= i - k
        rows.append(tuple(Fraction((-1) ** (m - j) * e[m - j], denom) for j in range(1, m + 1)))
    return tuple(rows)


def vandermonde_matrix(m):
    check_size(m)
    i = np.arange(m)[:, None]
    j = np.arange(1, m + 1)[None, :]
    return j.astype(float) ** i


def abs_sum_bound(m):
    return (m - 1) * 2 ** m + 1


def row_abs_sums(m):
    return [sum(abs(w) for w in row) for row in vandermonde_inverse_exact(m)]


def solve_vandermonde(y):
    """Solve sum_j j^(i-1) x_j = y_i; returns (x, ((m-1)2^m+1) max|y|)."""
    y = np.atleast_1d(np.asarray(y, dtype=complex))
    m = len(y)
    if m < 1:
        raise DomainError("empty right-hand side")
    check_size(m)
    W = np.array([[float(w) for w in row] for row in vandermonde_inverse_exact(m)])
    x = W @ y
    return x, abs_sum_bound(m) * float(np.max(np.abs(y)))
