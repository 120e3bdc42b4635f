"""Completion of a finite sequence A to an m-admissible A + A'.

A' uses the nodes alpha'_j = e^(-j), j = 1..m, so that log alpha'_j = -j and
the moment conditions become a Vandermonde system on the nodes 1..m.
"""
import logging
import math

import numpy as np

from errors import DomainError
from linalg import abs_sum_bound, solve_vandermonde
from model import Sequence, moments

logger = logging.getLogger(__name__)


def completion_nodes(m):
    return np.exp(-np.arange(1, m + 1, dtype=float))


def complete_to_admissible(A, m):
    """A' = (e^(-j), c'_j) with sum_j c'_j alpha'_j (log alpha'_j)^k = -y_k.

    y_k are the moments of A. Writing x_j = c'_j alpha'_j the system is
    sum_j j^k x_j = (-1)^(k+1) y_k.
    """
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    m = int(m)
    y = moments(A, m).sum(axis=1)
    signs = (-1.0) ** (np.arange(m) + 1)
    x, _ = solve_vandermonde(signs * y)
    nodes = completion_nodes(m)
    c = x / nodes
    logger.debug("completion of %d terms to %d-admissible: max|y|=%.3e", len(A), m,
                 float(np.max(np.abs(y))))
    return Sequence(tuple(nodes), tuple(c))


def completion_bound(A, m):
    """((m-1) 2^m + 1) max_k |y_k|, bounding sum_j |c'_j alpha'_j|."""
    y = moments(A, m).sum(axis=1)
    return abs_sum_bound(m) * float(np.max(np.abs(y)))


def completion_report(A, m):
    """Residual moments of A + A' and both coefficient bounds."""
    extra = complete_to_admissible(A, m)
    combined = A.concat(extra)
    residual = moments(combined, m).sum(axis=1)
    bound = completion_bound(A, m)
    weighted = float(np.sum(np.abs(extra.c_array * extra.alpha_array)))
    plain = float(np.sum(np.abs(extra.c_array)))
    return {
        "completion": extra.to_dict(),
        "max_residual_moment": float(np.max(np.abs(residual))),
        "sum_abs_c_alpha": weighted,
        "sum_abs_c_alpha_bound": bound,
        "sum_abs_c": plain,
        "sum_abs_c_bound": math.e ** m * bound,
    }
