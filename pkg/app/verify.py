"""Numerical checks of the Pascal, quadratic-form, triangular, Vandermonde, Mellin and completion lemmas.

Every check yields one row {suite, check, value, residual, tol, passed};
run_suites stacks the rows of the requested suites into a DataFrame.
"""
import logging
import math
from fractions import Fraction

import numpy as np
import pandas as pd

from bounds import complete_to_admissible, completion_report
from config import (
    EXAMPLE_LAMBDA, EXAMPLE_R, EXAMPLE_SIGMA1, VERIFY_PASCAL_MAX_M, VERIFY_QUADRATIC_CASES,
    VERIFY_RANDOM_CASES, VERIFY_SEED, VERIFY_SUITES, VERIFY_TOL,
)
from errors import DomainError
from linalg import (
    PascalMatrix, PolyP, abs_sum_bound, pascal_lower_bound, pascal_min_eigenvalue, pascal_min_eigenvector,
    pascal_quadratic_integral, pascal_quadratic_lower_bound, solve_triangular, solve_vandermonde,
    vandermonde_inverse_exact, vandermonde_matrix,
)
from model import Sequence, f_A_array, f_A_mellin_check, mellin_u_check, psi_mellin, zeta_model
from specfun import phi_hat, zeta

logger = logging.getLogger(__name__)

KNOWN_PASCAL_MIN = {1: 1.0, 2: (3 - math.sqrt(5)) / 2, 3: 4 - math.sqrt(15)}
MELLIN_PSI_POINTS = (0.8, 0.9 + 1j)
MELLIN_U_POINTS = (0.2, 0.3 + 4j, -0.005 + 49j)
MELLIN_F_POINTS = (0.3, 0.4 + 1j)
MELLIN_F_SEQUENCES = (Sequence((1.0,), (1.0,)), Sequence((1.0, 0.5), (1.0, 2j)))


def _row(suite, check, residual, tol, value=None):
    residual = float(residual)
    return {
        "suite": suite,
        "check": check,
        "value": value,
        "residual": residual,
        "tol": tol,
        "passed": bool(residual <= tol),
    }


def pascal_checks(tol=None, rng=None):
    rows = []
    for m in range(1, VERIFY_PASCAL_MAX_M + 1):
        mu = pascal_min_eigenvalue(m)
        bound = pascal_lower_bound(m)
        rows.append(_row("pascal", f"mu_min >= 3/(4^m-1), m={m}", max(0.0, bound - mu.lower), 0.0,
                         value=mu.value.real))
        rows.append(_row("pascal", f"palindromic characteristic polynomial, m={m}",
                         0.0 if PascalMatrix(m).is_palindromic() else 1.0, 0.0))
        if m in KNOWN_PASCAL_MIN:
            err = abs(mu.value.real - KNOWN_PASCAL_MIN[m])
            rows.append(_row("pascal", f"mu_min closed form, m={m}", err, tol or max(mu.err, 1e-15),
                             value=mu.value.real))
    rows.extend(quadratic_form_checks(tol, rng))
    return rows


def quadratic_form_checks(tol=None, rng=None):
    """Random (z, a, m <= 6): lhs >= mu_m sum |z_j|^2 / a^(2j+1), lhs against quadrature, eigenvector equality."""
    tol = tol or VERIFY_TOL["quadratic"]
    rng = rng if rng is not None else np.random.default_rng(VERIFY_SEED)
    worst_bound = worst_quad = 0.0
    for _ in range(VERIFY_QUADRATIC_CASES):
        m = int(rng.integers(1, 7))
        z = rng.normal(size=m) + 1j * rng.normal(size=m)
        a = float(rng.uniform(0.5, 4.0))
        lhs, rhs = pascal_quadratic_lower_bound(z, a)
        worst_bound = max(worst_bound, (rhs - lhs) / lhs)
        direct = pascal_quadratic_integral(z, a)
        worst_quad = max(worst_quad, abs(direct.value.real - lhs) / lhs)
    worst_eq = 0.0
    for m in range(1, 7):
        lhs, rhs = pascal_quadratic_lower_bound(pascal_min_eigenvector(m), 1.0)
        worst_eq = max(worst_eq, abs(lhs - rhs) / lhs)
    return [
        _row("pascal", "random quadratic forms: lhs >= rhs", max(0.0, worst_bound), VERIFY_TOL["solve"]),
        _row("pascal", "random quadratic forms: lhs matches quadrature", worst_quad, tol),
        _row("pascal", "equality at the mu_m eigenvector, m <= 6", worst_eq, tol),
    ]


def vandermonde_checks(tol=None, rng=None):
    tol = tol or VERIFY_TOL["solve"]
    rng = rng if rng is not None else np.random.default_rng(VERIFY_SEED)
    rows = []
    for m in range(1, VERIFY_PASCAL_MAX_M + 1):
        total = sum(abs(w) for row in vandermonde_inverse_exact(m) for w in row)
        want = abs_sum_bound(m)
        rows.append(_row("vandermonde", f"sum |W_ik| = (m-1)2^m+1, m={m}",
                         abs(total - Fraction(want)), 0.0, value=float(total)))
    worst_solve = worst_bound = 0.0
    for _ in range(VERIFY_RANDOM_CASES):
        m = int(rng.integers(1, 11))
        y = rng.normal(size=m) + 1j * rng.normal(size=m)
        x, bound = solve_vandermonde(y)
        V = vandermonde_matrix(m)
        scale = np.maximum(np.abs(V) @ np.abs(x), 1.0)
        worst_solve = max(worst_solve, float(np.max(np.abs(V @ x - y) / scale)))
        worst_bound = max(worst_bound, (float(np.sum(np.abs(x))) - bound) / max(1.0, bound))
    rows.append(_row("vandermonde", "random solves: relative residual", worst_solve, tol))
    rows.append(_row("vandermonde", "random solves: sum |x| <= ((m-1)2^m+1) max|y|", max(0.0, worst_bound), tol))
    return rows


def triangular_checks(tol=None, rng=None):
    tol = tol or VERIFY_TOL["solve"]
    rng = rng if rng is not None else np.random.default_rng(VERIFY_SEED)
    worst = 0.0
    for _ in range(VERIFY_RANDOM_CASES):
        m = int(rng.integers(1, 7))
        p = rng.normal(size=m) + 1j * rng.normal(size=m)
        p[-1] += np.sign(p[-1].real) or 1.0
        beta = rng.normal(size=m) + 1j * rng.normal(size=m)
        y, xi = solve_triangular(PolyP(tuple(p)), beta)
        bound = xi * float(np.sum(np.abs(beta)))
        worst = max(worst, (float(np.max(np.abs(y))) - bound) / max(1.0, bound))
    return [_row("triangular", "random systems: max|y| <= xi(P) sum|beta|", max(0.0, worst), tol)]


def mellin_checks(tol=None, rng=None):
    model = zeta_model(EXAMPLE_SIGMA1)
    rows = []
    psi_tol = tol or VERIFY_TOL["mellin_psi"]
    for s in MELLIN_PSI_POINTS:
        got = psi_mellin(model, s)
        want = -(zeta(s) * phi_hat(s, EXAMPLE_SIGMA1)).value
        rows.append(_row("mellin", f"Mellin transform of psi(1/t) at s={s}", abs(got.value - want), psi_tol,
                         value=abs(got.value)))
    f_tol = tol or VERIFY_TOL["mellin_f"]
    for A in MELLIN_F_SEQUENCES:
        for s in MELLIN_F_POINTS:
            rows.append(_row("mellin", f"Mellin transform of f_(A,r) at s={s}, alpha={A.alpha}",
                             f_A_mellin_check(model, A, EXAMPLE_R, s), f_tol))
    u_tol = tol or VERIFY_TOL["mellin_u"]
    for s in MELLIN_U_POINTS:
        rows.append(_row("mellin", f"Mellin transform of u_(r,lambda) at s={s}",
                         mellin_u_check(model, EXAMPLE_R, EXAMPLE_LAMBDA, s), u_tol))
    return rows


def completion_checks(tol=None, rng=None):
    tol = tol or VERIFY_TOL["solve"]
    rng = rng if rng is not None else np.random.default_rng(VERIFY_SEED)
    worst_moment = worst_bound = 0.0
    for _ in range(VERIFY_RANDOM_CASES):
        m = int(rng.integers(1, 5))
        n = int(rng.integers(1, 6))
        A = Sequence(tuple(rng.uniform(0.2, 1.0, n)), tuple(rng.normal(size=n) + 1j * rng.normal(size=n)))
        scale = max(1.0, float(np.sum(np.abs(A.c_array))))
        report = completion_report(A, m)
        worst_moment = max(worst_moment, report["max_residual_moment"] / scale)
        bound = report["sum_abs_c_alpha_bound"]
        worst_bound = max(worst_bound, (report["sum_abs_c_alpha"] - bound) / max(1.0, bound))
    rows = [
        _row("completion", "moments of A + A' vanish", worst_moment, tol),
        _row("completion", "sum |c' alpha'| <= ((m-1)2^m+1) max|y|", max(0.0, worst_bound), tol),
    ]
    model = zeta_model(EXAMPLE_SIGMA1)
    A = Sequence((0.9, 0.35, 0.6), (1.0, -0.4, 2.5))
    combined = A.concat(complete_to_admissible(A, model.m_L))
    vals = f_A_array(model, combined, EXAMPLE_R, np.array([1.5, 3.0, 10.0]))
    scale = float(np.sum(np.abs(combined.c_array)))
    rows.append(_row("completion", "f_(A+A') vanishes for t > 1", float(np.max(np.abs(vals))) / scale, tol))
    return rows


SUITES = {
    "pascal": pascal_checks,
    "vandermonde": vandermonde_checks,
    "triangular": triangular_checks,
    "mellin": mellin_checks,
    "completion": completion_checks,
}


def run_suites(names=("all",), tol=None, seed=VERIFY_SEED):
    """Run the named suites ("all" expands to every suite) and return one row per check."""
    names = list(VERIFY_SUITES) if "all" in names else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s) {unknown}; choose from {VERIFY_SUITES} or 'all'")
    rng = np.random.default_rng(seed)
    rows = []
    for name in names:
        suite_rows = SUITES[name](tol=tol, rng=rng)
        failed = sum(not row["passed"] for row in suite_rows)
        logger.info("suite %s: %d checks, %d failed", name, len(suite_rows), failed)
        rows.extend(suite_rows)
    return pd.DataFrame(rows)


def summarize(df):
    """JSON-ready summary: per-suite counts, worst residual, and the failing checks."""
    suites = {}
    for name, group in df.groupby("suite", sort=False):
        suites[name] = {
            "checks": int(len(group)),
            "failed": int((~group["passed"]).sum()),
            "max_residual": float(group["residual"].max()),
        }
    failures = df.loc[~df["passed"], ["suite", "check", "residual", "tol"]].to_dict("records")
    return {"passed": bool(df["passed"].all()), "suites": suites, "failures": failures}
