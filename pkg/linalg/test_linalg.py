"""Pascal, triangular and Vandermonde systems."""
from fractions import Fraction
from math import comb, sqrt

import mpmath
import numpy as np
import pytest

from errors import DegenerateError, SizeLimitError
from linalg import (
    PascalMatrix, PolyP, abs_sum_bound, pascal_lower_bound, pascal_min_eigenvalue,
    pascal_min_eigenvector, pascal_quadratic_integral, pascal_quadratic_lower_bound, row_abs_sums,
    solve_triangular, solve_vandermonde, triangular_matrix, vandermonde_inverse_exact,
    vandermonde_matrix, xi_display, xi_proof, xi_report,
)
from specfun import QuadratureSpec, integrate


@pytest.mark.parametrize("m,want", [(1, 1.0), (2, (3 - sqrt(5)) / 2), (3, 4 - sqrt(15))])
def test_pascal_min_eigenvalue_known(m, want):
    mu = pascal_min_eigenvalue(m)
    assert abs(mu.value.real - want) <= max(mu.err, 1e-15)
    assert mu.err <= 1e-10


def test_pascal_min_eigenvalue_m12_against_mpmath():
    mpmath.mp.dps = 60
    try:
        a = mpmath.matrix([[comb(i + j, i) for j in range(12)] for i in range(12)])
        eig = mpmath.eigsy(a)[0]
        want = float(min(eig[i] for i in range(12)))
    finally:
        mpmath.mp.dps = 15
    mu = pascal_min_eigenvalue(12)
    assert abs(mu.value.real - want) <= mu.err + 1e-12 * want


@pytest.mark.parametrize("m", range(1, 13))
def test_pascal_lower_bound_and_palindrome(m):
    assert pascal_min_eigenvalue(m).value.real >= pascal_lower_bound(m)
    if m <= 8:
        assert PascalMatrix(m).is_palindromic()


@pytest.mark.parametrize("m", range(1, 11))
def test_pascal_determinant_and_minors(m):
    P = PascalMatrix(m)
    assert P.determinant() == 1
    assert all(d > 0 for d in P.leading_minors())
    np.testing.assert_array_equal(P.as_float(), P.as_float().T)


def test_pascal_size_limit():
    with pytest.raises(SizeLimitError):
        PascalMatrix(13)
    with pytest.raises(SizeLimitError):
        pascal_min_eigenvalue(13)


def test_pascal_characteristic_polynomial_m2():
    # det(X I - [[1,1],[1,2]]) = X^2 - 3X + 1
    assert PascalMatrix(2).characteristic_polynomial() == [1, -3, 1]


def test_quadratic_bound_equality_cases():
    lhs, rhs = pascal_quadratic_lower_bound([1.0], 1.0)
    assert lhs == pytest.approx(1.0) and rhs == pytest.approx(1.0)
    z = pascal_min_eigenvector(4)
    lhs, rhs = pascal_quadratic_lower_bound(z, 1.0)
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_quadratic_bound_random_against_quadrature(rng):
    for _ in range(100):
        m = int(rng.integers(1, 7))
        z = rng.normal(size=m) + 1j * rng.normal(size=m)
        a = float(rng.uniform(0.5, 4.0))
        lhs, rhs = pascal_quadratic_lower_bound(z, a)
        assert lhs >= rhs - 1e-10 * lhs
        direct = pascal_quadratic_integral(z, a)
        assert abs(direct.value.real - lhs) <= 1e-8 * lhs


def test_quadratic_integral_m3_by_hand():
    z = np.array([1.0, -2.0, 0.5j])
    a = 2.0

    def f(t):
        poly = z[0] + z[1] * t + z[2] * t ** 2 / 2
        return np.abs(poly) ** 2 * np.exp(-a * t)

    direct = integrate(f, 0.0, np.inf, spec=QuadratureSpec(rel_tol=1e-12, abs_tol=1e-14))
    assert pascal_quadratic_integral(z, a).value.real == pytest.approx(direct.value.real, rel=1e-10)


# --- triangular system ---

def test_triangular_m1():
    y, xi = solve_triangular(PolyP((2.0,)), [4.0])
    assert y[0] == pytest.approx(2.0)
    assert xi == pytest.approx(0.5)


def test_triangular_m2_hand_solved():
    y, xi = solve_triangular(PolyP((0.0, 1.0)), [1.0, 0.0])
    np.testing.assert_allclose(y, [1.0, 0.0], atol=1e-15)
    assert np.max(np.abs(y)) <= xi * 1.0 + 1e-10


def test_triangular_random_m4_matches_generic_solver(rng):
    P = PolyP(tuple(rng.normal(size=4) + 1j * rng.normal(size=4)))
    beta = rng.normal(size=4) + 1j * rng.normal(size=4)
    y, xi = solve_triangular(P, beta)
    generic = np.linalg.solve(triangular_matrix(P), beta)
    np.testing.assert_allclose(y, generic, rtol=1e-12, atol=1e-12)
    assert np.max(np.abs(y)) <= xi * np.sum(np.abs(beta)) * (1 + 1e-10)
    residual = triangular_matrix(P) @ y - beta
    assert np.max(np.abs(residual)) < 1e-12 * np.max(np.abs(beta)) * 10


def test_triangular_bound_random(rng):
    for _ in range(500):
        m = int(rng.integers(1, 7))
        p = rng.normal(size=m) + 1j * rng.normal(size=m)
        p[-1] += np.sign(p[-1].real) or 1.0
        beta = rng.normal(size=m) + 1j * rng.normal(size=m)
        y, xi = solve_triangular(PolyP(tuple(p)), beta)
        assert np.max(np.abs(y)) <= xi * np.sum(np.abs(beta)) + 1e-9


def test_triangular_degenerate():
    with pytest.raises(DegenerateError):
        PolyP((1.0, 0.0))
    with pytest.raises(DegenerateError):
        solve_triangular(PolyP((1.0, 1e-16)), [1.0, 1.0])


def test_xi_forms():
    P = PolyP((3.0, 1.0, 2.0))
    q = 1.5
    assert xi_proof(P) == pytest.approx((1 + q + 3 * q ** 2) / 2)
    assert xi_display(P) == pytest.approx((1 + q) / 2)
    assert xi_report(P)["discrepancy"]
    assert xi_report(PolyP((1.0,)))["discrepancy"] is False


# --- Vandermonde ---

@pytest.mark.parametrize("m", range(1, 9))
def test_vandermonde_exact_inverse(m):
    W = vandermonde_inverse_exact(m)
    for i in range(m):
        for k in range(m):
            entry = sum(W[i][j] * Fraction(k + 1) ** j for j in range(m))
            assert entry == (1 if i == k else 0)
    total = sum(abs(w) for row in W for w in row)
    assert total == abs_sum_bound(m)
    for i, s in enumerate(row_abs_sums(m), start=1):
        assert s == (m + 1) * comb(m, i) - comb(m + 1, i + 1)


def test_vandermonde_small_cases():
    x, bound = solve_vandermonde([5.0])
    assert x[0] == pytest.approx(5.0) and bound == pytest.approx(5.0)
    x, bound = solve_vandermonde([1.0, 1.0])
    np.testing.assert_allclose(x, [1.0, 0.0], atol=1e-15)
    assert bound == pytest.approx(5.0)


def test_vandermonde_round_trip(rng):
    for m in range(1, 11):
        for _ in range(50):
            y = rng.normal(size=m) + 1j * rng.normal(size=m)
            x, bound = solve_vandermonde(y)
            V = vandermonde_matrix(m)
            scale = np.abs(V) @ np.abs(x)
            assert np.all(np.abs(V @ x - y) <= 1e-10 * np.maximum(scale, 1.0))
            assert np.sum(np.abs(x)) <= bound + 1e-9


def test_vandermonde_size_limit():
    with pytest.raises(SizeLimitError):
        solve_vandermonde(np.ones(13))
