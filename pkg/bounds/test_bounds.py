"""Comparison constants, admissible completion and Gram distance bounds."""
import math
from dataclasses import replace

import mpmath
import numpy as np
import pytest
from scipy.special import i0

import bounds.completion as completion_module
from bounds import (
    ComparisonFactor, E_of_r, Lambda_m_r, Target, complete_to_admissible, completion_bound,
    completion_report, distance_upper_bound, f_norm, geometric_grid, gram_matrix,
    sharp_distance_from_unconstrained, theta_psi_r,
)
from bounds.distance import _tail_gram
from errors import DegenerateError, DomainError, UnsupportedModelError
from linalg import abs_sum_bound
from model import (
    Sequence, admissibility, f_A_array, moments, psi_array, psi_norm_full,
    zeta_square_tail,
)
from specfun import QuadratureSpec, integrate

R = 0.49


# --- E, Lambda, theta ---

def test_E_limits_and_bessel_value():
    assert E_of_r(1 - 1e-12) == pytest.approx(math.sqrt(2), rel=1e-10)
    assert E_of_r(0.5) == pytest.approx(math.sqrt(2 * i0(2.0)), rel=1e-14)
    assert E_of_r(0.5) == pytest.approx(math.sqrt(2 * float(mpmath.besseli(0, 2))), rel=1e-14)


def test_E_nonincreasing():
    values = [E_of_r(r) for r in np.linspace(0.0, 0.999, 40)]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_E_domain():
    with pytest.raises(DomainError):
        E_of_r(1.0)
    with pytest.raises(DomainError):
        E_of_r(0.5, m=0)


def test_Lambda_examples():
    assert Lambda_m_r(1, 0.5, 1.0, 0.0) == pytest.approx(math.e)
    assert Lambda_m_r(2, 0.3, 1.0, 0.0) == pytest.approx(5 * math.e ** 2)
    assert Lambda_m_r(1, -0.5, 3.0, 4.0) == pytest.approx(math.e ** 1.5 * 5)
    with pytest.raises(DomainError):
        Lambda_m_r(1, 0.5, -1.0, 0.0)


def test_theta_paper_bound_components(zeta04):
    cf = theta_psi_r(zeta04, R, norm_source="paper_bound")
    assert cf.theta > 0 and cf.factor > 1
    assert cf.factor == 1 + cf.theta * math.sqrt(1 - R)
    assert cf.components["xi"] == pytest.approx(0.6)
    assert cf.components["mu_m"] == pytest.approx(1.0)
    assert cf.to_dict()["norm_source"] == "paper_bound"


def test_theta_nonincreasing_and_vanishing_weight(zeta04):
    rs = [0.5, 0.7, 0.9, 0.99, 0.999]
    cfs = [theta_psi_r(zeta04, r, norm_source="paper_bound") for r in rs]
    thetas = [cf.theta for cf in cfs]
    assert all(a >= b for a, b in zip(thetas, thetas[1:]))
    weighted = [cf.theta * math.sqrt(1 - cf.r) for cf in cfs[2:]]
    assert weighted[0] > weighted[1] > weighted[2]


@pytest.mark.slow
def test_theta_quadrature_below_paper_bound(zeta04):
    sharp = theta_psi_r(zeta04, R)
    loose = theta_psi_r(zeta04, R, norm_source="paper_bound")
    assert sharp.theta <= loose.theta


def test_comparison_factor_validation(zeta04):
    with pytest.raises(DomainError):
        ComparisonFactor(r=0.5, theta=-1.0, factor=0.5)
    with pytest.raises(DomainError):
        theta_psi_r(zeta04, R, norm_source="guess")


# --- admissible completion ---

def test_completion_of_admissible_sequence_is_zero():
    A = Sequence((1.0, 0.5), (1.0, -2.0))
    assert admissibility(A, 1).is_admissible
    extra = complete_to_admissible(A, 1)
    np.testing.assert_allclose(extra.c_array, [0.0], atol=1e-15)


def test_completion_single_term():
    extra = complete_to_admissible(Sequence((1.0,), (1.0,)), 1)
    assert extra.alpha[0] == pytest.approx(math.exp(-1))
    assert extra.c[0] == pytest.approx(-math.e)


def test_completion_random_sequences(rng):
    for _ in range(200):
        m = int(rng.integers(1, 5))
        n = int(rng.integers(1, 6))
        A = Sequence(tuple(rng.uniform(0.2, 1.0, n)), tuple(rng.normal(size=n) + 1j * rng.normal(size=n)))
        y = moments(A, m).sum(axis=1)
        extra = complete_to_admissible(A, m)
        residual = moments(A.concat(extra), m).sum(axis=1)
        assert np.max(np.abs(residual)) <= 1e-10 * max(1.0, float(np.max(np.abs(y))))
        bound = completion_bound(A, m)
        assert np.sum(np.abs(extra.c_array * extra.alpha_array)) <= bound + 1e-9
        assert np.sum(np.abs(extra.c_array)) <= math.e ** m * bound + 1e-9


def test_completion_bound_uses_vandermonde_constant(monkeypatch):
    A = Sequence((0.9, 0.35), (1.0, -2.0 + 1j))
    for m in range(1, 5):
        y = np.max(np.abs(moments(A, m).sum(axis=1)))
        assert completion_bound(A, m) == pytest.approx(abs_sum_bound(m) * y, rel=1e-15)
    monkeypatch.setattr(completion_module, "abs_sum_bound", lambda m: 1)
    assert completion_bound(A, 3) == pytest.approx(np.max(np.abs(moments(A, 3).sum(axis=1))), rel=1e-15)


def test_completed_f_vanishes_beyond_one(zeta04):
    A = Sequence((0.9, 0.35, 0.6), (1.0, -0.4, 2.5))
    combined = A.concat(complete_to_admissible(A, zeta04.m_L))
    scale = float(np.sum(np.abs(combined.c_array)))
    vals = f_A_array(zeta04, combined, R, np.array([1.5, 3.0, 10.0]))
    assert np.max(np.abs(vals)) <= 1e-10 * scale


def test_completion_report_fields():
    report = completion_report(Sequence((1.0, 0.25), (1.0, 1.0)), 2)
    assert report["max_residual_moment"] < 1e-12
    assert report["sum_abs_c_alpha"] <= report["sum_abs_c_alpha_bound"]
    assert len(report["completion"]["alpha"]) == 2


# --- Gram systems and distances ---

def test_tail_gram_diagonal_matches_square_tail(zeta04):
    T, E = _tail_gram(zeta04, R, [1.0], 1 / 2000)
    ref = zeta_square_tail(0.4, R, 2000.0)
    assert abs(T[0, 0] - ref.value.real) < 1e-12
    assert E[0, 0] <= 4 * ref.err


@pytest.mark.slow
def test_tail_gram_correlation_against_quadrature(zeta04):
    nodes = [0.5, 1.0]
    near, near_err = _tail_gram(zeta04, R, nodes, 1 / 200)
    far, far_err = _tail_gram(zeta04, R, nodes, 1 / 1600)

    def f(y):
        return (psi_array(zeta04, y / 2) * psi_array(zeta04, y)).real * y ** (-2 * R - 1)

    body = integrate(f, 200.0, 1600.0, spec=QuadratureSpec(rel_tol=1e-10, abs_tol=1e-12),
                     breakpoints=np.arange(201, 1600), singular="left", power=5.0)
    diff = near[0, 1] - far[0, 1]
    assert abs(diff - body.value.real) <= near_err[0, 1] + far_err[0, 1] + body.err


def test_gram_matrix_hermitian_psd(zeta04):
    M, M_err = gram_matrix(zeta04, R, (1.0, 0.5, 0.25))
    np.testing.assert_allclose(M, M.conj().T, atol=1e-14)
    assert np.linalg.eigvalsh(M).min() >= -np.max(M_err)


def test_distance_zero_when_target_in_span(zeta04):
    A = Sequence((1.0,), (1.0,))
    value, c = distance_upper_bound(zeta04, R, Target.span(A), (1.0,))
    assert value < 1e-10
    assert c[0] == pytest.approx(1.0, abs=1e-10)


def test_distance_to_w_lambda_single_alpha(zeta04):
    lam = 0.3 + 2j
    result = distance_upper_bound(zeta04, R, Target.w_lambda(lam), (1.0,))
    assert result.value > 0
    assert result.estimate <= result.target_norm + 1e-12
    assert result.target_norm == pytest.approx(math.sqrt(1 / 0.6), rel=1e-12)
    assert result.to_dict()["target"]["kind"] == "w_lambda"


def test_distance_nested_grids(zeta04):
    target = Target.w_lambda(0.3 + 2j)
    coarse = distance_upper_bound(zeta04, R, target, (1.0, 0.5))
    fine = distance_upper_bound(zeta04, R, target, (1.0, 0.5, 0.25))
    assert fine.estimate ** 2 <= coarse.estimate ** 2 + fine.err + coarse.err + 1e-12


def test_distance_grid_permutation(zeta04):
    target = Target.u_r_lambda(0.3 + 2j)
    a = distance_upper_bound(zeta04, R, target, (0.5, 1.0, 0.25))
    b = distance_upper_bound(zeta04, R, target, (1.0, 0.25, 0.5))
    assert a.value == pytest.approx(b.value, rel=1e-9, abs=1e-12)
    np.testing.assert_allclose(np.array(a.c)[[1, 2, 0]], b.c, rtol=1e-6, atol=1e-9 * np.max(np.abs(b.c)))


def test_constrained_distance_dominates(zeta04):
    target = Target.w_lambda(0.3 + 2j)
    grid = (1.0, 0.5, 0.25)
    free = distance_upper_bound(zeta04, R, target, grid)
    sharp = distance_upper_bound(zeta04, R, target, grid, constraint="admissible")
    assert sharp.estimate >= free.estimate - 1e-10
    c = np.array(sharp.c)
    assert admissibility(sharp.sequence, 1, tol=1e-10 * max(1.0, np.max(np.abs(c)))).is_admissible
    cf = theta_psi_r(zeta04, R, norm_source="paper_bound")
    assert sharp_distance_from_unconstrained(free.value, cf) >= free.value


def test_admissible_needs_more_grid_values_than_moments(zeta04):
    with pytest.raises(DegenerateError):
        distance_upper_bound(zeta04, R, Target.w_lambda(0.3 + 2j), (1.0,), constraint="admissible")


def test_distance_input_errors(zeta04):
    target = Target.w_lambda(0.3 + 2j)
    with pytest.raises(DomainError):
        distance_upper_bound(zeta04, R, target, ())
    with pytest.raises(DomainError):
        distance_upper_bound(zeta04, R, target, (0.5, 0.5))
    with pytest.raises(DomainError):
        distance_upper_bound(zeta04, R, target, (1.5,))
    with pytest.raises(DomainError):
        distance_upper_bound(zeta04, R, target, (1.0, 1e-3), eps=5e-4)
    with pytest.raises(DomainError):
        distance_upper_bound(zeta04, R, target, (1.0,), constraint="loose")
    with pytest.raises(DomainError):
        distance_upper_bound(zeta04, R, Target.w_lambda(-0.1 + 1j), (1.0,))


def test_tail_gram_incommensurable_pair(zeta04):
    T, E = _tail_gram(zeta04, R, [2 ** -0.5, 1.0], 1 / 2000)
    assert T[0, 1] == 0.0
    assert E[0, 1] == pytest.approx(math.sqrt((T[0, 0] + E[0, 0]) * (T[1, 1] + E[1, 1])))
    T, E = _tail_gram(zeta04, R, [0.5, 1.0], 1 / 2000)
    assert T[0, 1] > 0
    assert E[0, 1] <= math.sqrt((T[0, 0] + E[0, 0]) * (T[1, 1] + E[1, 1]))


def test_distance_irrational_alpha(zeta04):
    target = Target.w_lambda(0.3 + 2j)
    single = distance_upper_bound(zeta04, R, target, (1.0,))
    for grid in [(1.0, 2 ** -0.5), (1.0, math.exp(-1))]:
        result = distance_upper_bound(zeta04, R, target, grid)
        assert math.isfinite(result.value)
        assert result.value >= result.estimate
        assert result.estimate <= single.estimate + 1e-8 * single.target_norm


@pytest.mark.slow
def test_distance_alpha_below_default_truncation(zeta04):
    target = Target.w_lambda(0.3 + 2j)
    coarse = distance_upper_bound(zeta04, R, target, (1.0,))
    fine = distance_upper_bound(zeta04, R, target, (1.0, 1e-3))
    assert math.isfinite(fine.value)
    assert fine.estimate <= coarse.estimate + 1e-8 * coarse.target_norm


@pytest.mark.slow
def test_distance_geometric_12(zeta04):
    grid = geometric_grid(12)
    result = distance_upper_bound(zeta04, R, Target.w_lambda(0.3 + 2j), grid, constraint="admissible")
    assert len(result.c) == 12
    assert math.isfinite(result.value)
    assert result.estimate <= result.target_norm + 1e-10


@pytest.mark.slow
def test_f_norm_on_completion_nodes(zeta04):
    one = f_norm(zeta04, Sequence((1.0,), (1.0,)), R)
    # ||f_{(alpha, c)}|| = |c| alpha^r ||f_{(1, 1)}||
    root = f_norm(zeta04, Sequence((2 ** -0.5,), (1.0,)), R)
    assert abs(root.value.real - 2 ** (-R / 2) * one.value.real) <= root.err + one.err + 1e-8
    A = Sequence((1.0,), (1.0,))
    combined = A.concat(complete_to_admissible(A, zeta04.m_L))
    got = f_norm(zeta04, combined, R)
    weight = math.e * math.exp(-R)
    assert got.lower <= (1 + weight) * one.upper
    assert got.upper >= abs(1 - weight) * one.lower


def test_distance_needs_zeta_tails(zeta04):
    plain = replace(zeta04, name="plain", unit_coefficients=False)
    with pytest.raises(UnsupportedModelError):
        distance_upper_bound(plain, R, Target.w_lambda(0.3 + 2j), (1.0,))


def test_geometric_grid():
    assert geometric_grid(3) == (1.0, 0.5, 0.25)
    with pytest.raises(DomainError):
        geometric_grid(0)


def test_target_validation():
    with pytest.raises(DomainError):
        Target("kernel", lam=1.0)
    with pytest.raises(DomainError):
        Target("f_A")
    with pytest.raises(DomainError):
        Target("w_lambda")


def test_sharp_distance_scaling():
    assert sharp_distance_from_unconstrained(2.0, 1.5) == 3.0
    with pytest.raises(DomainError):
        sharp_distance_from_unconstrained(2.0, 0.5)


@pytest.mark.slow
def test_f_norm_equals_full_psi_norm(zeta04):
    got = f_norm(zeta04, Sequence((1.0,), (1.0,)), R)
    want = psi_norm_full(zeta04, R)
    assert abs(got.value.real - want.value.real) <= got.err + want.err + 1e-6 * want.value.real
