"""Finite-span upper bounds for distances in L^2((0, inf), dt / t^(1 - 2 sigma0)).

The span is {sum_j c_j F_j}, F_j(t) = t^(r - sigma0) psi(alpha_j / t). Gram
entries on [eps, inf) come from quadrature with every t = alpha_j / k a
right-singular breakpoint; eps defaults to min(GRAM_TRUNCATION,
min alpha / PSI_ASYMPTOTIC_FROM). Below eps the zeta form
psi(u) = 1/2 + S(u) - u^sigma1 zeta(sigma1, theta) gives them in closed
form: the periodic parts of psi(alpha_i / t) and psi(alpha_j / t) have mean
product M2 (p q)^(sigma1 - 1) when alpha_i / alpha_j = p / q in lowest
terms. Pairs that are not commensurable get value 0 below eps and the
Cauchy-Schwarz bound sqrt(T_ii T_jj) as error. Cross terms with the
targets below eps are Mellin tails of psi.

The returned distance is the objective evaluated at the computed c plus
every quadrature and tail error, so it bounds the true distance from above
whatever the solver did.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, eigvalsh, qr

from config import (
    CONSTRAINTS, DEFAULT_GRID_SIZE, GRAM_CHUNK_VALUES, GRAM_COND_LIMIT, GRAM_REGULARIZATION,
    GRAM_TRUNCATION, GRID_MAX_DENOMINATOR, PSI_ASYMPTOTIC_FROM, TARGET_KINDS,
)
from errors import DegenerateError, DomainError, IllConditionedError, UnsupportedModelError
from model import (
    Sequence, moments, psi_array, smooth_part_bound, u_r_lambda_array, u_r_lambda_lead,
    u_r_lambda_norm2, w_lambda_array, w_lambda_norm2, zeta_mellin_tail,
)
from specfun import CertifiedValue, QuadratureSpec, hurwitz_mean_square, integrate_vector

logger = logging.getLogger(__name__)

KRONROD_POINTS = 15
EDGE_TOL = 1e-9
NODE_TOL = 1e-12


@dataclass(frozen=True)
class Target:
    """w_lambda, u_{r,lambda}, or f_{A,r} for a sequence A."""
    kind: str
    lam: complex = None
    sequence: Sequence = None

    def __post_init__(self):
        if self.kind not in TARGET_KINDS:
            raise DomainError(f"target kind must be one of {TARGET_KINDS}, got {self.kind!r}")
        if self.kind == "f_A":
            if self.sequence is None:
                raise DomainError("an f_A target needs a sequence")
        else:
            if self.lam is None:
                raise DomainError(f"a {self.kind} target needs lambda")
            object.__setattr__(self, "lam", complex(self.lam))

    @classmethod
    def w_lambda(cls, lam):
        return cls("w_lambda", lam=lam)

    @classmethod
    def u_r_lambda(cls, lam):
        return cls("u_r_lambda", lam=lam)

    @classmethod
    def span(cls, A):
        return cls("f_A", sequence=A)

    @property
    def closed(self):
        return self.kind != "f_A"

    def to_dict(self):
        out = {"kind": self.kind}
        if self.closed:
            out["lambda"] = {"re": self.lam.real, "im": self.lam.imag}
        else:
            out["sequence"] = self.sequence.to_dict()
        return out


@dataclass(frozen=True)
class DistanceResult:
    value: float
    c: tuple
    grid: tuple
    estimate: float
    err: float
    condition: float
    regularized: bool
    constraint: str
    target: Target
    target_norm: float

    def __iter__(self):
        yield self.value
        yield np.array(self.c)

    @property
    def sequence(self):
        return Sequence(self.grid, self.c)

    def to_dict(self):
        return {
            "value": self.value,
            "estimate": self.estimate,
            "squared_err": self.err,
            "c": [{"re": x.real, "im": x.imag} for x in self.c],
            "grid": list(self.grid),
            "gram_condition": self.condition,
            "regularized": self.regularized,
            "constraint": self.constraint,
            "target": self.target.to_dict(),
            "target_norm": self.target_norm,
        }


def geometric_grid(n=DEFAULT_GRID_SIZE):
    """alpha_j = 2^(1-j), j = 1..n."""
    if int(n) != n or n < 1:
        raise DomainError(f"grid size must be a positive integer, got {n!r}")
    return tuple(2.0 ** (1 - j) for j in range(1, int(n) + 1))


def _node(alpha):
    alpha = float(alpha)
    if not 0 < alpha <= 1:
        raise DomainError(f"grid values must lie in (0, 1], got {alpha}")
    return alpha


def _index(nodes, alpha):
    for i, a in enumerate(nodes):
        if abs(a - alpha) <= NODE_TOL * a:
            return i
    raise KeyError(alpha)


def _ratio(a, b):
    """(p, q) in lowest terms with a / b = p / q, or None when no q <= GRID_MAX_DENOMINATOR fits."""
    frac = Fraction(a / b).limit_denominator(GRID_MAX_DENOMINATOR)
    if abs(float(frac) * b - a) > NODE_TOL * a:
        return None
    return frac.numerator, frac.denominator


def _check_model(model, r):
    model.check_r(r)
    if not model.unit_coefficients:
        raise UnsupportedModelError(
            f"distance bounds need the Hurwitz form of psi, unavailable for model {model.name!r}")


def _auto_eps(values, eps):
    if eps is not None:
        return float(eps)
    return min(GRAM_TRUNCATION, min(_node(a) for a in values) / PSI_ASYMPTOTIC_FROM)


def _basis(values, eps):
    nodes = []
    for a in sorted((_node(a) for a in values), reverse=True):
        if not nodes or abs(nodes[-1] - a) > NODE_TOL * a:
            nodes.append(a)
    low = [a for a in nodes if a < PSI_ASYMPTOTIC_FROM * eps * (1.0 - NODE_TOL)]
    if low:
        raise DomainError(
            f"grid values {low} are below {PSI_ASYMPTOTIC_FROM} * eps = {PSI_ASYMPTOTIC_FROM * eps}")
    return nodes[::-1]


def _breakpoints(nodes, eps):
    parts = [np.array([1.0])]
    for a in nodes:
        parts.append(a / np.arange(1, math.floor(a / eps) + 1, dtype=float))
    points = np.sort(np.concatenate(parts))
    points = points[points > eps * (1.0 + NODE_TOL)]
    keep = np.concatenate(([True], np.diff(points) > NODE_TOL * points[1:]))
    return points[keep]


def _integrand(model, r, alpha, target):
    sigma0 = model.sigma0
    n = len(alpha)

    def f(t, d, lo, hi):
        F = np.empty((n, t.size), dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            for j, a in enumerate(alpha):
                u = a / t
                ratio = a / hi
                k = np.rint(ratio)
                edge = (k >= 1) & (np.abs(ratio - k) <= EDGE_TOL * k)
                theta = np.where(edge, k * d / t, u - np.ceil(u) + 1.0)
                F[j] = psi_array(model, u, theta=theta)
        F *= t ** (r - sigma0)
        w = t ** (2.0 * sigma0 - 1.0)
        Fc = np.conj(F)
        parts = [(Fc[:, None, :] * F[None, :, :]).reshape(n * n, -1) * w]
        if target is not None:
            if target.kind == "w_lambda":
                g = w_lambda_array(model, target.lam, t)
            else:
                g = u_r_lambda_array(model, r, target.lam, t)
            parts.append(Fc * g * w)
        return np.concatenate(parts, axis=0).T

    return f


def _quadrature(model, r, nodes, target, eps, spec):
    """Gram and cross integrals over [eps, inf), chunked along the breakpoints."""
    alpha = np.array([float(a) for a in nodes])
    n = len(alpha)
    comps = n * n + (n if target is not None else 0)
    f = _integrand(model, r, alpha, target)
    edges = np.concatenate(([float(eps)], _breakpoints(nodes, eps)))
    per_chunk = max(1, GRAM_CHUNK_VALUES // (KRONROD_POINTS * comps))
    sigma1 = model.test_sigma1
    power = 1.0 / (1.0 - 2.0 * sigma1) if sigma1 > 0 else 2.0
    total = np.zeros(comps, dtype=complex)
    total_err = np.zeros(comps)
    start = 0
    while start < len(edges):
        stop = start + per_chunk
        if stop >= len(edges):
            b, inner = np.inf, edges[start + 1:]
        else:
            b, inner = edges[stop], edges[start + 1:stop]
        vals, errs = integrate_vector(f, edges[start], b, spec=spec, breakpoints=inner,
                                      singular="right", power=power, with_offset=True)
        total += vals
        total_err += errs
        start = stop
    logger.debug("gram quadrature: %d functions, %d breakpoints", n, len(edges) - 1)
    M = total[:n * n].reshape(n, n)
    M_err = total_err[:n * n].reshape(n, n)
    v = total[n * n:]
    v_err = total_err[n * n:]
    return M, M_err, v, v_err


def _tail_gram(model, r, nodes, eps):
    """int_0^eps conj(F_i) F_j t^(2 sigma0 - 1) dt with error bounds."""
    sigma1 = model.test_sigma1
    Y = 1.0 / float(eps)
    m2 = hurwitz_mean_square(sigma1)
    M2, M2_up = m2.value.real, m2.upper
    root = math.sqrt(M2_up)
    kappa = 2.0 * r - 2.0 * sigma1
    y_const = Y ** (-2.0 * r) / (2.0 * r)
    y_osc = Y ** -kappa / kappa
    y_cross = Y ** (sigma1 - 2.0 * r - 1.0)
    y_abs = Y ** (sigma1 - 2.0 * r) / (2.0 * r - sigma1)
    alpha = [float(a) for a in nodes]
    smooth = [smooth_part_bound(sigma1, a * Y) for a in alpha]

    def commensurable(i, j, p, q):
        period = q / alpha[j]
        scale = (alpha[i] * alpha[j]) ** sigma1
        rho = float(p * q) ** (sigma1 - 1.0)
        value = 0.25 * y_const + scale * M2 * rho * y_osc
        err = ((smooth[i] + smooth[j]) / 2.0 + smooth[i] * smooth[j]) * y_const
        err += scale * rho * y_osc * m2.err
        err += scale * 2.0 * M2_up * period * Y ** (-kappa - 1.0)
        for x, z in ((i, j), (j, i)):
            az = alpha[z]
            err += az ** sigma1 * root * (y_cross / az + smooth[x] * (y_abs + 2.0 * y_cross / az))
        return value, err

    n = len(alpha)
    T = np.zeros((n, n))
    E = np.zeros((n, n))
    for i in range(n):
        T[i, i], E[i, i] = commensurable(i, i, 1, 1)
    for i in range(n):
        for j in range(i + 1, n):
            value, err = 0.0, math.sqrt((T[i, i] + E[i, i]) * (T[j, j] + E[j, j]))
            pq = _ratio(alpha[i], alpha[j])
            if pq is not None:
                exact, exact_err = commensurable(i, j, *pq)
                if exact_err < err:
                    value, err = exact, exact_err
            T[i, j] = T[j, i] = value
            E[i, j] = E[j, i] = err
    return T, E


def _tail_cross(model, r, nodes, target, eps):
    """int_0^eps conj(F_i) g t^(2 sigma0 - 1) dt for g = w_lambda or u_{r,lambda}."""
    lam = target.lam
    s = lam.conjugate() + r - model.sigma0
    lead = 1.0 if target.kind == "w_lambda" else u_r_lambda_lead(model, r, lam)
    values, errs = [], []
    for a in nodes:
        tail = zeta_mellin_tail(model.test_sigma1, s, float(a / eps))
        factor = lead * np.exp(s * math.log(float(a)))
        values.append(factor * tail.value)
        errs.append(abs(factor) * tail.err)
    return np.array(values), np.array(errs)


def _extended_gram(model, r, nodes, target, spec, eps):
    """K, K_err over the basis nodes, extended by the target for closed targets."""
    M, M_err, v, v_err = _quadrature(model, r, nodes, target if target and target.closed else None,
                                     eps, spec)
    T, T_err = _tail_gram(model, r, nodes, eps)
    M = M + T
    M_err = M_err + T_err
    M = 0.5 * (M + M.conj().T)
    if target is None or not target.closed:
        return M, M_err
    v0, v0_err = _tail_cross(model, r, nodes, target, eps)
    v = v + v0
    v_err = v_err + v0_err
    if target.kind == "w_lambda":
        N = w_lambda_norm2(model, target.lam)
    else:
        N = u_r_lambda_norm2(model, r, target.lam)
    n = len(nodes)
    K = np.zeros((n + 1, n + 1), dtype=complex)
    K_err = np.zeros((n + 1, n + 1))
    K[:n, :n], K_err[:n, :n] = M, M_err
    K[:n, n], K[n, :n] = v, np.conj(v)
    K_err[:n, n] = K_err[n, :n] = v_err
    K[n, n] = N
    return K, K_err


def gram_matrix(model, r, grid, spec=None, eps=None):
    """(M, M_err) for the functions F_j over sorted distinct grid values."""
    _check_model(model, r)
    eps = _auto_eps(grid, eps)
    nodes = _basis(grid, eps)
    return _extended_gram(model, r, nodes, None, spec or QuadratureSpec(), eps)


def _constraint_basis(model, grid):
    m = model.m_L
    n = len(grid)
    if n <= m:
        raise DegenerateError(
            f"{n} grid values leave no nonzero combination with {m} vanishing moments")
    C = moments(Sequence(tuple(grid), tuple(np.ones(n))), m)
    Q, R = qr(C.conj().T)
    diag = np.abs(np.diag(R))
    if diag.min() <= 1e-12 * diag.max():
        raise DegenerateError("moment constraints are linearly dependent on this grid")
    return Q[:, m:]


def _solve(G, b):
    """Cholesky solve with a trace-scaled diagonal shift when the factorization fails."""
    regularized = False
    try:
        factor = cho_factor(G)
    except LinAlgError:
        shift = GRAM_REGULARIZATION * float(np.trace(G).real)
        logger.warning("Gram matrix not numerically positive definite; adding %.3e to the diagonal", shift)
        G = G + shift * np.eye(len(G))
        regularized = True
        factor = cho_factor(G)
    ev = eigvalsh(G)
    condition = float(ev[-1] / ev[0]) if ev[0] > 0 else math.inf
    if condition > GRAM_COND_LIMIT:
        raise IllConditionedError(f"Gram condition estimate {condition:.3e} exceeds {GRAM_COND_LIMIT:.0e}")
    return cho_solve(factor, b), condition, regularized


def distance_upper_bound(model, r, target, grid, constraint="none", spec=None, eps=None):
    """Upper bound for dist(target, span of F_j) minimised over c.

    constraint="admissible" restricts c to sum_j c_j alpha_j (log alpha_j)^k = 0
    for k < m_L. Unpacks as (value, c).
    """
    if constraint not in CONSTRAINTS:
        raise DomainError(f"constraint must be one of {CONSTRAINTS}, got {constraint!r}")
    _check_model(model, r)
    grid = tuple(float(a) for a in grid)
    if not grid:
        raise DomainError("the grid is empty")
    if len(_basis(grid, 0.0)) != len(grid):
        raise DomainError("grid values must be distinct")
    extra = () if target.closed else target.sequence.alpha
    eps = _auto_eps(grid + tuple(extra), eps)
    spec = spec or QuadratureSpec()
    n = len(grid)

    if target.closed:
        nodes = _basis(grid, eps)
        basis_size = len(nodes) + 1
        tau = np.zeros(basis_size, dtype=complex)
        tau[-1] = 1.0
    else:
        A = target.sequence
        nodes = _basis(grid + A.alpha, eps)
        basis_size = len(nodes)
        tau = np.zeros(basis_size, dtype=complex)
        for a, c in zip(A.alpha, A.c):
            tau[_index(nodes, a)] += c
    K, K_err = _extended_gram(model, r, nodes, target, spec, eps)
    embed = np.zeros((basis_size, n))
    for j, a in enumerate(grid):
        embed[_index(nodes, a), j] = 1.0

    G = embed.T @ K @ embed
    b = embed.T @ K @ tau
    Z = _constraint_basis(model, grid) if constraint == "admissible" else np.eye(n)
    z, condition, regularized = _solve(Z.conj().T @ G @ Z, Z.conj().T @ b)
    c = Z @ z

    e = embed @ c - tau
    J = float(np.real(np.conj(e) @ K @ e))
    slack = float(np.abs(e) @ K_err @ np.abs(e))
    target_norm = math.sqrt(max(float(np.real(np.conj(tau) @ K @ tau)), 0.0))
    value = math.sqrt(max(J + slack, 0.0))
    logger.info("distance bound %.6g (estimate %.6g, squared slack %.2e) on %d grid values, %s",
                value, math.sqrt(max(J, 0.0)), slack, n, constraint)
    return DistanceResult(
        value=value, c=tuple(complex(x) for x in c), grid=grid,
        estimate=math.sqrt(max(J, 0.0)), err=slack, condition=condition,
        regularized=regularized, constraint=constraint, target=target, target_norm=target_norm,
    )


def f_norm(model, A, r, spec=None, eps=None):
    """||f_{A,r}|| in L^2(dt / t^(1 - 2 sigma0)) from the Gram system of A."""
    _check_model(model, r)
    eps = _auto_eps(A.alpha, eps)
    nodes = _basis(A.alpha, eps)
    K, K_err = _extended_gram(model, r, nodes, None, spec or QuadratureSpec(), eps)
    tau = np.zeros(len(nodes), dtype=complex)
    for a, c in zip(A.alpha, A.c):
        tau[_index(nodes, a)] += c
    squared = float(np.real(np.conj(tau) @ K @ tau))
    err = float(np.abs(tau) @ K_err @ np.abs(tau))
    return CertifiedValue(max(squared, 0.0), err).sqrt()


def sharp_distance_from_unconstrained(d_upper, factor):
    """d# <= (1 + theta sqrt(1 - r)) d, applied to an upper bound for d."""
    scale = factor.factor if hasattr(factor, "factor") else float(factor)
    if scale < 1:
        raise DomainError(f"comparison factor must be >= 1, got {scale}")
    return float(d_upper) * scale
