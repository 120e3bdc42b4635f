"""Vectorised adaptive Gauss-Kronrod (7/15) quadrature with error bounds.

The interval is cut at the caller's breakpoints into segments. Each segment
is mapped onto v in [0, 1]; segments with a declared endpoint singularity
use t = lo + w v^p (or hi - w v^p), which flattens (t - lo)^(-1/p') type
behaviour, and a last infinite segment uses t = lo / w^q. Pieces in v are
bisected greedily until the summed |K15 - G7| estimates meet the tolerance.
"""
import logging
import math
from enum import Enum

import numpy as np

from config import QUAD_INFINITE_MAP_POWER
from errors import ConvergenceError, DomainError
from specfun.certified import CertifiedValue, QuadratureSpec

logger = logging.getLogger(__name__)

# Kronrod nodes on [0, 1) mirrored; Gauss nodes are the odd-indexed ones
_XK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
NODES = np.concatenate((-_XK[:-1], _XK[::-1]))
WEIGHTS_K = np.concatenate((_WK[:-1], _WK[::-1]))
WEIGHTS_G = np.zeros(15)
WEIGHTS_G[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate((_WG[:-1], _WG[::-1]))
EPS = np.finfo(float).eps

KIND_PLAIN, KIND_LEFT, KIND_RIGHT, KIND_INFINITE = 0, 1, 2, 3


class Weight(Enum):
    NONE = "none"
    POWER_R = "dt/t^(1+2r)"
    POWER_SIGMA0 = "dt/t^(1-2sigma0)"

    def factor(self, t, param):
        if self is Weight.NONE:
            return 1.0
        if self is Weight.POWER_R:
            return t ** (-1.0 - 2.0 * param)
        return t ** (2.0 * param - 1.0)


def _segments(a, b, breakpoints, singular, tail_given, cutoff):
    if math.isfinite(b):
        finite_end = b
    elif tail_given:
        finite_end = cutoff
    else:
        finite_end = None
    points = [a]
    if breakpoints is not None:
        upper = finite_end if finite_end is not None else np.inf
        inner = np.asarray(breakpoints, dtype=float)
        inner = np.unique(inner[(inner > a) & (inner < upper)])
        points.extend(inner.tolist())
    if finite_end is not None:
        if not finite_end > points[-1]:
            raise DomainError(f"cutoff {finite_end} does not exceed the lower limit {a}")
        points.append(finite_end)
    elif points[-1] <= 0:
        points.append(1.0)

    lo = np.asarray(points[:-1], dtype=float)
    hi = np.asarray(points[1:], dtype=float)
    if singular == "both":
        mid = 0.5 * (lo + hi)
        lo, hi = np.concatenate((lo, mid)), np.concatenate((mid, hi))
        kinds = np.concatenate((np.full(len(mid), KIND_LEFT), np.full(len(mid), KIND_RIGHT)))
    else:
        code = {None: KIND_PLAIN, "left": KIND_LEFT, "right": KIND_RIGHT}.get(singular)
        if code is None:
            raise DomainError(f"unknown singular flag {singular!r}")
        kinds = np.full(len(lo), code)
    if finite_end is None:
        lo = np.append(lo, points[-1])
        hi = np.append(hi, np.inf)
        kinds = np.append(kinds, KIND_INFINITE)
    return lo, hi, kinds.astype(int)


def _map(v, lo, hi, kind, p, q):
    """t(v), dt/dv and distance d from the flattened endpoint."""
    width = np.where(np.isfinite(hi), hi - lo, 1.0)
    t = lo + width * v
    jac = width * np.ones_like(v)
    d = width * v
    vp = v ** p
    left = kind == KIND_LEFT
    right = kind == KIND_RIGHT
    inf = kind == KIND_INFINITE
    d = np.where(left | right, width * vp, d)
    t = np.where(left, lo + width * vp, t)
    t = np.where(right, hi - width * vp, t)
    jac = np.where(left | right, width * p * v ** (p - 1), jac)
    with np.errstate(divide="ignore"):
        t_inf = lo / v ** q
        jac_inf = q * lo / v ** (q + 1)
    t = np.where(inf, t_inf, t)
    jac = np.where(inf, jac_inf, jac)
    d = np.where(inf, t - lo, d)
    return t, jac, d


def _evaluate(f, seg, v0, v1, seg_lo, seg_hi, seg_kind, weight, param, p, q, with_offset):
    half = 0.5 * (v1 - v0)
    mid = 0.5 * (v1 + v0)
    v = mid[:, None] + half[:, None] * NODES[None, :]
    lo = seg_lo[seg][:, None] * np.ones_like(v)
    hi = seg_hi[seg][:, None] * np.ones_like(v)
    kind = seg_kind[seg][:, None] * np.ones_like(v, dtype=int)
    t, jac, d = _map(v, lo, hi, kind, p, q)
    flat = (t.ravel(), d.ravel(), lo.ravel(), hi.ravel()) if with_offset else (t.ravel(),)
    vals = np.asarray(f(*flat))
    scalar = vals.ndim == 1
    vals = vals.reshape(t.shape + (() if scalar else (vals.shape[-1],)))
    scale = jac * weight.factor(t, param) * half[:, None]
    if not scalar:
        scale = scale[..., None]
    g = vals * scale
    k15 = np.tensordot(g, WEIGHTS_K, axes=([1], [0]))
    g7 = np.tensordot(g, WEIGHTS_G, axes=([1], [0]))
    resabs = np.tensordot(np.abs(g), WEIGHTS_K, axes=([1], [0]))
    err = np.abs(k15 - g7) + 50 * EPS * resabs
    if scalar:
        k15, err = k15[:, None], err[:, None]
    return k15, err, scalar


def _adaptive(f, a, b, weight, param, spec, breakpoints, singular, power, with_offset, tail_given):
    if not math.isfinite(a):
        raise DomainError("lower limit must be finite")
    if math.isfinite(b) and not b > a:
        raise DomainError(f"empty interval [{a}, {b}]")
    seg_lo, seg_hi, seg_kind = _segments(a, b, breakpoints, singular, tail_given, spec.cutoff)
    if np.any((seg_kind == KIND_INFINITE) & (seg_lo <= 0)):
        raise DomainError("infinite segment needs a positive left end")
    p = float(power) if power is not None else 2.0
    q = float(QUAD_INFINITE_MAP_POWER)

    seg = np.arange(len(seg_lo))
    v0 = np.zeros(len(seg))
    v1 = np.ones(len(seg))
    val, err, scalar = _evaluate(f, seg, v0, v1, seg_lo, seg_hi, seg_kind, weight, param, p, q, with_offset)
    splits = 0
    rounds = 0
    while True:
        total = val.sum(axis=0)
        total_err = err.sum(axis=0)
        tol = np.maximum(spec.abs_tol, spec.rel_tol * np.abs(total))
        ratio = total_err / tol
        if np.all(ratio <= 1.0):
            break
        score = (err / tol[None, :]).max(axis=1)
        order = np.argsort(score)[::-1]
        excess = score.sum() - 0.5
        cum = np.cumsum(score[order])
        n_pick = int(np.searchsorted(cum, excess)) + 1
        pick = order[:n_pick]
        pick = pick[(v1[pick] - v0[pick]) > 1e-13]
        if len(pick) == 0 or splits + len(pick) > spec.max_subdivisions:
            raise ConvergenceError(
                f"quadrature did not converge: err {float(total_err.max()):.3e} > tol "
                f"{float(tol.max()):.3e} after {splits} subdivisions"
            )
        mids = 0.5 * (v0[pick] + v1[pick])
        new_seg = np.concatenate((seg[pick], seg[pick]))
        new_v0 = np.concatenate((v0[pick], mids))
        new_v1 = np.concatenate((mids, v1[pick]))
        nv, ne, _ = _evaluate(f, new_seg, new_v0, new_v1, seg_lo, seg_hi, seg_kind,
                              weight, param, p, q, with_offset)
        keep = np.ones(len(seg), dtype=bool)
        keep[pick] = False
        seg = np.concatenate((seg[keep], new_seg))
        v0 = np.concatenate((v0[keep], new_v0))
        v1 = np.concatenate((v1[keep], new_v1))
        val = np.concatenate((val[keep], nv))
        err = np.concatenate((err[keep], ne))
        splits += len(pick)
        rounds += 1
        logger.debug("quadrature round %d: %d pieces, max err/tol %.3e", rounds, len(seg), float(ratio.max()))
    return total, total_err, scalar


def integrate(f, a, b, weight=Weight.NONE, param=0.0, spec=None, breakpoints=None,
              singular=None, power=None, tail=None, with_offset=False):
    """Integrate a vectorised scalar integrand over [a, b] (b may be inf).

    f maps an array of nodes to values; with with_offset=True it is called
    as f(t, d, lo, hi) where d is the distance of t from the flattened
    segment endpoint. For infinite b, tail(T) -> CertifiedValue bounds the
    contribution of [T, inf) with T = spec.cutoff; without a tail the
    infinite segment is mapped onto (0, 1].
    """
    spec = spec or QuadratureSpec()
    total, total_err, _ = _adaptive(f, a, b, weight, param, spec, breakpoints, singular,
                                    power, with_offset, tail is not None and not math.isfinite(b))
    out = CertifiedValue(complex(total[0]), float(total_err[0]))
    if tail is not None and not math.isfinite(b):
        tail_value = tail(spec.cutoff)
        if tail_value.err > spec.tolerance(out.value):
            logger.warning("tail beyond T=%g carries err %.3e above quadrature tolerance",
                           spec.cutoff, tail_value.err)
        out = out + tail_value
    return out


def integrate_vector(f, a, b, weight=Weight.NONE, param=0.0, spec=None, breakpoints=None,
                     singular=None, power=None, with_offset=False):
    """Vector-valued version: f returns shape (n, k); returns (values, errs)."""
    spec = spec or QuadratureSpec()
    total, total_err, _ = _adaptive(f, a, b, weight, param, spec, breakpoints, singular,
                                    power, with_offset, False)
    return total, total_err
