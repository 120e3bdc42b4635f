"""Complex Gamma function via the Lanczos approximation (g = 7, n = 9).

Evaluated in log form so that large |Im s| does not overflow the
intermediate power t**(z + 1/2). Arguments with Re s < 0.5 are shifted
upward with the recurrence Gamma(s) = Gamma(s + n) / (s (s+1) ... (s+n-1)).
"""
import cmath
import math

from config import GAMMA_POLE_DIST, GAMMA_REL_ERR
from errors import PoleError
from specfun.certified import CertifiedValue

LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _check_pole(s):
    if s.real <= 0.5:
        nearest = round(s.real)
        if nearest <= 0 and abs(s - nearest) < GAMMA_POLE_DIST:
            raise PoleError(f"Gamma has a pole at s = {nearest}")


def _lanczos_log(s):
    """log Gamma(s) for Re s >= 0.5 (any branch; only exp() is used)."""
    z = s - 1
    x = LANCZOS_COEFFS[0]
    for i, coeff in enumerate(LANCZOS_COEFFS[1:], start=1):
        x += coeff / (z + i)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(s):
    """Return (log Gamma(s), relative error bound) on some branch of the log."""
    s = complex(s)
    _check_pole(s)
    shift = 0
    if s.real < 0.5:
        shift = int(math.ceil(0.5 - s.real))
    acc = 0j
    for k in range(shift):
        acc += cmath.log(s + k)
    lg = _lanczos_log(s + shift) - acc
    # log-form rounding grows with the size of (z + 1/2) log t
    scale = 1.0 + abs(s + shift) * max(1.0, math.log(abs(s + shift) + LANCZOS_G))
    rel = GAMMA_REL_ERR + 4e-16 * (scale + shift)
    return lg, rel


def gamma(s):
    """Gamma(s) as a CertifiedValue; raises PoleError near 0, -1, -2, ..."""
    lg, rel = log_gamma(s)
    value = cmath.exp(lg)
    if complex(s).imag == 0:
        value = complex(value.real, 0.0)
    return CertifiedValue(value, rel * abs(value))


def gamma_ratio(num, den):
    """Product of Gamma(a) over num divided by product of Gamma(b) over den."""
    total = 0j
    rel = 0.0
    for a in num:
        lg, e = log_gamma(a)
        total += lg
        rel += e
    for b in den:
        lg, e = log_gamma(b)
        total -= lg
        rel += e
    value = cmath.exp(total)
    return CertifiedValue(value, rel * abs(value) * 1.01)
