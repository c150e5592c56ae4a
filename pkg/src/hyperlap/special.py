"""Complex Gamma, Beta, and Pochhammer primitives.

All functions take and return complex double precision. Ratios of Gammas go
through :func:`log_gamma` so parameters up to |z| ~ 170 do not overflow.
"""

import cmath
import math

from .errors import PoleError

# Tolerance inside which an argument counts as sitting on a pole.
POLE_TOL = 1e-12

# Lanczos g=7, 9-term coefficient set (15-digit accuracy on the half-plane).
_LANCZOS_G = 7
_LANCZOS_C = (
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

_LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def is_nonpositive_integer(z, tol=POLE_TOL):
    """True when z lies within tol of {0, -1, -2, ...}."""
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def nearest_nonpositive_integer(z):
    """The integer a pole-adjacent argument is snapping to."""
    return int(round(complex(z).real))


def _check_finite(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z}")
    return z


def _lanczos_series(zm1):
    # zm1 = z - 1 with Re(z) >= 0.5
    acc = _LANCZOS_C[0]
    for i in range(1, _LANCZOS_G + 2):
        acc += _LANCZOS_C[i] / (zm1 + i)
    return acc


def _exact_positive_int(z):
    # exact integer arguments only; near-integers stay on the Lanczos path
    if z.imag == 0.0 and z.real == round(z.real) and 1.0 <= z.real <= 170.0:
        return int(z.real)
    return None


def gamma(z):
    """Complex Gamma; reflection is used for Re(z) < 0.5."""
    z = _check_finite(z)
    if is_nonpositive_integer(z):
        raise PoleError(z, "gamma")
    n = _exact_positive_int(z)
    if n is not None:
        return complex(math.factorial(n - 1))
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    zm1 = z - 1.0
    t = zm1 + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (zm1 + 0.5) * cmath.exp(-t) * _lanczos_series(zm1)


def _log_sin_pi(z):
    # log(sin(pi z)) without overflow for large |Im z|; branch is whatever
    # cmath.log returns, which is fine because only exp() of sums is used.
    w = cmath.pi * z
    if z.imag >= 0:
        # sin w = (i/2) e^{-iw} (1 - e^{2iw}), |e^{2iw}| <= 1
        return cmath.log(0.5j) - 1j * w + cmath.log(1.0 - cmath.exp(2j * w))
    return cmath.log(-0.5j) + 1j * w + cmath.log(1.0 - cmath.exp(-2j * w))


def log_gamma(z):
    """Log of Gamma; exp(log_gamma(z)) == gamma(z) up to a 2*pi*i multiple."""
    z = _check_finite(z)
    if is_nonpositive_integer(z):
        raise PoleError(z, "log_gamma")
    n = _exact_positive_int(z)
    if n is not None:
        return complex(math.log(math.factorial(n - 1)))
    if z.real < 0.5:
        return math.log(math.pi) - _log_sin_pi(z) - log_gamma(1.0 - z)
    zm1 = z - 1.0
    t = zm1 + _LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (zm1 + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_series(zm1))


def gamma_ratio(numerators, denominators):
    """prod Gamma(numerators) / prod Gamma(denominators), overflow-safe.

    A pole in a numerator Gamma raises PoleError; a pole in a denominator
    Gamma (with finite numerators) sends the ratio to zero.
    """
    acc = 0.0 + 0.0j
    for z in numerators:
        z = _check_finite(z)
        if is_nonpositive_integer(z):
            raise PoleError(z, "gamma_ratio numerator")
        acc += log_gamma(z)
    for z in denominators:
        z = _check_finite(z)
        if is_nonpositive_integer(z):
            return 0.0 + 0.0j
        acc -= log_gamma(z)
    return cmath.exp(acc)


def beta(a, b):
    """
    Euler Beta, Gamma(a)Gamma(b)/Gamma(a+b) via log-Gamma differences.
    """
    a = _check_finite(a)
    b = _check_finite(b)
    for name, v in (("a", a), ("b", b), ("a+b", a + b)):
        if is_nonpositive_integer(v):
            raise PoleError(v, f"beta parameter {name}")
    return cmath.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


def _as_nonnegative_int(v, tol=POLE_TOL):
    v = complex(v)
    if abs(v.imag) > tol:
        return None
    r = round(v.real)
    if r >= 0 and abs(v.real - r) <= tol:
        return int(r)
    return None


def pochhammer(lam, v):
    """Rising factorial (lam)_v.

    Non-negative-integer v uses the exact finite product, which stays valid
    at Gamma poles of lam; v = 0 returns exactly 1.
    """
    lam = _check_finite(lam)
    v = _check_finite(v)
    n = _as_nonnegative_int(v)
    if n is not None:
        if n == 0:
            return 1.0 + 0.0j
        acc = 1.0 + 0.0j
        for k in range(n):
            acc *= lam + k
        return acc
    if is_nonpositive_integer(lam + v):
        raise PoleError(lam + v, "pochhammer")
    if is_nonpositive_integer(lam):
        # Gamma(lam) infinite in the denominator: the ratio vanishes.
        return 0.0 + 0.0j
    return cmath.exp(log_gamma(lam + v) - log_gamma(lam))
