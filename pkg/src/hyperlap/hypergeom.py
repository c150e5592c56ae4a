"""Generalized hypergeometric series: classification, summation, theorems.

Series are summed from their term recurrence. On the unit circle the partial
sums are extrapolated with a Levin-u transformation (order up to 30) over a
small set of base offsets; that arithmetic runs at elevated working precision
because the transformation's binomial weights cancel catastrophically in
double precision for monotone (z = +1) series. Values enter and leave as
complex doubles.
"""

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import mpmath as mp

from .errors import DivergentSeries, DomainError, NoConvergence
from .special import (
    POLE_TOL,
    gamma_ratio,
    is_nonpositive_integer,
    nearest_nonpositive_integer,
)

# Convergence declaration for the accelerated path: successive extrapolants
# must agree to this relative tolerance.
LEVIN_RTOL = 1e-11
_LEVIN_ORDER_MAX = 30
_LEVIN_OFFSETS = (0, 4, 8, 16, 32)
_LEVIN_TERMS = 80
_LEVIN_DPS = 30

_ITERATION_CAP = 100_000


@dataclass(frozen=True)
class SeriesSpec:
    """A pFq specification: numerator and denominator parameters plus argument."""

    numerator: tuple
    denominator: tuple
    argument: complex

    def __init__(self, numerator: Sequence, denominator: Sequence, argument):
        object.__setattr__(self, "numerator", tuple(complex(a) for a in numerator))
        object.__setattr__(self, "denominator", tuple(complex(b) for b in denominator))
        object.__setattr__(self, "argument", complex(argument))


class Kind(enum.Enum):
    ALL_Z = "AllZ"
    UNIT_DISK = "UnitDisk"
    UNIT_CIRCLE_ABSOLUTE = "UnitCircleAbsolute"
    UNIT_CIRCLE_CONDITIONAL = "UnitCircleConditional"
    DIVERGENT = "Divergent"
    TERMINATING = "Terminating"


@dataclass(frozen=True)
class ConvergenceClass:
    kind: Kind
    balance: complex


def _termination_index(spec):
    """Index of the last nonzero term, or None if non-terminating."""
    best = None
    for a in spec.numerator:
        if is_nonpositive_integer(a):
            n = -nearest_nonpositive_integer(a)
            if best is None or n < best:
                best = n
    return best


def classify(spec: SeriesSpec) -> ConvergenceClass:
    balance = sum(spec.denominator) - sum(spec.numerator)
    if _termination_index(spec) is not None:
        return ConvergenceClass(Kind.TERMINATING, balance)
    p, q = len(spec.numerator), len(spec.denominator)
    z = spec.argument
    if p <= q or z == 0:
        return ConvergenceClass(Kind.ALL_Z, balance)
    if p == q + 1:
        r = abs(z)
        if r < 1.0 - POLE_TOL:
            return ConvergenceClass(Kind.UNIT_DISK, balance)
        if abs(r - 1.0) <= POLE_TOL:
            if balance.real > 0:
                return ConvergenceClass(Kind.UNIT_CIRCLE_ABSOLUTE, balance)
            if balance.real > -1 and abs(z - 1.0) > POLE_TOL:
                return ConvergenceClass(Kind.UNIT_CIRCLE_CONDITIONAL, balance)
    return ConvergenceClass(Kind.DIVERGENT, balance)


def _validate_denominators(spec, term_index):
    for b in spec.denominator:
        if is_nonpositive_integer(b):
            stop = -nearest_nonpositive_integer(b)
            if term_index is None or term_index > stop:
                raise DomainError(
                    f"denominator parameter {b} is a non-positive integer and the "
                    "series does not terminate before it is reached"
                )


def _sum_terminating(spec, nterms):
    t = 1.0 + 0.0j
    re = [1.0]
    im = [0.0]
    for n in range(nterms):
        fac = 1.0 + 0.0j
        for a in spec.numerator:
            fac *= a + n
        for b in spec.denominator:
            fac /= b + n
        t = t * fac * spec.argument / (n + 1)
        re.append(t.real)
        im.append(t.imag)
    return complex(math.fsum(re), math.fsum(im))


def _sum_direct(spec, tol):
    t = 1.0 + 0.0j
    s = t
    small = 0
    for n in range(_ITERATION_CAP):
        fac = 1.0 + 0.0j
        for a in spec.numerator:
            fac *= a + n
        for b in spec.denominator:
            fac /= b + n
        t = t * fac * spec.argument / (n + 1)
        s += t
        if abs(t) <= tol * abs(s):
            small += 1
            if small >= 3:
                return s
        else:
            small = 0
    raise NoConvergence(f"series did not converge within {_ITERATION_CAP} terms")


def _levin_accelerate(spec):
    """Levin-u extrapolation of the partial sums at elevated precision.

    Returns (value, error_estimate) as (complex, float). The estimate is the
    distance between the last few extrapolants at the best (offset, order)
    found; offsets matter because early terms of series with parameters of
    large negative real part break the smooth-remainder assumption.
    """
    with mp.workdps(_LEVIN_DPS):
        num = [mp.mpc(a) for a in spec.numerator]
        den = [mp.mpc(b) for b in spec.denominator]
        z = mp.mpc(spec.argument)
        t = mp.mpc(1)
        terms = [t]
        for n in range(_LEVIN_TERMS):
            fac = mp.mpc(1)
            for a in num:
                fac *= a + n
            for b in den:
                fac /= b + n
            t = t * fac * z / (n + 1)
            terms.append(t)
        partial = []
        acc = mp.mpc(0)
        for t in terms:
            acc += t
            partial.append(acc)

        best_val = None
        best_est = mp.inf
        for n0 in _LEVIN_OFFSETS:
            seq = []
            for k in range(1, _LEVIN_ORDER_MAX + 1):
                if n0 + k >= len(terms):
                    break
                numer = mp.mpc(0)
                denom = mp.mpc(0)
                degenerate = False
                for j in range(k + 1):
                    i = n0 + j
                    w = (1 + i) * terms[i]
                    if w == 0:
                        degenerate = True
                        break
                    c = ((-1) ** j) * mp.binomial(k, j) * (mp.mpf(1 + i) / (1 + n0 + k)) ** (k - 1)
                    numer += c * partial[i] / w
                    denom += c / w
                if degenerate:
                    break
                if denom == 0:
                    continue
                seq.append(numer / denom)
                if len(seq) >= 3:
                    est = abs(seq[-1] - seq[-2]) + abs(seq[-1] - seq[-3])
                    if est < best_est:
                        best_est, best_val = est, seq[-1]
            if best_val is not None and best_est <= mp.mpf(LEVIN_RTOL) * abs(best_val) / 100:
                break
        if best_val is None:
            raise NoConvergence("Levin acceleration produced no extrapolant")
        return complex(best_val), float(best_est)


def sum_series(spec: SeriesSpec, tol: float = 1e-13) -> complex:
    """Sum a pFq series; terminating exactly, else directly or accelerated."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    term_index = _termination_index(spec)
    _validate_denominators(spec, term_index)
    cls = classify(spec)
    if cls.kind is Kind.TERMINATING:
        return _sum_terminating(spec, term_index)
    if cls.kind is Kind.DIVERGENT:
        raise DivergentSeries(f"series diverges at z = {spec.argument}")
    if cls.kind in (Kind.ALL_Z, Kind.UNIT_DISK):
        return _sum_direct(spec, tol)
    value, est = _levin_accelerate(spec)
    if est > LEVIN_RTOL * (abs(value) + 1e-16):
        raise NoConvergence(
            f"Levin acceleration stagnated (estimate {est:.2e} for value {value})"
        )
    return value


def gauss_sum_2f1_unit(a, b, d) -> complex:
    """Closed form of 2F1(a, b; d; 1) on its region of validity."""
    a, b, d = complex(a), complex(b), complex(d)
    violated = []
    if not (d - a - b).real > 0:
        violated.append("Re(d-a-b) > 0")
    if is_nonpositive_integer(d):
        violated.append("d not a non-positive integer")
    if violated:
        raise DomainError("outside stated region: " + ", ".join(violated), violated)
    return gamma_ratio([d, d - a - b], [d - a, d - b])


def _even_negative_order(a):
    # a within pole tolerance of -2, -4, ...: returns m with a = -2m, else None
    if not is_nonpositive_integer(a) or abs(a) < 0.5:
        return None
    n = -nearest_nonpositive_integer(a)
    return n // 2 if n % 2 == 0 else None


def kummer_sum_2f1_neg1(a, b) -> complex:
    """Closed form of 2F1(a, b; 1+a-b; -1) on its region of validity."""
    a, b = complex(a), complex(b)
    violated = []
    if not b.real < 1:
        violated.append("Re(b) < 1")
    if is_nonpositive_integer(1 + a - b):
        violated.append("1+a-b not a non-positive integer")
    if violated:
        raise DomainError("outside stated region: " + ", ".join(violated), violated)
    m = _even_negative_order(a)
    if m is not None:
        # Gamma(1+a/2) and Gamma(1+a) are simultaneously at poles; their
        # ratio has the finite limit (-1)^m 2 (2m-1)!/(m-1)!.
        limit = (-1.0) ** m * 2.0 * math.factorial(2 * m - 1) / math.factorial(m - 1)
        return limit * gamma_ratio([1 + a - b], [1 + a / 2 - b])
    return gamma_ratio([1 + a - b, 1 + a / 2], [1 + a / 2 - b, 1 + a])


def sum_4f3_neg1(a, b, c) -> complex:
    """Closed form of 4F3 at -1 with numerators (a, 1+a/2, b, c) and
    denominators (a/2, 1+a-b, 1+a-c)."""
    a, b, c = complex(a), complex(b), complex(c)
    violated = []
    if not (a - 2 * b - 2 * c).real > -2:
        violated.append("Re(a-2b-2c) > -2")
    for label, v in (("a/2", a / 2), ("1+a-b", 1 + a - b), ("1+a-c", 1 + a - c)):
        if is_nonpositive_integer(v):
            violated.append(f"{label} not a non-positive integer")
    if violated:
        raise DomainError("outside stated region: " + ", ".join(violated), violated)
    return gamma_ratio([1 + a - b, 1 + a - c], [1 + a, 1 + a - b - c])
