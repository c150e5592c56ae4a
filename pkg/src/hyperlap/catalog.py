"""Catalog of closed-form transforms of hyperbolic/trigonometric powers.

Every entry couples a closed-form evaluator with the defining integral's
data: parameter schema, validity conditions, the integrand itself, and the
analytic envelope (decay rate, oscillation rate, endpoint power) that the
quadrature oracle needs. Entries are grouped in sections: arbitrary powers
of hyperbolic finite series (2), quotient integrals of hyperbolic functions
(3), integer powers of circular functions (4) and named special cases that
delegate to the general entries (5).

Conditions marked enforced=False are recorded and reported but do not block
evaluation; they come with the derivations rather than with the integrals,
and the verification sweep probes them empirically.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, IntegrandDomainError, UnknownEntry
from .hypergeom import SeriesSpec, sum_series
from .laplace import integer_power_transform
from .special import beta as beta_fn
from .special import gamma_ratio, is_nonpositive_integer, pochhammer

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str = "complex"  # complex | real | int
    description: str = ""


@dataclass(frozen=True)
class Condition:
    text: str
    holds: Callable
    enforced: bool = True


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    equation: str
    section: int
    description: str
    params: tuple
    conditions: tuple
    closed_form: Callable
    integrand: Callable
    decay_rate: Callable
    osc_freq: Callable = field(default=lambda p: 0.0)
    endpoint_power: Callable = field(default=lambda p: 0.0)
    default_grid: tuple = ()
    alt_forms: tuple = ()


_REGISTRY = {}


def _register(entry: CatalogEntry) -> CatalogEntry:
    if entry.id in _REGISTRY:
        raise ValueError(f"duplicate catalog id {entry.id!r}")
    _REGISTRY[entry.id] = entry
    return entry


def entries(section=None):
    """All catalog entries, optionally restricted to one section."""
    out = [e for e in _REGISTRY.values() if section is None or e.section == section]
    return tuple(out)


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return _REGISTRY[entry_id]
    except KeyError:
        raise UnknownEntry(entry_id) from None


def coerce_params(entry: CatalogEntry, given) -> dict:
    """Validate a raw parameter mapping against the entry schema."""
    names = [ps.name for ps in entry.params]
    missing = [n for n in names if n not in given]
    if missing:
        raise DomainError(
            f"{entry.id}: missing parameter(s) {', '.join(missing)}",
            violated=tuple(f"{n} required" for n in missing),
        )
    extra = [k for k in given if k not in names]
    if extra:
        raise DomainError(
            f"{entry.id}: unknown parameter(s) {', '.join(sorted(extra))}"
        )
    out = {}
    for ps in entry.params:
        v = complex(given[ps.name])
        if ps.kind == "int":
            if v.imag != 0.0 or v.real != int(v.real):
                raise DomainError(f"{entry.id}: {ps.name} must be an integer")
            out[ps.name] = int(v.real)
        elif ps.kind == "real":
            if v.imag != 0.0:
                raise DomainError(f"{entry.id}: {ps.name} must be real")
            out[ps.name] = v.real
        else:
            out[ps.name] = v
    return out


def check_conditions(entry: CatalogEntry, params, enforced_only=True):
    """Conditions violated by params (already coerced)."""
    return tuple(
        c
        for c in entry.conditions
        if (c.enforced or not enforced_only) and not c.holds(params)
    )


def evaluate_entry(entry_id: str, params, relaxed=False) -> complex:
    """Closed-form value of a catalog entry at a parameter point."""
    entry = get_entry(entry_id)
    p = coerce_params(entry, params)
    bad = check_conditions(entry, p)
    if bad and not relaxed:
        raise DomainError(
            f"{entry.id}: conditions violated: " + "; ".join(c.text for c in bad),
            violated=tuple(c.text for c in bad),
        )
    return complex(entry.closed_form(p))


def special_case(entry_id: str, params=None, **kw) -> complex:
    """Evaluate a named entry; keyword arguments merge over the params dict."""
    merged = dict(params or {})
    merged.update(kw)
    return evaluate_entry(entry_id, merged)


# ---------------------------------------------------------------------------
# numerics helpers for stable integrands

def _logcosh(y):
    """log(cosh(y)) for y >= 0 (real array), overflow-free."""
    return y + np.log1p(np.exp(-2.0 * y)) - _LN2


def _logsinh(y):
    """log(sinh(y)) for y > 0 (real array), overflow-free."""
    return y + np.log(-np.expm1(-2.0 * y)) - _LN2


def _log_cosh_sum(coeffs, const, y):
    """log of sum(c_i*cosh(k_i*y)) + const for positive c_i, y >= 0.

    Factors out the largest exponent so every remaining exponential has a
    non-positive argument; valid for arbitrarily large y.
    """
    kmax = max(k for _, k in coeffs)
    acc = np.zeros(y.shape)
    for c, k in coeffs:
        acc = acc + 0.5 * c * (np.exp((k - kmax) * y) + np.exp(-(k + kmax) * y))
    if const:
        acc = acc + const * np.exp(-kmax * y)
    return kmax * y + np.log(acc)


def _require_real_positive(entry_id, **values):
    for name, v in values.items():
        v = complex(v)
        if v.imag != 0.0 or not v.real > 0.0:
            raise IntegrandDomainError(
                f"{entry_id}: integrand needs {name} real and positive, got {v}"
            )


def _frac_power(sigma: float) -> float:
    """Endpoint power for the oracle; integers >= 0 need no substitution."""
    if abs(sigma - round(sigma)) < 1e-12 and round(sigma) >= -0.5:
        return 0.0
    return sigma


# ---------------------------------------------------------------------------
# section 2: arbitrary powers of hyperbolic finite series

def _fs1_coeffs(m):
    return [(float(math.comb(2 * m, i)), float(2 * m - 2 * i)) for i in range(m)]


def _fs4_coeffs(q):
    return [
        (float(math.comb(2 * q + 1, ell)), float(2 * q + 1 - 2 * ell))
        for ell in range(q + 1)
    ]


def _entry_I_value(s, b, nu, m):
    c = s / (2.0 * b) - m * nu
    series = sum_series(SeriesSpec([-2.0 * m * nu, c], [c + 1.0], -1.0))
    return series / (2.0**nu * (s - 2.0 * m * nu * b))


def _entry_I_integrand(p):
    s, b, nu, m = p["s"], p["β"], p["ν"], p["m"]
    _require_real_positive("entry-I", β=b)
    coeffs = _fs1_coeffs(m)
    const = 0.5 * math.comb(2 * m, m)
    b = b.real

    def f(x):
        log_base = _log_cosh_sum(coeffs, const, b * x)
        return np.exp(nu * log_base - s * x)

    return f


def _entry_II_value(s, g, nu, n):
    arg = s / (2.0 * g) - n * nu
    return (
        2.0 ** (1.0 - nu) * n * nu / (s + 2.0 * n * nu * g) * beta_fn(arg, 2.0 * n * nu)
    )


def _entry_II_alt(s, g, nu, n):
    c = s / (2.0 * g) - n * nu
    series = sum_series(SeriesSpec([-2.0 * n * nu, c], [c + 1.0], 1.0))
    return series / (2.0**nu * (s - 2.0 * n * nu * g))


def _entry_II_integrand(p):
    s, g, nu, n = p["s"], p["γ"], p["ν"], p["n"]
    _require_real_positive("entry-II", γ=g)
    g = g.real
    # the alternating cosh sum collapses to 2^(2n-1)*sinh(γx)^(2n); the
    # naive sum cancels to zero precision near x = 0
    scale = (2 * n - 1) * _LN2

    def f(x):
        log_base = scale + 2.0 * n * _logsinh(g * x)
        return np.exp(nu * log_base - s * x)

    return f


def _entry_III_value(s, lam, nu, pp):
    order = (2 * pp + 1) * nu
    arg = s / (2.0 * lam) - 0.5 * order
    return order / (2.0**nu * (s + order * lam)) * beta_fn(arg, order)


def _entry_III_alt(s, lam, nu, pp):
    c = s / (2.0 * lam) - (pp + 0.5) * nu
    series = sum_series(SeriesSpec([-(2.0 * pp + 1.0) * nu, c], [c + 1.0], 1.0))
    return series / (2.0**nu * (s - (2.0 * pp + 1.0) * nu * lam))


def _entry_III_integrand(p):
    s, lam, nu, pp = p["s"], p["λ"], p["ν"], p["p"]
    _require_real_positive("entry-III", λ=lam)
    lam = lam.real
    scale = 2 * pp * _LN2

    def f(x):
        log_base = scale + (2 * pp + 1) * _logsinh(lam * x)
        return np.exp(nu * log_base - s * x)

    return f


def _entry_IV_value(s, mu, nu, q):
    c = s / (2.0 * mu) - (q + 0.5) * nu
    series = sum_series(SeriesSpec([-(2.0 * q + 1.0) * nu, c], [c + 1.0], -1.0))
    return series / (2.0**nu * (s - (2.0 * q + 1.0) * nu * mu))


def _entry_IV_integrand(p):
    s, mu, nu, q = p["s"], p["μ"], p["ν"], p["q"]
    _require_real_positive("entry-IV", μ=mu)
    coeffs = _fs4_coeffs(q)
    mu = mu.real

    def f(x):
        log_base = _log_cosh_sum(coeffs, 0.0, mu * x)
        return np.exp(nu * log_base - s * x)

    return f


def _eq38_value(s, g, nu):
    return 2.0 * nu / (2.0**nu * (s + nu * g)) * beta_fn(s / g - nu, 2.0 * nu)


def _eq39_value(s, g, nu):
    return beta_fn(s / g - nu, 2.0 * nu + 1.0) / (2.0**nu * g)


def _eq38_integrand(p):
    s, g, nu = p["s"], p["γ"], p["ν"]
    _require_real_positive("eq-38", γ=g)
    g = g.real

    def f(x):
        log_base = _LN2 + 2.0 * _logsinh(0.5 * g * x)
        return np.exp(nu * log_base - s * x)

    return f


def _eq40_value(s, lam, nu):
    return nu / (2.0**nu * (s + lam * nu)) * beta_fn(s / (2.0 * lam) - 0.5 * nu, nu)


def _eq41_value(s, lam, nu):
    return beta_fn(s / (2.0 * lam) - 0.5 * nu, 1.0 + nu) / (2.0 ** (1.0 + nu) * lam)


def _eq40_integrand(p):
    s, lam, nu = p["s"], p["λ"], p["ν"]
    _require_real_positive("eq-40", λ=lam)
    lam = lam.real

    def f(x):
        return np.exp(nu * _logsinh(lam * x) - s * x)

    return f


# ---------------------------------------------------------------------------
# section 3: quotient integrals

def _novel_V_value(al, b, pq):
    return 4.0 ** (b - 1.0) / pq * beta_fn(b + al / pq, b - al / pq)


def _novel_V_integrand(p):
    al, b, pq = p["α"], p["β"], p["p"]

    def f(x):
        lc = 2.0 * b * _logcosh_c(pq * x)
        return 0.5 * (np.exp(2.0 * al * x - lc) + np.exp(-2.0 * al * x - lc))

    return f


def _logcosh_c(y):
    """log(cosh(y)) for complex y with Re(y) >= 0."""
    y = np.asarray(y, dtype=complex)
    return y + np.log1p(np.exp(-2.0 * y)) - _LN2


def _novel_VI_value(al, b):
    return 0.5 * beta_fn(0.5 * (1.0 + al), 0.5 * (b - al))


def _novel_VI_integrand(p):
    al, b = p["α"], p["β"]

    def f(x):
        return np.exp(al * _logsinh(x) - b * _logcosh(x))

    return f


def _novel_VII_value(a, b, nu):
    half = 0.5 * nu
    shift = 0.5j * a / b
    return 2.0 ** (nu - 2.0) / b * gamma_ratio([half + shift, half - shift], [nu])


def _novel_VII_integrand(p):
    a, b, nu = p["a"], p["β"], p["ν"]

    def f(x):
        lc = nu * _logcosh_c(b * x)
        return 0.5 * (np.exp(1j * a * x - lc) + np.exp(-1j * a * x - lc))

    return f


# ---------------------------------------------------------------------------
# section 4: integer powers of circular functions

_S4 = {
    "eq-74": ("cos", "β", "m", 1, 0),
    "eq-76": ("sin", "γ", "n", 1, 0),
    "eq-78": ("sin", "λ", "p", 0, 1),
    "eq-80": ("cos", "μ", "q", 0, 1),
}


def _s4_exponent(entry_id, k):
    even, odd = _S4[entry_id][3], _S4[entry_id][4]
    return 2 * k + odd if odd else 2 * k


def _s4_value(entry_id, p):
    kind, fname, kname = _S4[entry_id][:3]
    e = _s4_exponent(entry_id, p[kname])
    return integer_power_transform(kind, e, p[fname], p["s"])


def _s4_integrand(entry_id, p):
    kind, fname, kname = _S4[entry_id][:3]
    e = _s4_exponent(entry_id, p[kname])
    s, freq = p["s"], p[fname]
    fn = np.sin if kind == "sin" else np.cos

    def f(x):
        return fn(freq * x) ** e * np.exp(-s * x)

    return f


def _eq75_value(p):
    s, b, m = p["s"], p["β"], p["m"]
    c = (-1j * s - 2.0 * m * b) / (2.0 * b)
    series = sum_series(SeriesSpec([-2.0 * m, c], [c + 1.0], -1.0))
    return series / (2.0 ** (2 * m) * (s - 2.0j * m * b))


def _eq77_value(p):
    s, g, n = p["s"], p["γ"], p["n"]
    w = 1j * s / (2.0 * g)
    denom = (s + 2.0j * n * g) * pochhammer(1.0 + w, n) * pochhammer(-w, n)
    return math.factorial(2 * n) / (2.0 ** (2 * n) * denom)


def _eq79_value(p):
    s, lam, pp = p["s"], p["λ"], p["p"]
    denom = (
        (s - 1j * lam)
        * (s + 1j * lam * (2 * pp + 1))
        * pochhammer((3.0 * lam + 1j * s) / (2.0 * lam), pp)
        * pochhammer((lam - 1j * s) / (2.0 * lam), pp)
    )
    return math.factorial(2 * pp + 1) * lam / (2.0 ** (2 * pp) * denom)


def _eq81_value(p):
    s, mu, q = p["s"], p["μ"], p["q"]
    c = (-1j * s - (2 * q + 1) * mu) / (2.0 * mu)
    series = sum_series(SeriesSpec([-(2.0 * q + 1.0), c], [c + 1.0], -1.0))
    return series / (2.0 ** (2 * q + 1) * (s - 1j * (2 * q + 1) * mu))


# ---------------------------------------------------------------------------
# section 5 closed form with no general parent

def _eq116_value(a):
    h = 0.5 * math.pi * a
    return (2.0 * math.pi * math.sinh(h) - a * math.pi**2 * math.cosh(h)) / (
        4.0 * math.sinh(h) ** 2
    )


def _eq116_integrand(p):
    a = p["a"]

    def f(x):
        sech = 2.0 * np.exp(-x) / (1.0 + np.exp(-2.0 * x))
        return -x * np.sin(a * x) * sech * sech

    return f


# ---------------------------------------------------------------------------
# public single-call operations

def entry_I(s, beta, nu, m) -> complex:
    """Transform of the m-indexed even cosh series raised to the power ν."""
    return evaluate_entry("entry-I", {"s": s, "β": beta, "ν": nu, "m": m})


def entry_II(s, gamma, nu, n) -> complex:
    """Transform of the alternating even cosh series raised to the power ν."""
    return evaluate_entry("entry-II", {"s": s, "γ": gamma, "ν": nu, "n": n})


def entry_III(s, lam, nu, p) -> complex:
    """Transform of the alternating odd sinh series raised to the power ν."""
    return evaluate_entry("entry-III", {"s": s, "λ": lam, "ν": nu, "p": p})


def entry_IV(s, mu, nu, q) -> complex:
    """Transform of the odd cosh series raised to the power ν."""
    return evaluate_entry("entry-IV", {"s": s, "μ": mu, "ν": nu, "q": q})


def novel_V(alpha, beta, p) -> complex:
    """Integral of cosh(2αt)/cosh(pt)^(2β) over (0, ∞)."""
    return evaluate_entry("novel-V", {"α": alpha, "β": beta, "p": p})


def novel_VI(alpha, beta) -> complex:
    """Integral of sinh(x)^α/cosh(x)^β over (0, ∞)."""
    return evaluate_entry("novel-VI", {"α": alpha, "β": beta})


def novel_VII(a, beta, nu) -> complex:
    """Integral of cos(ax)/cosh(βx)^ν over (0, ∞)."""
    return evaluate_entry("novel-VII", {"a": a, "β": beta, "ν": nu})


# ---------------------------------------------------------------------------
# registry

def _not_pole(z) -> bool:
    return not is_nonpositive_integer(z)


_register(
    CatalogEntry(
        id="entry-I",
        equation="Eq. (42)",
        section=2,
        description=(
            "Laplace transform of [sum_{i<m} C(2m,i)·cosh((2m-2i)βx)"
            " + C(2m,m)/2]^ν"
        ),
        params=(
            ParamSpec("s"),
            ParamSpec("β"),
            ParamSpec("ν"),
            ParamSpec("m", "int"),
        ),
        conditions=(
            Condition("m >= 1", lambda p: p["m"] >= 1),
            Condition("Re(mν) > -1", lambda p: (p["m"] * p["ν"]).real > -1.0),
            Condition(
                "Re(s - 2mβν) > 0",
                lambda p: (p["s"] - 2 * p["m"] * p["β"] * p["ν"]).real > 0.0,
            ),
            Condition("Re(β) > 0", lambda p: p["β"].real > 0.0),
            Condition(
                "s/(2β) - mν + 1 ∉ {0,-1,-2,...}",
                lambda p: _not_pole(p["s"] / (2 * p["β"]) - p["m"] * p["ν"] + 1),
            ),
        ),
        closed_form=lambda p: _entry_I_value(p["s"], p["β"], p["ν"], p["m"]),
        integrand=_entry_I_integrand,
        decay_rate=lambda p: (p["s"] - 2 * p["m"] * p["β"] * p["ν"]).real,
        osc_freq=lambda p: abs(p["s"].imag),
        default_grid=(
            {"s": 3, "β": 1, "ν": 1, "m": 1},
            {"s": 2.5, "β": 0.5, "ν": 2, "m": 1},
            {"s": 4, "β": 1, "ν": 1.5, "m": 1},
            {"s": 6, "β": 0.5, "ν": 1.5, "m": 2},
            {"s": 5, "β": 0.5, "ν": 0.7, "m": 2},
            {"s": 7, "β": 0.5, "ν": 1.2, "m": 3},
            {"s": 3, "β": 1, "ν": -0.4, "m": 1},
            {"s": 4, "β": 1, "ν": 0.5, "m": 1},
            {"s": 4 + 1j, "β": 1, "ν": 1, "m": 1},
            {"s": 5, "β": 1, "ν": 1 + 0.3j, "m": 1},
        ),
    )
)

_register(
    CatalogEntry(
        id="entry-II",
        equation="Eq. (43)",
        section=2,
        description=(
            "Laplace transform of [sum_{j<n} (-1)^j C(2n,j)·cosh((2n-2j)γx)"
            " + (-1)^n C(2n,n)/2]^ν"
        ),
        params=(
            ParamSpec("s"),
            ParamSpec("γ"),
            ParamSpec("ν"),
            ParamSpec("n", "int"),
        ),
        conditions=(
            Condition("n >= 1", lambda p: p["n"] >= 1),
            Condition("Re(2nν) > -1", lambda p: (2 * p["n"] * p["ν"]).real > -1.0),
            Condition(
                "Re(s - 2nγν) > 0",
                lambda p: (p["s"] - 2 * p["n"] * p["γ"] * p["ν"]).real > 0.0,
            ),
            Condition("Re(γ) > 0", lambda p: p["γ"].real > 0.0),
            Condition(
                "s/(2γ) - nν + 1 ∉ {0,-1,-2,...}",
                lambda p: _not_pole(p["s"] / (2 * p["γ"]) - p["n"] * p["ν"] + 1),
            ),
        ),
        closed_form=lambda p: _entry_II_value(p["s"], p["γ"], p["ν"], p["n"]),
        integrand=_entry_II_integrand,
        decay_rate=lambda p: (p["s"] - 2 * p["n"] * p["γ"] * p["ν"]).real,
        osc_freq=lambda p: abs(p["s"].imag),
        endpoint_power=lambda p: _frac_power((2 * p["n"] * p["ν"]).real),
        default_grid=(
            {"s": 5, "γ": 1, "ν": 1, "n": 1},
            {"s": 3, "γ": 0.5, "ν": 1, "n": 1},
            {"s": 4, "γ": 1, "ν": 1.5, "n": 1},
            {"s": 4, "γ": 1, "ν": 0.5, "n": 1},
            {"s": 3, "γ": 0.5, "ν": -0.3, "n": 1},
            {"s": 5, "γ": 0.5, "ν": 0.8, "n": 2},
            {"s": 6, "γ": 0.4, "ν": 1.1, "n": 3},
            {"s": 4, "γ": 1, "ν": 0.25, "n": 1},
            {"s": 4 + 0.7j, "γ": 1, "ν": 1, "n": 1},
            {"s": 5 + 1j, "γ": 0.5, "ν": 1.5, "n": 1},
        ),
        alt_forms=(
            ("2F1(+1)", lambda p: _entry_II_alt(p["s"], p["γ"], p["ν"], p["n"])),
        ),
    )
)

_register(
    CatalogEntry(
        id="entry-III",
        equation="Eq. (44)",
        section=2,
        description=(
            "Laplace transform of [sum_{k<=p} (-1)^k C(2p+1,k)"
            "·sinh((2p+1-2k)λx)]^ν"
        ),
        params=(
            ParamSpec("s"),
            ParamSpec("λ"),
            ParamSpec("ν"),
            ParamSpec("p", "int"),
        ),
        conditions=(
            Condition("p >= 0", lambda p: p["p"] >= 0),
            Condition(
                "Re((2p+1)ν) > -1",
                lambda p: ((2 * p["p"] + 1) * p["ν"]).real > -1.0,
            ),
            Condition(
                "Re(s - (2p+1)λν) > 0",
                lambda p: (p["s"] - (2 * p["p"] + 1) * p["λ"] * p["ν"]).real > 0.0,
            ),
            Condition("Re(λ) > 0", lambda p: p["λ"].real > 0.0),
            Condition(
                "s/(2λ) - (2p+1)ν/2 + 1 ∉ {0,-1,-2,...}",
                lambda p: _not_pole(
                    p["s"] / (2 * p["λ"]) - (p["p"] + 0.5) * p["ν"] + 1
                ),
            ),
        ),
        closed_form=lambda p: _entry_III_value(p["s"], p["λ"], p["ν"], p["p"]),
        integrand=_entry_III_integrand,
        decay_rate=lambda p: (p["s"] - (2 * p["p"] + 1) * p["λ"] * p["ν"]).real,
        osc_freq=lambda p: abs(p["s"].imag),
        endpoint_power=lambda p: _frac_power(((2 * p["p"] + 1) * p["ν"]).real),
        default_grid=(
            {"s": 3, "λ": 1, "ν": 1, "p": 0},
            {"s": 4, "λ": 1, "ν": 2, "p": 0},
            {"s": 3, "λ": 0.5, "ν": 1.5, "p": 0},
            {"s": 3, "λ": 1, "ν": -0.5, "p": 0},
            {"s": 5, "λ": 0.5, "ν": 1, "p": 1},
            {"s": 6, "λ": 0.5, "ν": 0.8, "p": 1},
            {"s": 7, "λ": 0.4, "ν": 0.9, "p": 2},
            {"s": 4, "λ": 1, "ν": 0.35, "p": 0},
            {"s": 4 + 1j, "λ": 1, "ν": 1, "p": 0},
            {"s": 5 + 0.5j, "λ": 0.5, "ν": 2, "p": 1},
        ),
        alt_forms=(
            ("2F1(+1)", lambda p: _entry_III_alt(p["s"], p["λ"], p["ν"], p["p"])),
        ),
    )
)

_register(
    CatalogEntry(
        id="entry-IV",
        equation="Eq. (45)",
        section=2,
        description=(
            "Laplace transform of [sum_{l<=q} C(2q+1,l)·cosh((2q+1-2l)μx)]^ν"
        ),
        params=(
            ParamSpec("s"),
            ParamSpec("μ"),
            ParamSpec("ν"),
            ParamSpec("q", "int"),
        ),
        conditions=(
            Condition("q >= 0", lambda p: p["q"] >= 0),
            Condition(
                "Re((2q+1)ν) > -2",
                lambda p: ((2 * p["q"] + 1) * p["ν"]).real > -2.0,
            ),
            Condition(
                "Re(s - (2q+1)μν) > 0",
                lambda p: (p["s"] - (2 * p["q"] + 1) * p["μ"] * p["ν"]).real > 0.0,
            ),
            Condition("Re(μ) > 0", lambda p: p["μ"].real > 0.0),
            Condition(
                "s/(2μ) - (2q+1)ν/2 + 1 ∉ {0,-1,-2,...}",
                lambda p: _not_pole(
                    p["s"] / (2 * p["μ"]) - (p["q"] + 0.5) * p["ν"] + 1
                ),
            ),
        ),
        closed_form=lambda p: _entry_IV_value(p["s"], p["μ"], p["ν"], p["q"]),
        integrand=_entry_IV_integrand,
        decay_rate=lambda p: (p["s"] - (2 * p["q"] + 1) * p["μ"] * p["ν"]).real,
        osc_freq=lambda p: abs(p["s"].imag),
        default_grid=(
            {"s": 4, "μ": 1, "ν": 2, "q": 0},
            {"s": 3, "μ": 1, "ν": 1, "q": 0},
            {"s": 3, "μ": 1, "ν": 1.5, "q": 0},
            {"s": 3, "μ": 1, "ν": -1.5, "q": 0},
            {"s": 5, "μ": 0.5, "ν": 1, "q": 1},
            {"s": 6, "μ": 0.5, "ν": 1.4, "q": 1},
            {"s": 8, "μ": 0.4, "ν": 1, "q": 2},
            {"s": 4, "μ": 1, "ν": 0.5, "q": 0},
            {"s": 4 + 1j, "μ": 1, "ν": 2, "q": 0},
            {"s": 5, "μ": 1, "ν": 1 + 0.4j, "q": 0},
        ),
    )
)

_register(
    CatalogEntry(
        id="eq-38",
        equation="Eq. (38)",
        section=2,
        description="Laplace transform of (cosh(γx) - 1)^ν",
        params=(ParamSpec("s"), ParamSpec("γ"), ParamSpec("ν")),
        conditions=(
            Condition("Re(γ) > 0", lambda p: p["γ"].real > 0.0),
            Condition("Re(ν) > -1/2", lambda p: p["ν"].real > -0.5),
            Condition(
                "Re(s - γν) > 0", lambda p: (p["s"] - p["γ"] * p["ν"]).real > 0.0
            ),
            Condition(
                "s/γ - ν + 1 ∉ {0,-1,-2,...}",
                lambda p: _not_pole(p["s"] / p["γ"] - p["ν"] + 1),
            ),
        ),
        closed_form=lambda p: _eq38_value(p["s"], p["γ"], p["ν"]),
        integrand=_eq38_integrand,
        decay_rate=lambda p: (p["s"] - p["γ"] * p["ν"]).real,
        osc_freq=lambda p: abs(p["s"].imag),
        endpoint_power=lambda p: _frac_power(2.0 * p["ν"].real),
        default_grid=(
            {"s": 5, "γ": 2, "ν": 1},
            {"s": 3, "γ": 1, "ν": 1},
            {"s": 3, "γ": 1, "ν": 1.5},
            {"s": 3, "γ": 1, "ν": -0.3},
            {"s": 4, "γ": 1, "ν": 0.75},
            {"s": 4, "γ": 2, "ν": 0.6},
            {"s": 6, "γ": 3, "ν": 1.2},
            {"s": 3, "γ": 0.5, "ν": 2},
            {"s": 4 + 1j, "γ": 1, "ν": 1},
            {"s": 3 + 0.5j, "γ": 1, "ν": 0.8},
        ),
        alt_forms=(("Eq. (39)", lambda p: _eq39_value(p["s"], p["γ"], p["ν"])),),
    )
)

_register(
    CatalogEntry(
        id="eq-40",
        equation="Eq. (40)",
        section=2,
        description="Laplace transform of sinh(λx)^ν",
        params=(ParamSpec("s"), ParamSpec("λ"), ParamSpec("ν")),
        conditions=(
            Condition("Re(λ) > 0", lambda p: p["λ"].real > 0.0),
            Condition("Re(ν) > -1", lambda p: p["ν"].real > -1.0),
            Condition(
                "Re(s - λν) > 0", lambda p: (p["s"] - p["λ"] * p["ν"]).real > 0.0
            ),
            Condition(
                "s/(2λ) - ν/2 + 1 ∉ {0,-1,-2,...}",
                lambda p: _not_pole(p["s"] / (2 * p["λ"]) - 0.5 * p["ν"] + 1),
            ),
        ),
        closed_form=lambda p: _eq40_value(p["s"], p["λ"], p["ν"]),
        integrand=_eq40_integrand,
        decay_rate=lambda p: (p["s"] - p["λ"] * p["ν"]).real,
        osc_freq=lambda p: abs(p["s"].imag),
        endpoint_power=lambda p: _frac_power(p["ν"].real),
        default_grid=(
            {"s": 3, "λ": 1, "ν": 1},
            {"s": 4, "λ": 1, "ν": 2},
            {"s": 3, "λ": 1, "ν": 0.5},
            {"s": 3, "λ": 1, "ν": -0.5},
            {"s": 4, "λ": 2, "ν": 1.3},
            {"s": 5, "λ": 1, "ν": 2.5},
            {"s": 4, "λ": 0.5, "ν": 3},
            {"s": 3, "λ": 2, "ν": -0.2},
            {"s": 3 + 1j, "λ": 1, "ν": 1},
            {"s": 4 + 0.5j, "λ": 1, "ν": 1.5},
        ),
        alt_forms=(("Eq. (41)", lambda p: _eq41_value(p["s"], p["λ"], p["ν"])),),
    )
)

_register(
    CatalogEntry(
        id="novel-V",
        equation="Eq. (46)",
        section=3,
        description="integral of cosh(2αt)/cosh(pt)^(2β) over (0, ∞)",
        params=(ParamSpec("α"), ParamSpec("β"), ParamSpec("p")),
        conditions=(
            Condition("Re(p) > 0", lambda p: p["p"].real > 0.0),
            Condition(
                "Re(β + α/p) > 0", lambda p: (p["β"] + p["α"] / p["p"]).real > 0.0
            ),
            Condition(
                "Re(β - α/p) > 0", lambda p: (p["β"] - p["α"] / p["p"]).real > 0.0
            ),
            Condition("Re(β) < 1", lambda p: p["β"].real < 1.0, enforced=False),
        ),
        closed_form=lambda p: _novel_V_value(p["α"], p["β"], p["p"]),
        integrand=_novel_V_integrand,
        decay_rate=lambda p: 2.0 * (p["β"] * p["p"]).real - 2.0 * abs(p["α"].real),
        osc_freq=lambda p: 2.0 * abs(p["α"].imag) + 2.0 * abs((p["β"] * p["p"]).imag),
        default_grid=(
            {"α": 0, "β": 1, "p": 1},
            {"α": 0, "β": 1.5, "p": 1},
            {"α": 0.5, "β": 1, "p": 1},
            {"α": 0.25, "β": 0.5, "p": 1},
            {"α": 1, "β": 2, "p": 1},
            {"α": 0.5, "β": 1, "p": 2},
            {"α": 0, "β": 0.75, "p": 1.5},
            {"α": 1, "β": 1.1, "p": 1.3},
            {"α": 0.3j, "β": 1, "p": 1},
            {"α": 0.2, "β": 1 + 0.2j, "p": 1},
        ),
    )
)

_register(
    CatalogEntry(
        id="novel-VI",
        equation="Eq. (47)",
        section=3,
        description="integral of sinh(x)^α/cosh(x)^β over (0, ∞)",
        params=(ParamSpec("α"), ParamSpec("β")),
        conditions=(
            Condition("Re(α) > -1", lambda p: p["α"].real > -1.0),
            Condition("Re(α - β) < 0", lambda p: (p["α"] - p["β"]).real < 0.0),
            Condition(
                "Re(α - β) > -2",
                lambda p: (p["α"] - p["β"]).real > -2.0,
                enforced=False,
            ),
        ),
        closed_form=lambda p: _novel_VI_value(p["α"], p["β"]),
        integrand=_novel_VI_integrand,
        decay_rate=lambda p: (p["β"] - p["α"]).real,
        osc_freq=lambda p: abs(p["α"].imag) + abs(p["β"].imag),
        endpoint_power=lambda p: _frac_power(p["α"].real),
        default_grid=(
            {"α": 0, "β": 2},
            {"α": 1, "β": 3},
            {"α": 0, "β": 1},
            {"α": 0.5, "β": 2},
            {"α": -0.5, "β": 1.5},
            {"α": 2, "β": 4.5},
            {"α": 1.3, "β": 2.1},
            {"α": -0.8, "β": 0.4},
            {"α": 0.5, "β": 2 + 1j},
            {"α": 1 + 0.3j, "β": 3},
        ),
    )
)

_register(
    CatalogEntry(
        id="novel-VII",
        equation="Eq. (48)",
        section=3,
        description="integral of cos(ax)/cosh(βx)^ν over (0, ∞)",
        params=(ParamSpec("a"), ParamSpec("β"), ParamSpec("ν")),
        conditions=(
            Condition("Re(β) > 0", lambda p: p["β"].real > 0.0),
            Condition(
                "Re(νβ + ia) > 0",
                lambda p: (p["ν"] * p["β"] + 1j * p["a"]).real > 0.0,
            ),
            Condition(
                "Re(νβ - ia) > 0",
                lambda p: (p["ν"] * p["β"] - 1j * p["a"]).real > 0.0,
            ),
            Condition("Re(ν) < 2", lambda p: p["ν"].real < 2.0, enforced=False),
        ),
        closed_form=lambda p: _novel_VII_value(p["a"], p["β"], p["ν"]),
        integrand=_novel_VII_integrand,
        decay_rate=lambda p: (p["ν"] * p["β"]).real - abs(p["a"].imag),
        osc_freq=lambda p: abs(p["a"].real) + abs((p["ν"] * p["β"]).imag),
        default_grid=(
            {"a": 0, "β": 1, "ν": 2},
            {"a": 1, "β": 1, "ν": 2},
            {"a": 1, "β": 1, "ν": 1},
            {"a": 0.5, "β": 1, "ν": 1.5},
            {"a": 2, "β": 1, "ν": 1},
            {"a": 1, "β": 2, "ν": 0.75},
            {"a": 0, "β": 1, "ν": 0.5},
            {"a": 1.5, "β": 0.5, "ν": 3},
            {"a": 1 + 0.3j, "β": 1, "ν": 2},
            {"a": 1, "β": 1 + 0.5j, "ν": 1.2},
        ),
    )
)


def _register_s4(entry_id, equation, fname, kname, kmin, desc, grid):
    _register(
        CatalogEntry(
            id=entry_id,
            equation=equation,
            section=4,
            description=desc,
            params=(
                ParamSpec("s"),
                ParamSpec(fname),
                ParamSpec(kname, "int"),
            ),
            conditions=(
                Condition(f"{kname} >= {kmin}", lambda p: p[kname] >= kmin),
                Condition(
                    f"Re(s) > exponent·|Im({fname})|",
                    lambda p: p["s"].real
                    > _s4_exponent(entry_id, p[kname]) * abs(p[fname].imag),
                ),
            ),
            closed_form=lambda p: _s4_value(entry_id, p),
            integrand=lambda p: _s4_integrand(entry_id, p),
            decay_rate=lambda p: p["s"].real
            - _s4_exponent(entry_id, p[kname]) * abs(p[fname].imag),
            osc_freq=lambda p: _s4_exponent(entry_id, p[kname])
            * abs(p[fname].real)
            + abs(p["s"].imag),
            default_grid=grid,
            alt_forms=_S4_ALTS[entry_id],
        )
    )


_S4_ALTS = {
    "eq-74": (("Eq. (75)", _eq75_value),),
    "eq-76": (("Eq. (77)", _eq77_value),),
    "eq-78": (("Eq. (79)", _eq79_value),),
    "eq-80": (("Eq. (81)", _eq81_value),),
}

_register_s4(
    "eq-74",
    "Eq. (74)",
    "β",
    "m",
    1,
    "Laplace transform of cos(βx)^(2m)",
    (
        {"s": 2, "β": 1, "m": 1},
        {"s": 1, "β": 1, "m": 1},
        {"s": 1, "β": 2, "m": 2},
        {"s": 3, "β": 0.5, "m": 2},
        {"s": 2, "β": 3, "m": 1},
        {"s": 1.5, "β": 1, "m": 3},
        {"s": 2, "β": 2.5, "m": 4},
        {"s": 0.8, "β": 1, "m": 1},
        {"s": 2 + 1j, "β": 1, "m": 1},
        {"s": 3, "β": 1 + 0.5j, "m": 1},
    ),
)

_register_s4(
    "eq-76",
    "Eq. (76)",
    "γ",
    "n",
    1,
    "Laplace transform of sin(γx)^(2n)",
    (
        {"s": 1, "γ": 1, "n": 1},
        {"s": 2, "γ": 1, "n": 1},
        {"s": 1, "γ": 2, "n": 1},
        {"s": 2, "γ": 1, "n": 2},
        {"s": 3, "γ": 0.5, "n": 3},
        {"s": 1.2, "γ": 1.5, "n": 2},
        {"s": 0.7, "γ": 1, "n": 1},
        {"s": 2, "γ": 2, "n": 4},
        {"s": 2 + 1j, "γ": 1, "n": 1},
        {"s": 2, "γ": 1 + 0.4j, "n": 1},
    ),
)

_register_s4(
    "eq-78",
    "Eq. (78)",
    "λ",
    "p",
    0,
    "Laplace transform of sin(λx)^(2p+1)",
    (
        {"s": 2, "λ": 1, "p": 1},
        {"s": 1, "λ": 1, "p": 0},
        {"s": 1, "λ": 2, "p": 0},
        {"s": 2, "λ": 1, "p": 2},
        {"s": 1.5, "λ": 0.5, "p": 1},
        {"s": 3, "λ": 2, "p": 3},
        {"s": 0.6, "λ": 1, "p": 0},
        {"s": 2, "λ": 1.5, "p": 1},
        {"s": 1 + 0.8j, "λ": 1, "p": 0},
        {"s": 2, "λ": 1 + 0.3j, "p": 1},
    ),
)

_register_s4(
    "eq-80",
    "Eq. (80)",
    "μ",
    "q",
    0,
    "Laplace transform of cos(μx)^(2q+1)",
    (
        {"s": 1, "μ": 2, "q": 0},
        {"s": 1, "μ": 1, "q": 0},
        {"s": 2, "μ": 1, "q": 1},
        {"s": 1, "μ": 0.5, "q": 2},
        {"s": 2.5, "μ": 2, "q": 2},
        {"s": 0.8, "μ": 1, "q": 1},
        {"s": 3, "μ": 1, "q": 3},
        {"s": 1.5, "μ": 2.5, "q": 1},
        {"s": 1 + 1j, "μ": 1, "q": 0},
        {"s": 2, "μ": 2 + 0.5j, "q": 1},
    ),
)


# --- section 5 presets -----------------------------------------------------

def _preset(
    entry_id,
    equation,
    description,
    params,
    conditions,
    parent,
    mapper,
    grid,
    closed_form=None,
):
    """Register a named special case delegating to a general entry."""
    parent_entry = get_entry(parent)
    mapped = mapper
    cf = closed_form or (lambda p: parent_entry.closed_form(mapped(p)))
    _register(
        CatalogEntry(
            id=entry_id,
            equation=equation,
            section=5,
            description=description,
            params=params,
            conditions=conditions,
            closed_form=cf,
            integrand=lambda p: parent_entry.integrand(mapped(p)),
            decay_rate=lambda p: parent_entry.decay_rate(mapped(p)),
            osc_freq=lambda p: parent_entry.osc_freq(mapped(p)),
            endpoint_power=lambda p: parent_entry.endpoint_power(mapped(p)),
            default_grid=grid,
        )
    )


_preset(
    "eq-97",
    "Eq. (97)",
    "Laplace transform of (cosh(βx) + 1)^ν",
    (ParamSpec("s"), ParamSpec("β"), ParamSpec("ν")),
    (
        Condition("Re(β) > 0", lambda p: p["β"].real > 0.0),
        Condition("Re(ν) > -1", lambda p: p["ν"].real > -1.0),
        Condition("Re(s - βν) > 0", lambda p: (p["s"] - p["β"] * p["ν"]).real > 0.0),
        Condition(
            "s/β - ν + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(p["s"] / p["β"] - p["ν"] + 1),
        ),
    ),
    "entry-I",
    lambda p: {"s": p["s"], "β": p["β"] / 2, "ν": p["ν"], "m": 1},
    (
        {"s": 3, "β": 1, "ν": 1},
        {"s": 4, "β": 1, "ν": 1.5},
        {"s": 3, "β": 1, "ν": -0.4},
        {"s": 5, "β": 2, "ν": 1},
        {"s": 4, "β": 0.5, "ν": 2},
        {"s": 6, "β": 1, "ν": 2.5},
        {"s": 4 + 1j, "β": 1, "ν": 1},
        {"s": 5, "β": 1, "ν": 1 + 0.3j},
    ),
)

_preset(
    "eq-98",
    "Eq. (98)",
    "Laplace transform of (cosh(βx) + 4cosh(βx/2) + 3)^ν",
    (ParamSpec("s"), ParamSpec("β"), ParamSpec("ν")),
    (
        Condition("Re(β) > 0", lambda p: p["β"].real > 0.0),
        Condition("Re(ν) > -1/2", lambda p: p["ν"].real > -0.5),
        Condition("Re(s - βν) > 0", lambda p: (p["s"] - p["β"] * p["ν"]).real > 0.0),
        Condition(
            "2s/β - 2ν + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(2 * p["s"] / p["β"] - 2 * p["ν"] + 1),
        ),
    ),
    "entry-I",
    lambda p: {"s": p["s"], "β": p["β"] / 4, "ν": p["ν"], "m": 2},
    (
        {"s": 3, "β": 1, "ν": 1},
        {"s": 4, "β": 1, "ν": 1.5},
        {"s": 3, "β": 1, "ν": -0.3},
        {"s": 5, "β": 2, "ν": 1},
        {"s": 4, "β": 0.5, "ν": 2},
        {"s": 6, "β": 1, "ν": 2},
        {"s": 4 + 1j, "β": 1, "ν": 1},
        {"s": 5, "β": 1, "ν": 1 + 0.3j},
    ),
)

_preset(
    "eq-99",
    "Eq. (99)",
    "Laplace transform of (cosh(βx) + 6cosh(2βx/3) + 15cosh(βx/3) + 10)^ν",
    (ParamSpec("s"), ParamSpec("β"), ParamSpec("ν")),
    (
        Condition("Re(β) > 0", lambda p: p["β"].real > 0.0),
        Condition("Re(ν) > -1/3", lambda p: p["ν"].real > -1.0 / 3.0),
        Condition("Re(s - βν) > 0", lambda p: (p["s"] - p["β"] * p["ν"]).real > 0.0),
        Condition(
            "3s/β - 3ν + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(3 * p["s"] / p["β"] - 3 * p["ν"] + 1),
        ),
    ),
    "entry-I",
    lambda p: {"s": p["s"], "β": p["β"] / 6, "ν": p["ν"], "m": 3},
    (
        {"s": 4, "β": 1, "ν": 1},
        {"s": 5, "β": 1, "ν": 1.5},
        {"s": 3, "β": 1, "ν": -0.2},
        {"s": 6, "β": 2, "ν": 1},
        {"s": 5, "β": 0.5, "ν": 2},
        {"s": 7, "β": 1, "ν": 2},
        {"s": 5 + 1j, "β": 1, "ν": 1},
        {"s": 6, "β": 1, "ν": 1 + 0.3j},
    ),
)

_preset(
    "eq-100",
    "Eq. (100)",
    "Laplace transform of (cosh(γx) - 4cosh(γx/2) + 3)^ν",
    (ParamSpec("s"), ParamSpec("γ"), ParamSpec("ν")),
    (
        Condition("Re(γ) > 0", lambda p: p["γ"].real > 0.0),
        Condition("Re(ν) > -1/4", lambda p: p["ν"].real > -0.25),
        Condition("Re(s - γν) > 0", lambda p: (p["s"] - p["γ"] * p["ν"]).real > 0.0),
        Condition(
            "2s/γ - 2ν + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(2 * p["s"] / p["γ"] - 2 * p["ν"] + 1),
        ),
    ),
    "entry-II",
    lambda p: {"s": p["s"], "γ": p["γ"] / 4, "ν": p["ν"], "n": 2},
    (
        {"s": 3, "γ": 1, "ν": 1},
        {"s": 4, "γ": 1, "ν": 0.6},
        {"s": 3, "γ": 1, "ν": -0.2},
        {"s": 5, "γ": 2, "ν": 1},
        {"s": 4, "γ": 1, "ν": 1.5},
        {"s": 6, "γ": 1, "ν": 2},
        {"s": 4 + 1j, "γ": 1, "ν": 1},
        {"s": 5 + 0.5j, "γ": 1, "ν": 0.5},
    ),
)

_preset(
    "eq-101",
    "Eq. (101)",
    "Laplace transform of (cosh(γx) - 6cosh(2γx/3) + 15cosh(γx/3) - 10)^ν",
    (ParamSpec("s"), ParamSpec("γ"), ParamSpec("ν")),
    (
        Condition("Re(γ) > 0", lambda p: p["γ"].real > 0.0),
        Condition("Re(ν) > -1/6", lambda p: p["ν"].real > -1.0 / 6.0),
        Condition("Re(s - γν) > 0", lambda p: (p["s"] - p["γ"] * p["ν"]).real > 0.0),
        Condition(
            "3s/γ - 3ν + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(3 * p["s"] / p["γ"] - 3 * p["ν"] + 1),
        ),
    ),
    "entry-II",
    lambda p: {"s": p["s"], "γ": p["γ"] / 6, "ν": p["ν"], "n": 3},
    (
        {"s": 4, "γ": 1, "ν": 1},
        {"s": 5, "γ": 1, "ν": 0.7},
        {"s": 3, "γ": 1, "ν": -0.1},
        {"s": 6, "γ": 2, "ν": 1},
        {"s": 5, "γ": 1, "ν": 1.4},
        {"s": 7, "γ": 1, "ν": 2},
        {"s": 5 + 1j, "γ": 1, "ν": 1},
        {"s": 6, "γ": 1, "ν": 0.8},
    ),
)

_preset(
    "eq-102",
    "Eq. (102)",
    "Laplace transform of (sinh(λx) - 3sinh(λx/3))^ν",
    (ParamSpec("s"), ParamSpec("λ"), ParamSpec("ν")),
    (
        Condition("Re(λ) > 0", lambda p: p["λ"].real > 0.0),
        Condition("Re(ν) > -1/3", lambda p: p["ν"].real > -1.0 / 3.0),
        Condition("Re(s - λν) > 0", lambda p: (p["s"] - p["λ"] * p["ν"]).real > 0.0),
        Condition(
            "3s/(2λ) - 3ν/2 + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(1.5 * p["s"] / p["λ"] - 1.5 * p["ν"] + 1),
        ),
    ),
    "entry-III",
    lambda p: {"s": p["s"], "λ": p["λ"] / 3, "ν": p["ν"], "p": 1},
    (
        {"s": 3, "λ": 1, "ν": 1},
        {"s": 4, "λ": 1, "ν": 0.8},
        {"s": 3, "λ": 1, "ν": -0.25},
        {"s": 5, "λ": 2, "ν": 1},
        {"s": 4, "λ": 1, "ν": 1.5},
        {"s": 6, "λ": 1, "ν": 2},
        {"s": 4 + 1j, "λ": 1, "ν": 1},
        {"s": 5 + 0.5j, "λ": 1, "ν": 0.6},
    ),
)

_preset(
    "eq-103",
    "Eq. (103)",
    "Laplace transform of (sinh(λx) - 5sinh(3λx/5) + 10sinh(λx/5))^ν",
    (ParamSpec("s"), ParamSpec("λ"), ParamSpec("ν")),
    (
        Condition("Re(λ) > 0", lambda p: p["λ"].real > 0.0),
        Condition("Re(ν) > -1/5", lambda p: p["ν"].real > -0.2),
        Condition("Re(s - λν) > 0", lambda p: (p["s"] - p["λ"] * p["ν"]).real > 0.0),
        Condition(
            "5s/(2λ) - 5ν/2 + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(2.5 * p["s"] / p["λ"] - 2.5 * p["ν"] + 1),
        ),
    ),
    "entry-III",
    lambda p: {"s": p["s"], "λ": p["λ"] / 5, "ν": p["ν"], "p": 2},
    (
        {"s": 4, "λ": 1, "ν": 1},
        {"s": 5, "λ": 1, "ν": 0.8},
        {"s": 3, "λ": 1, "ν": -0.15},
        {"s": 6, "λ": 2, "ν": 1},
        {"s": 5, "λ": 1, "ν": 1.3},
        {"s": 7, "λ": 1, "ν": 2},
        {"s": 5 + 1j, "λ": 1, "ν": 1},
        {"s": 6, "λ": 1, "ν": 0.5},
    ),
)

_preset(
    "eq-104",
    "Eq. (104)",
    "Laplace transform of cosh(μx)^ν",
    (ParamSpec("s"), ParamSpec("μ"), ParamSpec("ν")),
    (
        Condition("Re(μ) > 0", lambda p: p["μ"].real > 0.0),
        Condition("Re(ν) > -2", lambda p: p["ν"].real > -2.0),
        Condition("Re(s - μν) > 0", lambda p: (p["s"] - p["μ"] * p["ν"]).real > 0.0),
        Condition(
            "s/(2μ) - ν/2 + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(0.5 * p["s"] / p["μ"] - 0.5 * p["ν"] + 1),
        ),
    ),
    "entry-IV",
    lambda p: {"s": p["s"], "μ": p["μ"], "ν": p["ν"], "q": 0},
    (
        {"s": 3, "μ": 1, "ν": 1},
        {"s": 4, "μ": 1, "ν": 2},
        {"s": 3, "μ": 1, "ν": 1.5},
        {"s": 3, "μ": 1, "ν": -1.5},
        {"s": 5, "μ": 2, "ν": 1.2},
        {"s": 4, "μ": 1, "ν": 0.5},
        {"s": 4 + 1j, "μ": 1, "ν": 2},
        {"s": 5, "μ": 1, "ν": 1 + 0.4j},
    ),
)

_preset(
    "eq-105",
    "Eq. (105)",
    "Laplace transform of (cosh(μx) + 3cosh(μx/3))^ν",
    (ParamSpec("s"), ParamSpec("μ"), ParamSpec("ν")),
    (
        Condition("Re(μ) > 0", lambda p: p["μ"].real > 0.0),
        Condition("Re(ν) > -2/3", lambda p: p["ν"].real > -2.0 / 3.0),
        Condition("Re(s - μν) > 0", lambda p: (p["s"] - p["μ"] * p["ν"]).real > 0.0),
        Condition(
            "3s/(2μ) - 3ν/2 + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(1.5 * p["s"] / p["μ"] - 1.5 * p["ν"] + 1),
        ),
    ),
    "entry-IV",
    lambda p: {"s": p["s"], "μ": p["μ"] / 3, "ν": p["ν"], "q": 1},
    (
        {"s": 3, "μ": 1, "ν": 1},
        {"s": 4, "μ": 1, "ν": 2},
        {"s": 3, "μ": 1, "ν": 1.4},
        {"s": 3, "μ": 1, "ν": -0.5},
        {"s": 5, "μ": 2, "ν": 1},
        {"s": 4, "μ": 1, "ν": 0.5},
        {"s": 4 + 1j, "μ": 1, "ν": 2},
        {"s": 5, "μ": 1, "ν": 1 + 0.4j},
    ),
)

_preset(
    "eq-106",
    "Eq. (106)",
    "Laplace transform of (cosh(μx) + 5cosh(3μx/5) + 10cosh(μx/5))^ν",
    (ParamSpec("s"), ParamSpec("μ"), ParamSpec("ν")),
    (
        Condition("Re(μ) > 0", lambda p: p["μ"].real > 0.0),
        Condition("Re(ν) > -2/5", lambda p: p["ν"].real > -0.4),
        Condition("Re(s - μν) > 0", lambda p: (p["s"] - p["μ"] * p["ν"]).real > 0.0),
        Condition(
            "5s/(2μ) - 5ν/2 + 1 ∉ {0,-1,-2,...}",
            lambda p: _not_pole(2.5 * p["s"] / p["μ"] - 2.5 * p["ν"] + 1),
        ),
    ),
    "entry-IV",
    lambda p: {"s": p["s"], "μ": p["μ"] / 5, "ν": p["ν"], "q": 2},
    (
        {"s": 4, "μ": 1, "ν": 1},
        {"s": 5, "μ": 1, "ν": 2},
        {"s": 4, "μ": 1, "ν": 1.3},
        {"s": 3, "μ": 1, "ν": -0.3},
        {"s": 6, "μ": 2, "ν": 1},
        {"s": 5, "μ": 1, "ν": 0.5},
        {"s": 5 + 1j, "μ": 1, "ν": 2},
        {"s": 6, "μ": 1, "ν": 1 + 0.4j},
    ),
)

_preset(
    "eq-107",
    "Eq. (107)",
    "integral of 1/cosh(t)^(2μ) over (0, ∞)",
    (ParamSpec("μ"),),
    (Condition("Re(μ) > 0", lambda p: p["μ"].real > 0.0),),
    "novel-V",
    lambda p: {"α": 0j, "β": p["μ"], "p": 1 + 0j},
    (
        {"μ": 0.5},
        {"μ": 0.75},
        {"μ": 1},
        {"μ": 1.5},
        {"μ": 2},
        {"μ": 3},
        {"μ": 1 + 0.5j},
        {"μ": 2 + 1j},
    ),
)

_preset(
    "eq-108",
    "Eq. (108)",
    "integral of cosh(at)/cosh(bt) over (0, ∞)",
    (ParamSpec("a", "real"), ParamSpec("b", "real")),
    (Condition("b > |a|", lambda p: p["b"] > abs(p["a"])),),
    "novel-V",
    lambda p: {"α": complex(p["a"] / 2), "β": 0.5 + 0j, "p": complex(p["b"])},
    (
        {"a": 1, "b": 2},
        {"a": 0, "b": 1},
        {"a": 0.5, "b": 1},
        {"a": 1, "b": 1.5},
        {"a": 2, "b": 3},
        {"a": -0.5, "b": 1},
        {"a": 1.5, "b": 2},
        {"a": 0.25, "b": 0.75},
    ),
)

_preset(
    "eq-109",
    "Eq. (109)",
    "integral of cosh(at)/cosh(πt) over (0, ∞)",
    (ParamSpec("a", "real"),),
    (Condition("-π < a < π", lambda p: -math.pi < p["a"] < math.pi),),
    "novel-V",
    lambda p: {"α": complex(p["a"] / 2), "β": 0.5 + 0j, "p": complex(math.pi)},
    (
        {"a": 0},
        {"a": 0.5},
        {"a": 1},
        {"a": 1.5},
        {"a": 2},
        {"a": 2.5},
        {"a": -1},
        {"a": -2},
    ),
)

_preset(
    "eq-110",
    "Eq. (110)",
    "integral of cosh(at)/cosh(t) over (0, ∞)",
    (ParamSpec("a", "real"),),
    (Condition("|a| < 1", lambda p: abs(p["a"]) < 1.0),),
    "novel-V",
    lambda p: {"α": complex(p["a"] / 2), "β": 0.5 + 0j, "p": 1 + 0j},
    (
        {"a": 0},
        {"a": 0.2},
        {"a": 0.4},
        {"a": 0.5},
        {"a": 0.6},
        {"a": -0.3},
        {"a": -0.6},
        {"a": 0.8},
    ),
)

_preset(
    "eq-111",
    "Eq. (111)",
    "integral of 1/cosh(at) over (0, ∞)",
    (ParamSpec("a", "real"),),
    (Condition("a > 0", lambda p: p["a"] > 0.0),),
    "novel-V",
    lambda p: {"α": 0j, "β": 0.5 + 0j, "p": complex(p["a"])},
    (
        {"a": 0.5},
        {"a": 0.75},
        {"a": 1},
        {"a": 1.5},
        {"a": 2},
        {"a": 3},
        {"a": 4},
        {"a": 0.3},
    ),
)

_preset(
    "eq-112",
    "Eq. (112)",
    "integral of cosh(2αt)/cosh(pt)^2 over (0, ∞)",
    (ParamSpec("α"), ParamSpec("p")),
    (
        Condition("Re(p) > 0", lambda p: p["p"].real > 0.0),
        Condition(
            "Re(1 + α/p) > 0", lambda p: (1 + p["α"] / p["p"]).real > 0.0
        ),
        Condition(
            "Re(1 - α/p) > 0", lambda p: (1 - p["α"] / p["p"]).real > 0.0
        ),
    ),
    "novel-V",
    lambda p: {"α": p["α"], "β": 1 + 0j, "p": p["p"]},
    (
        {"α": 0.25, "p": 1},
        {"α": 0.5, "p": 1},
        {"α": 0.5, "p": 1.5},
        {"α": 1, "p": 2},
        {"α": 0.3, "p": 0.8},
        {"α": 1.5, "p": 2.5},
        {"α": 0.2, "p": 0.6},
        {"α": 0.75, "p": 1.25},
    ),
)

_preset(
    "eq-113",
    "Eq. (113)",
    "integral of 1/cosh(t)^μ over (0, ∞)",
    (ParamSpec("μ"),),
    (Condition("Re(μ) > 0", lambda p: p["μ"].real > 0.0),),
    "novel-VI",
    lambda p: {"α": 0j, "β": p["μ"]},
    (
        {"μ": 1},
        {"μ": 2},
        {"μ": 3},
        {"μ": 0.5},
        {"μ": 1.5},
        {"μ": 4},
        {"μ": 2 + 1j},
        {"μ": 1 + 0.5j},
    ),
)

_preset(
    "eq-114",
    "Eq. (114)",
    "integral of 1/cosh(x)^2 over (0, ∞)",
    (),
    (),
    "novel-VII",
    lambda p: {"a": 0j, "β": 1 + 0j, "ν": 2 + 0j},
    ({},),
)

_preset(
    "eq-115",
    "Eq. (115)",
    "integral of cos(ax)/cosh(βx)^2 over (0, ∞)",
    (ParamSpec("a", "real"), ParamSpec("β")),
    (
        Condition("Re(β) > 0", lambda p: p["β"].real > 0.0),
        Condition("a > 0", lambda p: p["a"] > 0.0),
    ),
    "novel-VII",
    lambda p: {"a": complex(p["a"]), "β": p["β"], "ν": 2 + 0j},
    (
        {"a": 0.5, "β": 1},
        {"a": 1, "β": 1},
        {"a": 1.5, "β": 1},
        {"a": 2, "β": 1},
        {"a": 2.5, "β": 1},
        {"a": 1, "β": 2},
        {"a": 2, "β": 1.5},
        {"a": 0.75, "β": 0.5},
    ),
)

_register(
    CatalogEntry(
        id="eq-116",
        equation="Eq. (116)",
        section=5,
        description="integral of -x·sin(ax)/cosh(x)^2 over (0, ∞)",
        params=(ParamSpec("a", "real"),),
        conditions=(Condition("a > 0", lambda p: p["a"] > 0.0),),
        closed_form=lambda p: complex(_eq116_value(p["a"])),
        integrand=_eq116_integrand,
        decay_rate=lambda p: 1.5,
        osc_freq=lambda p: abs(p["a"]),
        default_grid=(
            {"a": 0.25},
            {"a": 0.5},
            {"a": 0.75},
            {"a": 1},
            {"a": 1.5},
            {"a": 2},
            {"a": 2.5},
            {"a": 3},
        ),
    )
)
