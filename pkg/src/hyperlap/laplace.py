"""Termwise Laplace transforms of spectral forms.

Each spectral term has an elementary transform: k -> k/s, sin(ax) ->
a/(s^2+a^2), cos(ax) -> s/(s^2+a^2) and the hyperbolic analogues with
s^2-a^2 denominators. A whole form is transformed term by term after
checking the abscissa of convergence, which is 0 for circular terms and the
frequency itself for hyperbolic ones.
"""

import math

from .errors import DomainError, FamilyMismatch
from .spectral import SpectralForm, SpectralTerm, TermKind, expand_power
from .spectral import product as spectral_product

_HYPERBOLIC = (TermKind.SINH, TermKind.COSH)
_CIRCULAR = (TermKind.SIN, TermKind.COS)


def _term_laplace(kind, coeff, alpha, s):
    if kind is TermKind.CONST:
        return coeff / s
    if kind is TermKind.SIN:
        return coeff * alpha / (s * s + alpha * alpha)
    if kind is TermKind.COS:
        return coeff * s / (s * s + alpha * alpha)
    if kind is TermKind.SINH:
        return coeff * alpha / (s * s - alpha * alpha)
    return coeff * s / (s * s - alpha * alpha)


def _sum_terms(values):
    return complex(
        math.fsum(v.real for v in values), math.fsum(v.imag for v in values)
    )


def laplace_spectral(f: SpectralForm, s) -> complex:
    """Transform a spectral form at the (complex) point s.

    Requires Re(s) strictly above the largest per-term damping bound; a
    constant-only form merely needs s != 0.
    """
    s = complex(s)
    bounds = [
        t.frequency if t.kind in _HYPERBOLIC else 0.0
        for t in f.terms
        if t.kind is not TermKind.CONST
    ]
    if bounds:
        bound = max(bounds)
        if not s.real > bound:
            raise DomainError(
                f"Laplace transform needs Re(s) > {bound:g}, got s = {s}",
                violated=(f"Re(s) > {bound:g}",),
            )
    elif f.terms and s == 0:
        raise DomainError(
            "Laplace transform of a constant needs s != 0",
            violated=("s != 0",),
        )
    return _sum_terms(
        [_term_laplace(t.kind, t.coefficient, t.frequency, s) for t in f.terms]
    )


def integer_power_transform(kind, exponent, frequency, s) -> complex:
    """Transform of kind(frequency*x)**exponent.

    For circular kinds the frequency may be complex; the transform is then
    assembled termwise from the unit-frequency expansion, valid for
    Re(s) > exponent*|Im(frequency)|. Hyperbolic kinds take real frequencies
    and go through the spectral pipeline directly.
    """
    kind = TermKind(kind)
    s = complex(s)
    f = complex(frequency)
    if kind in _HYPERBOLIC:
        if f.imag != 0.0:
            raise DomainError("hyperbolic powers take a real frequency")
        return laplace_spectral(expand_power(kind, exponent, f.real), s)
    base = expand_power(kind, exponent, 1.0)
    bound = exponent * abs(f.imag)
    if not s.real > bound:
        raise DomainError(
            f"need Re(s) > {bound:g} for this power, got s = {s}",
            violated=(f"Re(s) > {bound:g}",),
        )
    return _sum_terms(
        [_term_laplace(t.kind, t.coefficient, t.frequency * f, s) for t in base.terms]
    )


def product_transform(factors, s) -> complex:
    """Transform of a product of circular powers.

    factors is a sequence of (kind, exponent, frequency) triples with real
    frequencies; the product is expanded to a single merged spectral form
    and transformed termwise.
    """
    s = complex(s)
    form = SpectralForm([SpectralTerm(TermKind.CONST, 1.0)])
    for kind, exponent, frequency in factors:
        kind = TermKind(kind)
        if kind in _HYPERBOLIC:
            raise FamilyMismatch("product transforms take circular factors only")
        f = complex(frequency)
        if f.imag != 0.0:
            raise DomainError("product factors take real frequencies")
        form = spectral_product(form, expand_power(kind, exponent, f.real))
    return laplace_spectral(form, s)
