"""Finite trig/hyperbolic polynomials: power reduction and product-to-sum.

A SpectralForm is a merged combination of sin/cos/sinh/cosh/const terms with
non-negative real frequencies. Power reduction rewrites kind**n as such a
form with exact dyadic coefficients built from integer binomials, and the
product operation folds the classical product-to-sum identities termwise, so
arbitrary products of powers stay finite and closed under both operations.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import FamilyMismatch


class TermKind(enum.Enum):
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"
    CONST = "const"


class Family(enum.Enum):
    CIRCULAR = "circular"
    HYPERBOLIC = "hyperbolic"


_FAMILY_OF = {
    TermKind.SIN: Family.CIRCULAR,
    TermKind.COS: Family.CIRCULAR,
    TermKind.SINH: Family.HYPERBOLIC,
    TermKind.COSH: Family.HYPERBOLIC,
    TermKind.CONST: None,
}

_ODD = (TermKind.SIN, TermKind.SINH)

# Display and merge order: descending frequency, cos-like before sin-like,
# constant last.
_KIND_RANK = {
    TermKind.COS: 0,
    TermKind.SIN: 1,
    TermKind.COSH: 0,
    TermKind.SINH: 1,
    TermKind.CONST: 2,
}

_FUNC = {
    TermKind.SIN: np.sin,
    TermKind.COS: np.cos,
    TermKind.SINH: np.sinh,
    TermKind.COSH: np.cosh,
}


@dataclass(frozen=True)
class SpectralTerm:
    """One summand coefficient*kind(frequency*x).

    Negative frequencies are normalized away at construction using parity
    (sin and sinh are odd, cos and cosh even), and zero-frequency terms
    collapse to constants, keeping kind == CONST equivalent to frequency 0.
    """

    kind: TermKind
    coefficient: float
    frequency: float = 0.0

    def __post_init__(self):
        kind = TermKind(self.kind)
        coeff = float(self.coefficient)
        freq = float(self.frequency)
        if freq < 0.0:
            freq = -freq
            if kind in _ODD:
                coeff = -coeff
        if freq == 0.0 and kind is not TermKind.CONST:
            coeff = 0.0 if kind in _ODD else coeff
            kind = TermKind.CONST
        if kind is TermKind.CONST:
            freq = 0.0
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "coefficient", coeff)
        object.__setattr__(self, "frequency", freq)

    @property
    def family(self):
        return _FAMILY_OF[self.kind]


def _term_sort_key(t):
    return (_KIND_RANK[t.kind] == 2, -t.frequency, _KIND_RANK[t.kind])


@dataclass(frozen=True)
class SpectralForm:
    """A merged, family-homogeneous list of spectral terms.

    family is CIRCULAR or HYPERBOLIC once a non-constant term is present and
    None for empty or constant-only forms, which combine with either family.
    """

    terms: tuple
    family: Family | None

    def __init__(self, terms=(), family=None):
        fam = Family(family) if family is not None else None
        merged = {}
        for t in terms:
            if not isinstance(t, SpectralTerm):
                t = SpectralTerm(*t)
            tfam = t.family
            if tfam is not None:
                if fam is None:
                    fam = tfam
                elif fam is not tfam:
                    raise FamilyMismatch(
                        f"cannot mix {fam.value} and {tfam.value} terms"
                    )
            key = (t.kind, t.frequency)
            merged[key] = merged.get(key, 0.0) + t.coefficient
        kept = [
            SpectralTerm(kind, coeff, freq)
            for (kind, freq), coeff in merged.items()
            if coeff != 0.0
        ]
        kept.sort(key=_term_sort_key)
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "family", fam)


def expand_power(kind, exponent, frequency) -> SpectralForm:
    """Rewrite kind(frequency*x)**exponent as a single-frequency-per-term form.

    Even powers of sin/cos reduce to cosines plus a constant, even powers of
    sinh/cosh to hyperbolic cosines plus a constant, and odd powers stay in
    the original kind. Coefficients are binomials divided by a power of two,
    so they are exact doubles for any exponent up to 50. The returned form
    has ceil((exponent+1)/2) terms.
    """
    kind = TermKind(kind)
    if kind is TermKind.CONST:
        raise ValueError("expand_power takes sin, cos, sinh or cosh")
    e = int(exponent)
    if e != exponent or e < 1:
        raise ValueError(f"exponent must be a positive integer, got {exponent!r}")
    f = float(frequency)
    terms = []
    if e % 2 == 0:
        m = e // 2
        scale = 0.5 ** (2 * m - 1)
        const = 0.5 * scale * math.comb(2 * m, m)
        if kind in (TermKind.COS, TermKind.COSH):
            for i in range(m):
                terms.append(
                    SpectralTerm(kind, math.comb(2 * m, i) * scale, (2 * m - 2 * i) * f)
                )
            terms.append(SpectralTerm(TermKind.CONST, const))
        elif kind is TermKind.SIN:
            for j in range(m):
                sign = -1.0 if (m + j) % 2 else 1.0
                terms.append(
                    SpectralTerm(
                        TermKind.COS, sign * math.comb(2 * m, j) * scale, (2 * m - 2 * j) * f
                    )
                )
            terms.append(SpectralTerm(TermKind.CONST, const))
        else:
            for j in range(m):
                sign = -1.0 if j % 2 else 1.0
                terms.append(
                    SpectralTerm(
                        TermKind.COSH, sign * math.comb(2 * m, j) * scale, (2 * m - 2 * j) * f
                    )
                )
            terms.append(
                SpectralTerm(TermKind.CONST, -const if m % 2 else const)
            )
    else:
        p = (e - 1) // 2
        scale = 0.25 ** p
        if kind is TermKind.SIN:
            for k in range(p + 1):
                sign = -1.0 if (p + k) % 2 else 1.0
                terms.append(
                    SpectralTerm(
                        TermKind.SIN,
                        sign * math.comb(2 * p + 1, k) * scale,
                        (2 * p + 1 - 2 * k) * f,
                    )
                )
        elif kind is TermKind.SINH:
            for k in range(p + 1):
                sign = -1.0 if k % 2 else 1.0
                terms.append(
                    SpectralTerm(
                        TermKind.SINH,
                        sign * math.comb(2 * p + 1, k) * scale,
                        (2 * p + 1 - 2 * k) * f,
                    )
                )
        else:
            for ell in range(p + 1):
                terms.append(
                    SpectralTerm(
                        kind, math.comb(2 * p + 1, ell) * scale, (2 * p + 1 - 2 * ell) * f
                    )
                )
    return SpectralForm(terms)


def _term_product(ta: SpectralTerm, tb: SpectralTerm):
    if ta.kind is TermKind.CONST:
        return [SpectralTerm(tb.kind, ta.coefficient * tb.coefficient, tb.frequency)]
    if tb.kind is TermKind.CONST:
        return [SpectralTerm(ta.kind, ta.coefficient * tb.coefficient, ta.frequency)]
    c = 0.5 * ta.coefficient * tb.coefficient
    fm = ta.frequency - tb.frequency
    fp = ta.frequency + tb.frequency
    pair = (ta.kind, tb.kind)
    if pair == (TermKind.SIN, TermKind.SIN):
        return [SpectralTerm(TermKind.COS, c, fm), SpectralTerm(TermKind.COS, -c, fp)]
    if pair == (TermKind.COS, TermKind.COS):
        return [SpectralTerm(TermKind.COS, c, fm), SpectralTerm(TermKind.COS, c, fp)]
    if pair == (TermKind.SIN, TermKind.COS):
        return [SpectralTerm(TermKind.SIN, c, fp), SpectralTerm(TermKind.SIN, c, fm)]
    if pair == (TermKind.COS, TermKind.SIN):
        return [SpectralTerm(TermKind.SIN, c, fp), SpectralTerm(TermKind.SIN, -c, fm)]
    if pair == (TermKind.SINH, TermKind.SINH):
        return [SpectralTerm(TermKind.COSH, c, fp), SpectralTerm(TermKind.COSH, -c, fm)]
    if pair == (TermKind.COSH, TermKind.COSH):
        return [SpectralTerm(TermKind.COSH, c, fp), SpectralTerm(TermKind.COSH, c, fm)]
    if pair == (TermKind.SINH, TermKind.COSH):
        return [SpectralTerm(TermKind.SINH, c, fp), SpectralTerm(TermKind.SINH, c, fm)]
    return [SpectralTerm(TermKind.SINH, c, fp), SpectralTerm(TermKind.SINH, -c, fm)]


def product(a: SpectralForm, b: SpectralForm) -> SpectralForm:
    """Pointwise product of two forms of the same family."""
    if a.family is not None and b.family is not None and a.family is not b.family:
        raise FamilyMismatch(
            f"cannot multiply {a.family.value} by {b.family.value}"
        )
    out = []
    for ta in a.terms:
        for tb in b.terms:
            out.extend(_term_product(ta, tb))
    return SpectralForm(out, family=a.family or b.family)


def evaluate(f: SpectralForm, x):
    """Evaluate the form at x (scalar or array)."""
    xa = np.asarray(x, dtype=float)
    total = np.zeros(xa.shape)
    for t in f.terms:
        if t.kind is TermKind.CONST:
            total = total + t.coefficient
        else:
            total = total + t.coefficient * _FUNC[t.kind](t.frequency * xa)
    if total.ndim == 0:
        return float(total)
    return total


def _format_body(t: SpectralTerm) -> str:
    mag = abs(t.coefficient)
    if t.kind is TermKind.CONST:
        return f"{mag:g}"
    arg = "x" if t.frequency == 1.0 else f"{t.frequency:g}x"
    if mag == 1.0:
        return f"{t.kind.value}({arg})"
    return f"{mag:g}·{t.kind.value}({arg})"


def render(f: SpectralForm) -> str:
    """Render as text, e.g. ``0.5·cos(2x) + 0.5``."""
    if not f.terms:
        return "0"
    first = f.terms[0]
    out = ("−" if first.coefficient < 0 else "") + _format_body(first)
    for t in f.terms[1:]:
        joiner = " − " if t.coefficient < 0 else " + "
        out += joiner + _format_body(t)
    return out
