"""Parameter grid parsing for verification sweeps.

A grid spec is a semicolon-separated list of per-parameter assignments,
e.g. "s=2:6:5;ν=0.5,1,1.5;m=1". Each assignment is either a single scalar,
a comma list, or a linear range start:stop:count. Scalars may be complex
with either an i or j unit suffix ("1+0.5i"). Greek parameter names may be
spelled out in ascii (nu, beta, ...). The grid is the cross product of the
per-parameter value lists, in the order the parameters appear in the spec.
"""

import itertools

import numpy as np

from .errors import DomainError

MAX_POINTS = 10**6

_GREEK = {
    "alpha": "α",
    "beta": "β",
    "gamma": "γ",
    "lambda": "λ",
    "mu": "μ",
    "nu": "ν",
}


def canonical_name(name: str, known=()):
    """Map an ascii alias onto the catalog's parameter spelling."""
    name = name.strip()
    if known and name in known:
        return name
    alias = _GREEK.get(name.lower())
    if alias is not None and (not known or alias in known):
        return alias
    return name


def parse_scalar(text: str):
    """One numeric literal; returns float when real, complex otherwise."""
    tok = text.strip()
    if not tok:
        raise DomainError("empty numeric literal in grid spec")
    lowered = tok.lower().replace(" ", "")
    if "i" in lowered and "j" not in lowered:
        lowered = lowered.replace("i", "j")
    try:
        if "j" in lowered or "(" in lowered:
            return complex(lowered)
        return float(lowered)
    except ValueError:
        raise DomainError(f"bad numeric literal {text!r} in grid spec") from None


def parse_values(text: str):
    """The value list for one parameter assignment."""
    tok = text.strip()
    if ":" in tok and "," not in tok:
        parts = tok.split(":")
        if len(parts) != 3:
            raise DomainError(f"bad range {text!r}; expected start:stop:count")
        start, stop = (parse_scalar(p) for p in parts[:2])
        try:
            count = int(parts[2])
        except ValueError:
            raise DomainError(f"bad range count in {text!r}") from None
        if count < 1:
            raise DomainError(f"range count must be >= 1 in {text!r}")
        if isinstance(start, complex) or isinstance(stop, complex):
            raise DomainError(f"range endpoints must be real in {text!r}")
        return [float(v) for v in np.linspace(start, stop, count)]
    return [parse_scalar(p) for p in tok.split(",")]


def parse_grid(spec: str, param_names=()):
    """Cross-product grid from a textual spec; tuple of parameter dicts."""
    assignments = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise DomainError(f"bad grid assignment {chunk!r}; expected name=values")
        name, _, values = chunk.partition("=")
        name = canonical_name(name, param_names)
        assignments.append((name, parse_values(values)))
    seen = set()
    for name, _ in assignments:
        if name in seen:
            raise DomainError(f"parameter {name!r} assigned twice in grid spec")
        seen.add(name)
    total = 1
    for _, values in assignments:
        total *= len(values)
        if total > MAX_POINTS:
            raise DomainError(f"grid exceeds {MAX_POINTS} points")
    names = [name for name, _ in assignments]
    combos = itertools.product(*(values for _, values in assignments))
    return tuple(dict(zip(names, combo)) for combo in combos)
