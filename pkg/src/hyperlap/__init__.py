"""Closed-form transforms of hyperbolic/trigonometric powers, verified.

The package has four layers: complex special functions (gamma, beta,
Pochhammer), generalized hypergeometric series with convergence
classification and summation theorems, spectral power-reduction with
termwise Laplace transforms, and a catalog of closed-form integral
identities certified point-by-point against an independent adaptive
Gauss-Kronrod oracle. A CLI and HTTP service front the catalog.
"""

from ._version import __version__
from .catalog import (
    CatalogEntry,
    Condition,
    ParamSpec,
    check_conditions,
    coerce_params,
    entries,
    entry_I,
    entry_II,
    entry_III,
    entry_IV,
    evaluate_entry,
    get_entry,
    novel_V,
    novel_VI,
    novel_VII,
    special_case,
)
from .errors import (
    DivergentSeries,
    DomainError,
    FamilyMismatch,
    IntegrandDomainError,
    NoConvergence,
    PoleError,
    UnknownEntry,
)
from .hypergeom import (
    ConvergenceClass,
    Kind,
    SeriesSpec,
    classify,
    gauss_sum_2f1_unit,
    kummer_sum_2f1_neg1,
    sum_4f3_neg1,
    sum_series,
)
from .laplace import integer_power_transform, laplace_spectral, product_transform
from .quadrature import IntegralResult, integrate_semi_infinite
from .special import beta, gamma, gamma_ratio, log_gamma, pochhammer
from .spectral import (
    Family,
    SpectralForm,
    SpectralTerm,
    TermKind,
    evaluate,
    expand_power,
    product,
    render,
)
from .verify import (
    PointRecord,
    VerificationReport,
    render_report,
    serialize_report,
    verify_all,
    verify_entry,
)

__all__ = [
    "__version__",
    "CatalogEntry",
    "Condition",
    "ConvergenceClass",
    "DivergentSeries",
    "DomainError",
    "Family",
    "FamilyMismatch",
    "IntegralResult",
    "IntegrandDomainError",
    "Kind",
    "NoConvergence",
    "ParamSpec",
    "PointRecord",
    "PoleError",
    "SeriesSpec",
    "SpectralForm",
    "SpectralTerm",
    "TermKind",
    "UnknownEntry",
    "VerificationReport",
    "beta",
    "check_conditions",
    "classify",
    "coerce_params",
    "entries",
    "entry_I",
    "entry_II",
    "entry_III",
    "entry_IV",
    "evaluate",
    "evaluate_entry",
    "expand_power",
    "gamma",
    "gamma_ratio",
    "gauss_sum_2f1_unit",
    "get_entry",
    "integer_power_transform",
    "integrate_semi_infinite",
    "kummer_sum_2f1_neg1",
    "laplace_spectral",
    "log_gamma",
    "novel_V",
    "novel_VI",
    "novel_VII",
    "pochhammer",
    "product",
    "product_transform",
    "render",
    "render_report",
    "serialize_report",
    "special_case",
    "sum_4f3_neg1",
    "sum_series",
    "verify_all",
    "verify_entry",
]
