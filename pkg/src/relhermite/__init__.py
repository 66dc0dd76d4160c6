"""Exact-arithmetic construction and verification of relativistic
Hermite, Gegenbauer and classical Hermite polynomials."""

__version__ = "0.1.0"

from .numeric import (  # noqa: F401
    ConsistencyError,
    DomainError,
    GammaArg,
    GammaRatio,
    GaussianRational,
    Rational,
    as_param,
    gamma_ratio_is_rational,
    gamma_ratio_normalize,
    pochhammer,
    rational,
    rational_str,
)
from .algebra import (  # noqa: F401
    MultiPoly,
    Poly,
    QuadExtPoly,
    TruncSeries,
    multipoly_expectation,
    series_add,
    series_exp,
    series_mul,
    series_pow,
)
from .families import (  # noqa: F401
    Family,
    FamilyId,
    MomentSequence,
    Normalization,
    OperatorSeries,
    apply_operator,
    family_member,
    gegenbauer_explicit,
    gegenbauer_rodrigues,
    hermite,
    normalize,
    rhp_explicit,
    rhp_rodrigues,
    rhp_scaled,
)
from .identities import CheckResult  # noqa: F401
