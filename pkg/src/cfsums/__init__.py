"""Exact-arithmetic toolkit for the recurrence family

    x_{n+2} * x_n = x_{n+1}^2 * F(x_{n+1}),   x_0 = x_1 = 1,

its reciprocal partial sums S_N = sum_{j=1..N} 1/x_j, and the
continued-fraction, Engel, asymptotic and Diophantine structure of
those sums. Everything on the verification path is exact integer or
rational arithmetic; high-precision fixed point enters only for logs
and exponent estimates, with explicit error bounds.
"""

from .asymptotics import (
    AsymptoticReport,
    InsufficientTerms,
    alpha_k,
    char_root,
    estimate_C,
    verify_exact_formula,
)
from .bfile import BFile, BFileError, compare_entries, parse_bfile
from .cf import (
    CFExpansion,
    InvalidQuotient,
    canonical_form,
    cf_equivalent,
    cf_expand,
    cf_value,
    convergents,
)
from .diophantine import (
    ApproxRecord,
    EvidenceReport,
    check_delta,
    roth_exponent,
    tail_bracket,
    transcendence_evidence,
)
from .fixedpoint import HighPrecReal, log_bigint, log_ratio
from .recurrence import (
    GENERATE_CAP,
    InexactDivision,
    PolyF,
    RejectedPoly,
    SeqTable,
    SingularityHit,
    SingularityReport,
    generate,
    generate_general,
    growth_metrics,
    make_poly,
)
from .verify import (
    InterlacingReport,
    Mismatch,
    NOT_APPLICABLE,
    partial_sum,
    predicted_coeffs,
    verify_engel,
    verify_interlacing,
    verify_shallit,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxRecord",
    "AsymptoticReport",
    "BFile",
    "BFileError",
    "CFExpansion",
    "EvidenceReport",
    "GENERATE_CAP",
    "HighPrecReal",
    "InexactDivision",
    "InsufficientTerms",
    "InterlacingReport",
    "InvalidQuotient",
    "Mismatch",
    "NOT_APPLICABLE",
    "PolyF",
    "RejectedPoly",
    "SeqTable",
    "SingularityHit",
    "SingularityReport",
    "alpha_k",
    "canonical_form",
    "cf_equivalent",
    "cf_expand",
    "cf_value",
    "char_root",
    "check_delta",
    "compare_entries",
    "convergents",
    "estimate_C",
    "generate",
    "generate_general",
    "growth_metrics",
    "log_bigint",
    "log_ratio",
    "make_poly",
    "parse_bfile",
    "partial_sum",
    "predicted_coeffs",
    "roth_exponent",
    "tail_bracket",
    "transcendence_evidence",
    "verify_engel",
    "verify_exact_formula",
    "verify_interlacing",
    "verify_shallit",
    "__version__",
]
