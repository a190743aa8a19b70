"""Exact calculus for nondecreasing piecewise-affine real functions.

Closed-form left- and right-continuous generalized inverses, their
composition laws, a named property suite over randomly generated functions,
and inverse-transform sampling, all in exact rational arithmetic.
"""

from .core import (
    ExtJump,
    ExtPiecewise,
    InfSegment,
    JumpRecord,
    PiecewiseMonotone,
    PlateauRecord,
    Preimage,
    Segment,
    canonical_equal,
    constant_function,
    identity_function,
)
from .compose import (
    CompositionReport,
    compose_exact,
    composition_jump_fixpoint,
    predict_T_after_inv,
    predict_inv_after_T,
    predict_one_sided,
)
from .errors import (
    BadLimits,
    EmptySample,
    GeninvError,
    MalformedShape,
    MonotonicityViolation,
    NonPositiveDenominator,
    NotOneSidedContinuous,
    NotRightContinuous,
    OutOfUnitRange,
    ParseError,
    UnknownProperty,
)
from .inverse import (
    invert_minus,
    invert_plus,
    pointwise_inf_minus,
    pointwise_inf_plus,
    pointwise_sup_minus,
    pointwise_sup_plus,
)
from .properties import (
    GeneratorConfig,
    PropertyResult,
    REGISTRY,
    Violation,
    generate,
    generate_cdf,
    oracle_inf,
    run_property,
    run_suite,
)
from .sampling import (
    CdfSpec,
    ecdf,
    ks_distance,
    pushforward_check,
    sample,
    validate_cdf,
)
from .scalars import NEG_INF, POS_INF, ExtReal, Rational, as_ext, as_rational, fin

__all__ = [
    "BadLimits",
    "CdfSpec",
    "CompositionReport",
    "EmptySample",
    "ExtJump",
    "ExtPiecewise",
    "ExtReal",
    "GeneratorConfig",
    "GeninvError",
    "InfSegment",
    "JumpRecord",
    "MalformedShape",
    "MonotonicityViolation",
    "NEG_INF",
    "NonPositiveDenominator",
    "NotOneSidedContinuous",
    "NotRightContinuous",
    "OutOfUnitRange",
    "POS_INF",
    "ParseError",
    "PiecewiseMonotone",
    "PlateauRecord",
    "Preimage",
    "PropertyResult",
    "REGISTRY",
    "Rational",
    "Segment",
    "UnknownProperty",
    "Violation",
    "as_ext",
    "as_rational",
    "canonical_equal",
    "compose_exact",
    "composition_jump_fixpoint",
    "constant_function",
    "ecdf",
    "fin",
    "generate",
    "generate_cdf",
    "identity_function",
    "invert_minus",
    "invert_plus",
    "ks_distance",
    "oracle_inf",
    "pointwise_inf_minus",
    "pointwise_inf_plus",
    "pointwise_sup_minus",
    "pointwise_sup_plus",
    "predict_T_after_inv",
    "predict_inv_after_T",
    "predict_one_sided",
    "pushforward_check",
    "run_property",
    "run_suite",
    "sample",
    "validate_cdf",
]
