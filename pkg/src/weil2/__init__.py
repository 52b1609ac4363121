"""Isogeny classes of abelian surfaces over finite fields.

Classification of Weil polynomials X^4 + aX^3 + bX^2 + aqX + q^2 by exact
integer arithmetic, enumeration of the classes whose group order q^2
divides, Jacobian realizability, and an exhaustive genus-2 curve census
over small fields that independently verifies the classification.
"""

from .arith import INFINITY, NotAPrimePower, PrimePower, ZeroInput, parse_prime_power
from .census import (
    CensusRecord,
    CensusReport,
    CurveChar2,
    CurveOdd,
    UnsupportedQ,
    VerificationFailure,
    census_weil_set,
    count_points,
    enumerate_curves,
    smoothness_char2,
    verify_census,
    weil_from_counts,
)
from .classify import (
    ClassificationRecord,
    classify_record,
    closed_form,
    enumerate_order_divisible,
    non_jacobian_exceptions,
)
from .jacobian import is_jacobian, simple_non_jacobian, split_non_jacobian
from .smallfield import Field, SizeGuard, base_field, extend
from .weil import (
    AdmissibilityVerdict,
    NotAdmissible,
    NotSimple,
    SplitForm,
    WeilCoeffs,
    admissibility,
    bounds_ok,
    group_order,
    is_simple,
    predicted_curve_count,
    split,
)

__all__ = [
    "AdmissibilityVerdict",
    "CensusRecord",
    "CensusReport",
    "ClassificationRecord",
    "CurveChar2",
    "CurveOdd",
    "Field",
    "INFINITY",
    "NotAPrimePower",
    "NotAdmissible",
    "NotSimple",
    "PrimePower",
    "SizeGuard",
    "SplitForm",
    "UnsupportedQ",
    "VerificationFailure",
    "WeilCoeffs",
    "ZeroInput",
    "admissibility",
    "base_field",
    "bounds_ok",
    "census_weil_set",
    "classify_record",
    "closed_form",
    "count_points",
    "enumerate_curves",
    "enumerate_order_divisible",
    "extend",
    "group_order",
    "is_jacobian",
    "is_simple",
    "non_jacobian_exceptions",
    "parse_prime_power",
    "predicted_curve_count",
    "simple_non_jacobian",
    "smoothness_char2",
    "split",
    "split_non_jacobian",
    "verify_census",
    "weil_from_counts",
]

__version__ = "0.1.0"
