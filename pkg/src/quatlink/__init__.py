"""Quaternion polynomial factorization and hyperbolic four-bar linkages.

Quadratic polynomials over the split quaternions admit up to six
factorizations into linear factors (two over the Hamiltonian quaternions).
Each factorization is a leg of a four-bar linkage with equal opposite
quadrances in universal hyperbolic geometry; the legs intersect on a conic
whose focal points are the fixed joints.  This package computes the
factorizations exactly, builds the linkages, and machine-checks the geometry.
"""

from .algebra import Quaternion, Signature, basis
from .errors import (
    DegenerateError,
    ExactnessWarning,
    MismatchError,
    MixedRadicalError,
    NonGenericError,
    NonInvertibleError,
    NonVectorialError,
    NullPointError,
    ParseError,
    QuatLinkError,
    UnsupportedError,
)
from .factorization import (
    Factorization,
    GenericityReport,
    all_factorizations,
    check_generic,
    complementary,
    complementary_pairs,
    factor_from_divisor,
    label_factorizations,
    quadratic_divisors,
)
from .geometry import (
    ProjLine,
    ProjPoint,
    collinear,
    cross_product,
    incident,
    inner_product,
    join,
    line,
    meet,
    midpoints,
    point,
    quadrance,
    reflect,
    rotate,
    rotation_center,
)
from .linkage import (
    CouplerConic,
    FourBar,
    Leg,
    MotionSample,
    VerificationReport,
    build_linkage,
    construct_equal_quadrilateral,
    coupler_conic,
    coupler_point,
    joint_path,
    sample_motion,
    verify_linkage,
)
from .polynomials import (
    QuatPoly,
    RealPoly,
    RealRootResult,
    linear_zero,
    monic_linear,
    norm_quadratic,
    real_roots,
)
from .scalars import DEFAULT_TOLERANCE, SqrtExt, exact_sqrt, sqrt_ext
from .textio import parse_point, parse_poly, parse_quaternion

__version__ = "0.1.0"

__all__ = [
    "Quaternion",
    "Signature",
    "basis",
    "QuatPoly",
    "RealPoly",
    "RealRootResult",
    "linear_zero",
    "monic_linear",
    "norm_quadratic",
    "real_roots",
    "Factorization",
    "GenericityReport",
    "all_factorizations",
    "check_generic",
    "complementary",
    "complementary_pairs",
    "factor_from_divisor",
    "label_factorizations",
    "quadratic_divisors",
    "ProjLine",
    "ProjPoint",
    "collinear",
    "cross_product",
    "incident",
    "inner_product",
    "join",
    "line",
    "meet",
    "midpoints",
    "point",
    "quadrance",
    "reflect",
    "rotate",
    "rotation_center",
    "CouplerConic",
    "FourBar",
    "Leg",
    "MotionSample",
    "VerificationReport",
    "build_linkage",
    "construct_equal_quadrilateral",
    "coupler_conic",
    "coupler_point",
    "joint_path",
    "sample_motion",
    "verify_linkage",
    "SqrtExt",
    "DEFAULT_TOLERANCE",
    "exact_sqrt",
    "sqrt_ext",
    "parse_point",
    "parse_poly",
    "parse_quaternion",
    "QuatLinkError",
    "MismatchError",
    "MixedRadicalError",
    "NonInvertibleError",
    "NonGenericError",
    "UnsupportedError",
    "DegenerateError",
    "NullPointError",
    "NonVectorialError",
    "ParseError",
    "ExactnessWarning",
]
