"""Exact dimension counts for Hitchin components of hyperbolic 2-orbifold groups."""

from .errors import (
    HitchinError,
    InvalidGroupError,
    InvalidSignatureError,
    NotHyperbolicError,
    RouteDisagreement,
    UnsupportedInputError,
)
from .liealg import Family, SplitGroup, degrees, exponents, group_dim
from .orbifold import (
    OrbifoldSignature,
    canonicalize,
    euler_characteristic,
    is_hyperbolic,
    mirror,
    orientation_double_cover,
    validate,
)
from .differentials import DifferentialDim, dim_regular_differentials, pole_order_bound
from .hitchin import (
    BaseProfile,
    DimBounds,
    DimensionPolynomial,
    approximation_bounds,
    base_profile,
    dim_hitchin,
    dim_hitchin_alternate,
    dimension_polynomial,
    expected_dim_pgl,
)

__version__ = "0.1.0"
