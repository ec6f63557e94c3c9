"""Dimensions of spaces of regular d-differentials on closed orbifolds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import HitchinError, NotHyperbolicError, UnsupportedInputError
from .orbifold import (
    OrbifoldSignature,
    euler_characteristic,
    is_closed,
    is_orientable,
    underlying_euler_characteristic,
)


def _check_order(name, v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 2:
        raise HitchinError(f"{name} must be an integer >= 2 (got {v!r})")


def pole_order_bound(d: int, m: int) -> int:
    """Largest pole order floor(d - d/m) a regular d-differential may have
    at a cone point of order m (or a corner reflector of order m)."""
    _check_order("degree", d)
    _check_order("order", m)
    return d + (-d // m)


@dataclass(frozen=True)
class DifferentialDim:
    degree: int
    real_dim: int
    complex_dim: Optional[int] = None


def real_dim_from_data(chi_underlying: int, cones, corners, d: int) -> int:
    """Real dimension from the raw invariants, without validation."""
    return (
        -chi_underlying * (2 * d - 1)
        + 2 * sum(pole_order_bound(d, m) for m in cones)
        + sum(pole_order_bound(d, n) for n in corners)
    )


def dim_regular_differentials(Y: OrbifoldSignature, d: int) -> DifferentialDim:
    _check_order("degree", d)
    chi = euler_characteristic(Y)
    if not is_closed(Y):
        raise UnsupportedInputError("orbifold has boundary; mirror it first")
    if chi >= 0:
        raise NotHyperbolicError(f"orbifold is not hyperbolic (chi = {chi})")
    real = real_dim_from_data(underlying_euler_characteristic(Y), Y.cones, Y.corners, d)
    if is_orientable(Y):
        assert real % 2 == 0
        return DifferentialDim(d, real, real // 2)
    return DifferentialDim(d, real)
