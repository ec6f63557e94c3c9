"""Dimension of the Hitchin component of a hyperbolic 2-orbifold group.

Several independent routes are provided: the per-degree sum over the
Hitchin base, the same sum written directly with a boundary term, a linear
form in the counts of cone points and corner reflectors of each order, and
(for PGL(n) on orientable closed orbifolds) the expected dimension counted
from centralizers of finite-order elements. They must all agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .differentials import pole_order_bound, real_dim_from_data
from .errors import NotHyperbolicError, RouteDisagreement, UnsupportedInputError
from .liealg import Family, SplitGroup, exponents, group_dim
from .orbifold import (
    OrbifoldSignature,
    euler_characteristic,
    is_closed,
    is_orientable,
    mirror,
    underlying_euler_characteristic,
)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_hyperbolic(Y):
    chi = euler_characteristic(Y)
    if chi >= 0:
        raise NotHyperbolicError(f"orbifold is not hyperbolic (chi = {chi})")
    return chi


def _require_closed(Y):
    if not is_closed(Y):
        raise UnsupportedInputError("orbifold has boundary; mirror it first")


@dataclass(frozen=True)
class BaseProfile:
    """Real dimension of each summand of the Hitchin base, in slot order."""

    entries: tuple
    total: int


def base_profile(Y: OrbifoldSignature, G: SplitGroup) -> BaseProfile:
    _require_hyperbolic(Y)
    _require_closed(Y)
    chi_u = underlying_euler_characteristic(Y)
    entries = tuple(
        (e + 1, real_dim_from_data(chi_u, Y.cones, Y.corners, e + 1)) for e in exponents(G)
    )
    return BaseProfile(entries, sum(v for _, v in entries))


def dim_hitchin_direct(Y: OrbifoldSignature, G: SplitGroup) -> int:
    """Closed-form count reading the full 1-orbifolds directly."""
    _require_hyperbolic(Y)
    total = -underlying_euler_characteristic(Y) * group_dim(G)
    for e in exponents(G):
        d = e + 1
        total += 2 * sum(pole_order_bound(d, m) for m in Y.cones)
        total += sum(pole_order_bound(d, n) for n in Y.corners)
        total += 2 * Y.full_boundaries * (d // 2)
    return total


def checked_dim_hitchin(Y: OrbifoldSignature, G: SplitGroup):
    """Return ``(dimension, routes)`` where routes names every formula evaluated."""
    _require_hyperbolic(Y)
    if is_closed(Y):
        return base_profile(Y, G).total, ["hitchin_base"]
    via_mirror = base_profile(mirror(Y), G).total
    direct = dim_hitchin_direct(Y, G)
    if via_mirror != direct:
        raise RouteDisagreement(
            f"mirror route gives {via_mirror}, direct boundary formula gives {direct}"
        )
    return via_mirror, ["hitchin_base_of_mirror", "direct_boundary_formula"]


def dim_hitchin(Y: OrbifoldSignature, G: SplitGroup) -> int:
    return checked_dim_hitchin(Y, G)[0]


@dataclass(frozen=True)
class DimensionPolynomial:
    """dim Hit as a linear form in the invariants of Y.

    dim = surface_coeff * (-chi(|Y|)) + cone_coeff * #cones
          + corner_coeff * #corners + boundary_coeff * #full boundaries
          - sum over m of cone_corrections[m] * #(cones of order m)
          - sum over n of corner_corrections[n] * #(corners of order n)

    The correction tables hold the nonzero terms for 2 <= m <= max exponent.
    """

    group: SplitGroup
    surface_coeff: int
    cone_coeff: int
    corner_coeff: int
    boundary_coeff: int
    cone_corrections: dict = field(default_factory=dict)
    corner_corrections: dict = field(default_factory=dict)

    def evaluate(self, chi_underlying, cones, corners, full_boundaries=0) -> int:
        total = -chi_underlying * self.surface_coeff
        total += self.cone_coeff * len(cones) + self.corner_coeff * len(corners)
        total += self.boundary_coeff * full_boundaries
        for m, count in Counter(cones).items():
            total -= self.cone_corrections.get(m, 0) * count
        for n, count in Counter(corners).items():
            total -= self.corner_corrections.get(n, 0) * count
        return total


def _correction(G, m):
    # sum over exponents of ceil((e+1)/m - 1)
    return sum(_ceil_div(e + 1 - m, m) for e in exponents(G))


def dimension_polynomial(G: SplitGroup) -> DimensionPolynomial:
    dim, exps = group_dim(G), exponents(G)
    gap = dim - len(exps)
    if gap % 2:
        raise AssertionError(f"dim - rank is odd for {G}")
    boundary = gap - 2 * sum(_ceil_div(e - 1, 2) for e in exps)
    cone_corr, corner_corr = {}, {}
    for m in range(2, max(exps) + 1):
        c = _correction(G, m)
        if c:
            cone_corr[m] = 2 * c
            corner_corr[m] = c
    return DimensionPolynomial(G, dim, gap, gap // 2, boundary, cone_corr, corner_corr)


def dim_hitchin_alternate(Y: OrbifoldSignature, G: SplitGroup) -> int:
    _require_hyperbolic(Y)
    poly = dimension_polynomial(G)
    return poly.evaluate(
        underlying_euler_characteristic(Y), Y.cones, Y.corners, Y.full_boundaries
    )


@dataclass(frozen=True)
class DimBounds:
    """Bounds on -chi(Y) dim G - dim Hit(Y, G)."""

    lower: Fraction
    upper: Fraction


def dimension_defect(Y: OrbifoldSignature, G: SplitGroup) -> Fraction:
    """How far dim Hit falls short of the naive count -chi(Y) dim G."""
    return -euler_characteristic(Y) * group_dim(G) - dim_hitchin(Y, G)


def approximation_bounds(Y: OrbifoldSignature, G: SplitGroup) -> DimBounds:
    _require_hyperbolic(Y)
    _require_closed(Y)
    rk = len(exponents(G))
    half = Fraction(1, 2)
    lower = -rk * (
        sum(1 - Fraction(1, m) for m in Y.cones) + half * sum(1 - Fraction(1, n) for n in Y.corners)
    )
    upper = rk * (
        sum(1 + Fraction(1, m) for m in Y.cones) + half * sum(1 + Fraction(1, n) for n in Y.corners)
    )
    return DimBounds(Fraction(lower), Fraction(upper))


def centralizer_dim(n: int, m: int) -> int:
    """Dimension of the centralizer in GL(n) of a generic element of order m.

    Its eigenvalues spread over the m-th roots of unity as evenly as possible,
    so with n = m q + r there are r eigenspaces of size q+1 and m-r of size q.
    """
    q, r = divmod(n, m)
    return (n + r) * q + r


def expected_dim_pgl(Y: OrbifoldSignature, n: int) -> int:
    """Expected dimension of the PGL(n) character variety for orientable closed Y."""
    _require_hyperbolic(Y)
    if not is_closed(Y) or not is_orientable(Y):
        raise UnsupportedInputError(
            "expected dimension is only defined for orientable closed orbifolds"
        )
    SplitGroup(Family.PGL, n)  # validates n
    return (2 * Y.genus - 2) * (n * n - 1) + sum(n * n - centralizer_dim(n, m) for m in Y.cones)
