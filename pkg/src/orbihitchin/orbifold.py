"""Signatures of compact 2-orbifolds and their Euler characteristics.

A signature only records what the dimension formulas read: the underlying
surface, how its boundary circles are decorated, and the multisets of cone
and corner orders. Which mirror circle a corner reflector sits on is not
recorded, so distinct orbifolds with the same invariants share a signature.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InvalidSignatureError, UnsupportedInputError


@dataclass(frozen=True)
class OrbifoldSignature:
    """Combinatorial data of a compact 2-orbifold Y.

    genus counts handles when the underlying surface |Y| is orientable and
    cross-caps otherwise. ``full_boundaries`` is the number of boundary
    components that are full 1-orbifolds (segments with mirror endpoints);
    they sit on ``mixed_circles`` boundary circles of |Y| which alternate
    boundary arcs and mirror arcs.
    """

    genus: int = 0
    underlying_orientable: bool = True
    mirror_circles: int = 0
    boundary_circles: int = 0
    full_boundaries: int = 0
    mixed_circles: int = 0
    cones: tuple = ()
    corners: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cones", tuple(self.cones))
        object.__setattr__(self, "corners", tuple(self.corners))

    @classmethod
    def sphere(cls, *cones):
        return cls(cones=cones)

    @classmethod
    def surface(cls, genus, *cones, orientable=True):
        return cls(genus=genus, underlying_orientable=orientable, cones=cones)

    @classmethod
    def disk(cls, corners=(), cones=()):
        """Disk whose boundary circle is a mirror (a reflection-group polygon)."""
        return cls(mirror_circles=1, corners=corners, cones=cones)

    @property
    def num_cones(self) -> int:
        return len(self.cones)

    @property
    def num_corners(self) -> int:
        return len(self.corners)


def validate(sig: OrbifoldSignature) -> list:
    """Return every violated structural constraint; an empty list means ok."""
    out = []
    for name in ("genus", "mirror_circles", "boundary_circles", "full_boundaries", "mixed_circles"):
        v = getattr(sig, name)
        if isinstance(v, bool) or not isinstance(v, int):
            out.append(f"{name} must be an integer")
        elif v < 0:
            out.append(f"{name} must be nonnegative")
    if out:
        return out
    if not sig.underlying_orientable and sig.genus < 1:
        out.append("non-orientable requires genus ≥ 1")
    for label, orders in (("cone", sig.cones), ("corner", sig.corners)):
        for m in orders:
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                out.append(f"{label} orders must be integers ≥ 2 (got {m!r})")
                break
    if sig.corners and sig.mirror_circles + sig.mixed_circles == 0:
        out.append("corner reflectors require mirror boundary")
    if sig.full_boundaries < sig.mixed_circles:
        out.append("each mixed circle carries at least one full 1-orbifold (b ≥ mixed_circles)")
    if (sig.full_boundaries == 0) != (sig.mixed_circles == 0):
        out.append("full 1-orbifolds and mixed circles must vanish together")
    return out


def check(sig: OrbifoldSignature) -> OrbifoldSignature:
    problems = validate(sig)
    if problems:
        raise InvalidSignatureError(problems)
    return sig


def is_closed(sig: OrbifoldSignature) -> bool:
    return sig.boundary_circles == 0 and sig.full_boundaries == 0


def is_orientable(sig: OrbifoldSignature) -> bool:
    """Orientable as an orbifold: |Y| orientable and only cone points."""
    return (
        sig.underlying_orientable
        and sig.mirror_circles == 0
        and sig.mixed_circles == 0
        and not sig.corners
    )


def underlying_euler_characteristic(sig: OrbifoldSignature) -> int:
    """chi(|Y|), every decorated circle counting as one boundary circle of |Y|."""
    closed = 2 - 2 * sig.genus if sig.underlying_orientable else 2 - sig.genus
    return closed - (sig.mirror_circles + sig.boundary_circles + sig.mixed_circles)


def euler_characteristic(sig: OrbifoldSignature) -> Fraction:
    check(sig)
    chi = Fraction(underlying_euler_characteristic(sig))
    chi -= sum(1 - Fraction(1, m) for m in sig.cones)
    chi -= Fraction(1, 2) * sum(1 - Fraction(1, n) for n in sig.corners)
    chi -= Fraction(sig.full_boundaries, 2)
    return chi


def is_hyperbolic(sig: OrbifoldSignature) -> bool:
    return euler_characteristic(sig) < 0


def canonicalize(sig: OrbifoldSignature) -> OrbifoldSignature:
    check(sig)
    return replace(sig, cones=tuple(sorted(sig.cones)), corners=tuple(sorted(sig.corners)))


def mirror(sig: OrbifoldSignature) -> OrbifoldSignature:
    """Closed orbifold mY: every boundary point of Y becomes a mirror point.

    Each full 1-orbifold contributes its two endpoints as order-2 corner
    reflectors.
    """
    check(sig)
    if is_closed(sig):
        raise UnsupportedInputError("orbifold is already closed; mirror needs boundary")
    out = replace(
        sig,
        mirror_circles=sig.mirror_circles + sig.boundary_circles + sig.mixed_circles,
        boundary_circles=0,
        mixed_circles=0,
        full_boundaries=0,
        corners=tuple(sorted(sig.corners + (2,) * (2 * sig.full_boundaries))),
    )
    assert euler_characteristic(out) == euler_characteristic(sig)
    assert underlying_euler_characteristic(out) == underlying_euler_characteristic(sig)
    return out


def orientation_double_cover(sig: OrbifoldSignature) -> OrbifoldSignature:
    """Orientable closed double cover Y+ of a closed non-orientable orbifold.

    Each cone point has two preimages of the same order and each corner
    reflector lifts to a single cone point of the same order.
    """
    check(sig)
    if not is_closed(sig):
        raise UnsupportedInputError("orbifold has boundary; take mirror first")
    if is_orientable(sig):
        raise UnsupportedInputError("orbifold is orientable; the cover is trivial")
    # chi(|Y+|) = 2 chi(|Y|) = 2 - 2 g+
    genus = 1 - underlying_euler_characteristic(sig)
    cones = tuple(sorted(sig.cones + sig.cones + sig.corners))
    out = OrbifoldSignature(genus=genus, cones=cones)
    assert euler_characteristic(out) == 2 * euler_characteristic(sig)
    return out
