"""Exhaustive classification of closed hyperbolic orbifolds by base dimensions.

Every question answered here only looks at the real dimensions of the
spaces of regular differentials in a fixed finite set of degrees. Since the
pole order bound for degree d is constant (= d - 1) once the order reaches d,
all orders >= D (the largest degree involved) behave alike. The search
therefore runs over orders 2..D, with D standing for "any order >= D", and
turns each hit with open slots back into explicit families using exact
Euler characteristic arithmetic. Finite search bounds on the surface and on
the number of singular points come from per-point minimum contributions and
are recorded as notes on the result.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator

from .differentials import pole_order_bound
from .errors import HitchinError, InvalidGroupError
from .liealg import Family as GroupFamily
from .liealg import SplitGroup, degrees, group_dim, pgl_ambient
from .orbifold import OrbifoldSignature, euler_characteristic

_HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class Slot:
    """One cone or corner order: exactly ``value``, or any order >= ``value``."""

    value: int
    at_least: bool = False

    @classmethod
    def finite(cls, m: int) -> "Slot":
        return cls(m, False)

    @classmethod
    def atleast(cls, t: int) -> "Slot":
        return cls(t, True)

    def __str__(self):
        return f">={self.value}" if self.at_least else str(self.value)


@dataclass(frozen=True, order=True)
class Surface:
    """Underlying surface of a closed orbifold together with its mirror circles."""

    underlying_orientable: bool = True
    genus: int = 0
    mirror_circles: int = 0

    @property
    def euler_characteristic(self) -> int:
        closed = 2 - 2 * self.genus if self.underlying_orientable else 2 - self.genus
        return closed - self.mirror_circles

    @property
    def orientable(self) -> bool:
        return self.underlying_orientable and self.mirror_circles == 0

    def signature(self, cones=(), corners=()) -> OrbifoldSignature:
        return OrbifoldSignature(
            genus=self.genus,
            underlying_orientable=self.underlying_orientable,
            mirror_circles=self.mirror_circles,
            cones=tuple(sorted(cones)),
            corners=tuple(sorted(corners)),
        )


def _expand_slots(slots, horizon) -> list:
    fixed = [s.value for s in slots if not s.at_least]
    lows = sorted(s.value for s in slots if s.at_least)
    if not lows:
        return [tuple(sorted(fixed))]
    out = []
    for combo in itertools.combinations_with_replacement(range(lows[0], horizon + 1), len(lows)):
        # a sorted tuple fits sorted lower bounds iff it dominates them termwise
        if all(v >= t for v, t in zip(combo, lows)):
            out.append(tuple(sorted(fixed + list(combo))))
    return out


@dataclass(frozen=True, order=True)
class SignatureFamily:
    """Signatures on one surface whose orders fill the given slots.

    Slots are instantiated independently and then sorted, so a family stands
    for a set of order multisets. Every member is hyperbolic.
    """

    surface: Surface
    cones: tuple
    corners: tuple = ()
    stabilization_degree: int = 2

    @property
    def slots(self):
        return self.cones + self.corners

    @property
    def max_threshold(self) -> int:
        return max((s.value for s in self.slots), default=2)

    def certificate(self, slot: Slot) -> dict:
        """Orders t..D were evaluated one by one; beyond D nothing changes."""
        D = self.stabilization_degree
        return {"stabilization_degree": D, "checked_range": [slot.value, max(slot.value, D)]}

    def expand(self, horizon: int) -> set:
        if horizon < self.max_threshold:
            raise HitchinError(
                f"horizon {horizon} is below the family threshold {self.max_threshold}"
            )
        cone_sets = _expand_slots(self.cones, horizon)
        corner_sets = _expand_slots(self.corners, horizon)
        return {
            self.surface.signature(c, n) for c in cone_sets for n in corner_sets
        }

    def __str__(self):
        s = self.surface
        kind = "orientable" if s.underlying_orientable else "non-orientable"
        parts = [f"{kind} genus {s.genus}"]
        if s.mirror_circles:
            parts.append(f"{s.mirror_circles} mirror circle(s)")
        parts.append("cones (" + ",".join(map(str, self.cones)) + ")")
        if self.corners:
            parts.append("corners (" + ",".join(map(str, self.corners)) + ")")
        return ", ".join(parts)


def expand_family(f: SignatureFamily, horizon: int) -> set:
    return f.expand(horizon)


@dataclass(frozen=True)
class FamilySet:
    """Result of one classification run.

    ``families`` is canonically sorted and pairwise disjoint. ``notes``
    records why the finite search bounds are exhaustive.
    """

    context: dict
    families: tuple
    notes: tuple = ()

    def expand(self, horizon: int) -> set:
        out = set()
        for f in self.families:
            out |= f.expand(horizon)
        return out

    def __iter__(self):
        return iter(self.families)

    def __len__(self):
        return len(self.families)

    def __bool__(self):
        return bool(self.families)


# ---------------------------------------------------------------- criteria


@dataclass(frozen=True)
class Criterion:
    """Predicate on the tuple of per-slot real dimensions.

    kind "total": the dimensions sum to ``target``.
    kind "vanish": every slot vanishes.
    kind "single": slot ``index`` is nonzero and all others vanish.
    """

    kind: str
    slot_degrees: tuple
    target: int = 0
    index: int = -1

    def holds(self, dims) -> bool:
        if self.kind == "total":
            return sum(dims) == self.target
        if self.kind == "vanish":
            return not any(dims)
        return dims[self.index] > 0 and not any(
            v for i, v in enumerate(dims) if i != self.index
        )

    @property
    def stabilization_degree(self) -> int:
        return max(self.slot_degrees)

    @property
    def vanishing_degrees(self) -> tuple:
        if self.kind == "vanish":
            return tuple(sorted(set(self.slot_degrees)))
        if self.kind == "single":
            return tuple(
                sorted({d for i, d in enumerate(self.slot_degrees) if i != self.index})
            )
        return ()


def _min_cone_cost(slot_degrees) -> int:
    # smallest real contribution of a single cone point, attained at order 2
    return sum(2 * pole_order_bound(d, 2) for d in slot_degrees)


def surfaces(orientable_only: bool, min_chi: int) -> list:
    """All closed underlying surfaces (with mirror circles) of chi >= min_chi."""
    out = []
    g = 0
    while 2 - 2 * g >= min_chi:
        for h in range(0, 1 if orientable_only else 2 - 2 * g - min_chi + 1):
            out.append(Surface(True, g, h))
        g += 1
    if not orientable_only:
        x = 1
        while 2 - x >= min_chi:
            for h in range(0, 2 - x - min_chi + 1):
                out.append(Surface(False, x, h))
            x += 1
    return out


@dataclass(frozen=True)
class _Cell:
    criterion: Criterion
    surface: Surface
    num_cones: int
    num_corners: int


def _cells(criterion: Criterion, orientable_only: bool, group_dimension: int):
    """Finite list of (surface, #cones, #corners) that can satisfy the criterion."""
    notes = []
    cells = []
    vanish = criterion.vanishing_degrees
    if vanish:
        # each vanishing degree d forces -chi(|Y|)(2d-1) + weight*floor(d/2) <= 0,
        # weight = 2*#cones + #corners; that needs chi(|Y|) >= 1 and rules out
        # the smooth case, where chi(Y) = chi(|Y|) would have to be negative
        notes.append(
            "each vanishing degree d requires (2*#cones + #corners)*floor(d/2) <= chi(|Y|)*(2d-1) "
            "since every order contributes at least floor(d/2); hence chi(|Y|) >= 1"
        )
        for s in surfaces(orientable_only, 1):
            chi = s.euler_characteristic
            budget = min(chi * (2 * d - 1) // (d // 2) for d in vanish)
            for n_cones in range(0, budget // 2 + 1):
                most = budget - 2 * n_cones if s.mirror_circles else 0
                for n_corners in range(0, most + 1):
                    if n_cones + n_corners:
                        cells.append(_Cell(criterion, s, n_cones, n_corners))
    if criterion.kind == "total":
        T = criterion.target
        dim = sum(2 * d - 1 for d in criterion.slot_degrees)
        cost = _min_cone_cost(criterion.slot_degrees)
        min_chi = -(T // dim)
        notes.append(
            f"dim >= -chi(|Y|)*{dim} + {cost}*#cones + {cost // 2}*#corners because every cone "
            f"point adds at least {cost} and every corner at least {cost // 2}; so "
            f"chi(|Y|) >= {min_chi} and 2*{cost}*#cones + {cost}*#corners <= 2*({T} + chi(|Y|)*{dim})"
        )
        for s in surfaces(orientable_only, min_chi):
            budget = T + s.euler_characteristic * dim
            for n_cones in range(0, budget // cost + 1):
                most = (2 * (budget - n_cones * cost)) // cost if s.mirror_circles else 0
                for n_corners in range(0, most + 1):
                    cells.append(_Cell(criterion, s, n_cones, n_corners))
    return cells, notes


# ------------------------------------------------------------ search core


def _chi_part(orders, weight) -> Fraction:
    return weight * sum((1 - Fraction(1, m) for m in orders), Fraction(0))


def _hyperbolic_regions(chi_u, fixed_cones, a, lo_a, fixed_corners, c, lo_c, out):
    """Split {a cones >= lo_a, c corners >= lo_c} into fully hyperbolic pieces."""
    base = chi_u - _chi_part(fixed_cones, 1) - _chi_part(fixed_corners, _HALF)
    if base - a - c * _HALF >= 0:
        return  # no instantiation is hyperbolic
    lowest = base
    if a:
        lowest -= a * (1 - Fraction(1, lo_a))
    if c:
        lowest -= c * _HALF * (1 - Fraction(1, lo_c))
    if lowest < 0:
        out.append((fixed_cones, a, lo_a, fixed_corners, c, lo_c))
        return
    if a:
        # smallest open cone equals lo_a, or all open cones exceed it
        _hyperbolic_regions(chi_u, fixed_cones + (lo_a,), a - 1, lo_a, fixed_corners, c, lo_c, out)
        if c:
            _hyperbolic_regions(
                chi_u, fixed_cones, a, lo_a + 1, fixed_corners + (lo_c,), c - 1, lo_c, out
            )
            _hyperbolic_regions(chi_u, fixed_cones, a, lo_a + 1, fixed_corners, c, lo_c + 1, out)
        else:
            _hyperbolic_regions(chi_u, fixed_cones, a, lo_a + 1, fixed_corners, c, lo_c, out)
    else:
        _hyperbolic_regions(chi_u, fixed_cones, a, lo_a, fixed_corners + (lo_c,), c - 1, lo_c, out)
        _hyperbolic_regions(chi_u, fixed_cones, a, lo_a, fixed_corners, c, lo_c + 1, out)


def _search_cell(cell: _Cell) -> list:
    crit, surf = cell.criterion, cell.surface
    D = crit.stabilization_degree
    chi_u = surf.euler_characteristic
    distinct = sorted(set(crit.slot_degrees))
    table = {d: [0, 0] + [pole_order_bound(d, m) for m in range(2, D + 1)] for d in distinct}
    base = {d: -chi_u * (2 * d - 1) for d in distinct}
    values = range(2, D + 1)
    corner_tuples = list(itertools.combinations_with_replacement(values, cell.num_corners))
    corner_part = [{d: sum(table[d][n] for n in ns) for d in distinct} for ns in corner_tuples]
    families = []
    for cones in itertools.combinations_with_replacement(values, cell.num_cones):
        cone_part = {d: base[d] + 2 * sum(table[d][m] for m in cones) for d in distinct}
        for corners, cp in zip(corner_tuples, corner_part):
            per_degree = {d: cone_part[d] + cp[d] for d in distinct}
            if not crit.holds([per_degree[d] for d in crit.slot_degrees]):
                continue
            fc = tuple(m for m in cones if m < D)
            fn = tuple(n for n in corners if n < D)
            regions = []
            _hyperbolic_regions(
                chi_u, fc, len(cones) - len(fc), D, fn, len(corners) - len(fn), D, regions
            )
            for rc, a, lo_a, rn, c, lo_c in regions:
                families.append(
                    SignatureFamily(
                        surf,
                        tuple(sorted([Slot.finite(m) for m in rc] + [Slot.atleast(lo_a)] * a)),
                        tuple(sorted([Slot.finite(n) for n in rn] + [Slot.atleast(lo_c)] * c)),
                        D,
                    )
                )
    return families


def _merge_once(fams: set, attr: str):
    for f in sorted(fams):
        slots = getattr(f, attr)
        for i, s in enumerate(slots):
            if s.at_least or (i and slots[i - 1] == s):
                continue
            rest = slots[:i] + slots[i + 1:]
            partner = replace(f, **{attr: tuple(sorted(rest + (Slot.atleast(s.value + 1),)))})
            if partner in fams:
                merged = replace(f, **{attr: tuple(sorted(rest + (Slot.atleast(s.value),)))})
                return f, partner, merged
    return None


def merge_families(families) -> list:
    """Fuse ``(..., t, ...)`` with ``(..., >=t+1, ...)`` into ``(..., >=t, ...)``.

    The union of the two expansions is exactly the expansion of the fused
    family, so the cover stays exact and disjoint.
    """
    fams = set(families)
    while True:
        hit = _merge_once(fams, "cones") or _merge_once(fams, "corners")
        if hit is None:
            return sorted(fams, key=_family_key)
        a, b, merged = hit
        fams -= {a, b}
        fams.add(merged)


def _family_key(f: SignatureFamily):
    return (f.surface, len(f.cones), len(f.corners), f.cones, f.corners)


def _run(criterion: Criterion, orientable_only: bool, workers: int, context: dict, extra_notes=()):
    dim = sum(2 * d - 1 for d in criterion.slot_degrees)
    cells, notes = _cells(criterion, orientable_only, dim)
    if workers and workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_search_cell, cells))
    else:
        chunks = [_search_cell(c) for c in cells]
    found = [f for chunk in chunks for f in chunk]
    D = criterion.stabilization_degree
    notes.append(
        f"orders >= {D} are interchangeable: the pole order bound in degree d is d-1 "
        f"for every order >= d, and all degrees involved are <= {D}"
    )
    ctx = dict(context)
    ctx["orientable_only"] = orientable_only
    ctx["stabilization_degree"] = D
    return FamilySet(ctx, tuple(merge_families(found)), tuple(notes) + tuple(extra_notes))


# ---------------------------------------------------------- public queries


def classify_target_dim(
    G: SplitGroup, target: int, orientable_only: bool = True, workers: int = 1
) -> FamilySet:
    """All closed hyperbolic signatures with dim Hit(Y, G) = target."""
    if isinstance(target, bool) or not isinstance(target, int) or target < 0:
        raise HitchinError(f"target must be a nonnegative integer (got {target!r})")
    crit = Criterion("total", degrees(G), target=target)
    assert sum(2 * d - 1 for d in crit.slot_degrees) == group_dim(G)
    ctx = {"query": "target_dim", "group": str(G), "target": target}
    return _run(crit, orientable_only, workers, ctx)


def classify_vanishing_differentials(
    d: int, orientable_only: bool = True, workers: int = 1
) -> FamilySet:
    """All closed hyperbolic signatures without nonzero regular d-differentials."""
    if isinstance(d, bool) or not isinstance(d, int) or not 2 <= d <= 64:
        raise HitchinError(f"degree must be an integer in 2..64 (got {d!r})")
    crit = Criterion("vanish", (d,))
    return _run(crit, orientable_only, workers, {"query": "vanishing", "degree": d})


def classify_single_differential(
    G: SplitGroup, orientable_only: bool = True, workers: int = 1
) -> list:
    """For each degree slot, the signatures where only that slot is nonzero.

    Returns ``[(degree, FamilySet), ...]`` in slot order. A degree occurring
    in two slots never qualifies, since both slots have the same dimension.
    """
    degs = degrees(G)
    if len(degs) < 2:
        raise InvalidGroupError(f"{G.display_name} has rank 1; need rank >= 2")
    out = []
    for i, d in enumerate(degs):
        crit = Criterion("single", degs, index=i)
        ctx = {"query": "single_differential", "group": str(G), "degree": d, "slot": i}
        out.append((d, _run(crit, orientable_only, workers, ctx)))
    return out


_CYCLIC_FAMILIES = (GroupFamily.PGL, GroupFamily.PSP, GroupFamily.PODD, GroupFamily.G2)


def classify_cyclic(G: SplitGroup, workers: int = 1) -> list:
    """Orientable signatures whose Hitchin base is carried by the degree n or n-1 slot.

    n is the size of the standard PGL(n) ambient of G. Returns
    ``[(tag, degree, FamilySet), ...]`` with tag "cyclic" or "(n-1)-cyclic".
    """
    if G.family not in _CYCLIC_FAMILIES:
        raise InvalidGroupError(f"cyclic classification does not cover {G.display_name}")
    n = pgl_ambient(G)
    out = []
    for d, fs in classify_single_differential(G, True, workers):
        if d == n:
            out.append(("cyclic", d, fs))
        elif d == n - 1:
            out.append(("(n-1)-cyclic", d, fs))
    return out


def _zariski_pair_ok(H: SplitGroup, G: SplitGroup) -> bool:
    F = GroupFamily
    h, g = H.family, G.family
    if h is F.PGL and H.param == 2:
        return True
    if h is F.PSP and g is F.PGL:
        return G.param == 2 * H.param
    if h is F.PODD and g is F.PGL:
        return G.param == 2 * H.param + 1
    if h is F.PODD and g is F.POEVEN:
        return G.param == H.param + 1
    if h is F.G2:
        return (g is F.PGL and G.param == 7) or (g is F.PODD and G.param == 3)
    return False


def extra_degrees(H: SplitGroup, G: SplitGroup) -> tuple:
    """Degrees of G not accounted for by H, as a sorted multiset difference."""
    big, small = Counter(degrees(G)), Counter(degrees(H))
    if small - big:
        raise InvalidGroupError(f"degrees of {H.display_name} do not embed in {G.display_name}")
    return tuple(sorted((big - small).elements()))


def classify_zariski(H: SplitGroup, G: SplitGroup, workers: int = 1) -> FamilySet:
    """Orientable signatures where every G-Hitchin representation comes from H."""
    if not _zariski_pair_ok(H, G):
        raise InvalidGroupError(
            f"({H.display_name}, {G.display_name}) is not a principal subgroup pair"
        )
    extra = extra_degrees(H, G)
    if not extra:
        raise InvalidGroupError(f"{H.display_name} and {G.display_name} have the same degrees")
    crit = Criterion("vanish", tuple(sorted(set(extra))))
    ctx = {"query": "zariski", "subgroup": str(H), "group": str(G), "extra_degrees": list(extra)}
    return _run(crit, True, workers, ctx)


# ------------------------------------------------------------ enumeration


@dataclass(frozen=True)
class SearchBounds:
    max_genus: int = 0
    max_k: int = 0
    max_l: int = 0  # noqa: E741
    max_order: int = 2
    orientable_only: bool = True
    allow_corners: bool = False
    min_k: int = 0
    min_genus: int = 0
    max_mirror_circles: int = 1


def enumerate_signatures(bounds: SearchBounds) -> Iterator[OrbifoldSignature]:
    """Every closed hyperbolic canonical signature within the bounds, once each."""
    surfs = []
    for g in range(bounds.min_genus, bounds.max_genus + 1):
        surfs.append(Surface(True, g, 0))
    if not bounds.orientable_only:
        for g in range(bounds.min_genus, bounds.max_genus + 1):
            for h in range(1, bounds.max_mirror_circles + 1):
                surfs.append(Surface(True, g, h))
        for x in range(max(1, bounds.min_genus), bounds.max_genus + 1):
            for h in range(0, bounds.max_mirror_circles + 1):
                surfs.append(Surface(False, x, h))
    orders = range(2, bounds.max_order + 1)
    for s in surfs:
        most = bounds.max_l if (bounds.allow_corners and s.mirror_circles) else 0
        for n_cones in range(bounds.min_k, bounds.max_k + 1):
            for n_corners in range(0, most + 1):
                for cones in itertools.combinations_with_replacement(orders, n_cones):
                    for corners in itertools.combinations_with_replacement(orders, n_corners):
                        sig = s.signature(cones, corners)
                        if euler_characteristic(sig) < 0:
                            yield sig


__all__ = [
    "Slot",
    "Surface",
    "SignatureFamily",
    "FamilySet",
    "Criterion",
    "SearchBounds",
    "classify_target_dim",
    "classify_vanishing_differentials",
    "classify_single_differential",
    "classify_cyclic",
    "classify_zariski",
    "enumerate_signatures",
    "expand_family",
    "extra_degrees",
    "merge_families",
    "surfaces",
]
