"""Plain-dict (JSON-ready) encodings of the library's value types."""

from __future__ import annotations

from fractions import Fraction

from .classify import FamilySet, SignatureFamily, Slot, Surface
from .hitchin import BaseProfile, DimBounds
from .liealg import SplitGroup
from .orbifold import OrbifoldSignature


def fraction_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def signature_to_dict(sig: OrbifoldSignature) -> dict:
    return {
        "genus": sig.genus,
        "underlying_orientable": sig.underlying_orientable,
        "mirror_circles": sig.mirror_circles,
        "boundary_circles": sig.boundary_circles,
        "full_boundaries": sig.full_boundaries,
        "mixed_circles": sig.mixed_circles,
        "cones": list(sig.cones),
        "corners": list(sig.corners),
    }


def signature_from_dict(d: dict) -> OrbifoldSignature:
    return OrbifoldSignature(**{**d, "cones": tuple(d["cones"]), "corners": tuple(d["corners"])})


def group_to_str(G: SplitGroup) -> str:
    return str(G)


def group_from_str(s: str) -> SplitGroup:
    return SplitGroup.parse(s)


def profile_to_dict(p: BaseProfile) -> dict:
    return {"entries": [{"degree": d, "real_dim": v} for d, v in p.entries], "total": p.total}


def profile_from_dict(d: dict) -> BaseProfile:
    return BaseProfile(tuple((e["degree"], e["real_dim"]) for e in d["entries"]), d["total"])


def bounds_to_dict(b: DimBounds) -> dict:
    return {"lower": fraction_to_str(b.lower), "upper": fraction_to_str(b.upper)}


def bounds_from_dict(d: dict) -> DimBounds:
    return DimBounds(Fraction(d["lower"]), Fraction(d["upper"]))


def _slot_to_dict(f: SignatureFamily, s: Slot) -> dict:
    if s.at_least:
        return {"slot": "at_least", "t": s.value, "certificate": f.certificate(s)}
    return {"slot": "finite", "m": s.value}


def _slot_from_dict(d: dict) -> Slot:
    if d["slot"] == "at_least":
        return Slot.atleast(d["t"])
    return Slot.finite(d["m"])


def family_to_dict(f: SignatureFamily) -> dict:
    s = f.surface
    return {
        "surface": {
            "underlying_orientable": s.underlying_orientable,
            "genus": s.genus,
            "mirror_circles": s.mirror_circles,
        },
        "cones": [_slot_to_dict(f, x) for x in f.cones],
        "corners": [_slot_to_dict(f, x) for x in f.corners],
        "stabilization_degree": f.stabilization_degree,
        "text": str(f),
    }


def family_from_dict(d: dict) -> SignatureFamily:
    return SignatureFamily(
        Surface(**d["surface"]),
        tuple(_slot_from_dict(x) for x in d["cones"]),
        tuple(_slot_from_dict(x) for x in d["corners"]),
        d["stabilization_degree"],
    )


def familyset_to_dict(fs: FamilySet) -> dict:
    return {
        "context": dict(fs.context),
        "families": [family_to_dict(f) for f in fs.families],
        "notes": list(fs.notes),
    }


def familyset_from_dict(d: dict) -> FamilySet:
    return FamilySet(
        dict(d["context"]),
        tuple(family_from_dict(f) for f in d["families"]),
        tuple(d["notes"]),
    )
