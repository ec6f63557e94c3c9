"""Split adjoint simple Lie groups and their integer invariants.

Only the numbers matter here: rank, dimension and exponents. The classical
families are generated from their parameter, the exceptional ones are read
from a fixed table.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidGroupError


class Family(str, enum.Enum):
    PGL = "pgl"  # PGL(n, R)
    PSP = "psp"  # PSp±(2m, R)
    PODD = "podd"  # PO(m, m+1)
    POEVEN = "poeven"  # PO±(m, m)
    G2 = "g2"
    F4 = "f4"
    E6 = "e6"
    E7 = "e7"
    E8 = "e8"


_MIN_PARAM = {Family.PGL: 2, Family.PSP: 1, Family.PODD: 1, Family.POEVEN: 3}

_EXCEPTIONAL = {
    Family.G2: (14, (1, 5)),
    Family.F4: (52, (1, 5, 7, 11)),
    Family.E6: (78, (1, 4, 5, 7, 8, 11)),
    Family.E7: (133, (1, 5, 7, 9, 11, 13, 17)),
    Family.E8: (248, (1, 7, 11, 13, 17, 19, 23, 29)),
}

_PARAM_NAME = {Family.PGL: "n", Family.PSP: "m", Family.PODD: "m", Family.POEVEN: "m"}


@dataclass(frozen=True)
class SplitGroup:
    """One of the nine families of split real forms, with its parameter.

    ``param`` is n for PGL(n,R) and m for the three other classical
    families; it must be ``None`` for the exceptional groups.
    """

    family: Family
    param: Optional[int] = None

    def __post_init__(self):
        try:
            family = Family(self.family)
        except ValueError:
            raise InvalidGroupError(f"unknown group family {self.family!r}") from None
        object.__setattr__(self, "family", family)
        if family in _EXCEPTIONAL:
            if self.param is not None:
                raise InvalidGroupError(f"{family.value} takes no parameter (got {self.param})")
            return
        if self.param is None:
            raise InvalidGroupError(f"{family.value} requires a parameter")
        if isinstance(self.param, bool) or not isinstance(self.param, int):
            raise InvalidGroupError(f"{family.value} parameter must be an integer")
        lo = _MIN_PARAM[family]
        if self.param < lo:
            raise InvalidGroupError(
                f"{family.value} requires {_PARAM_NAME[family]} >= {lo} (got {self.param})"
            )

    @classmethod
    def parse(cls, label: str) -> "SplitGroup":
        """Parse ``pgl:4``, ``psp:2``, ``podd:3``, ``poeven:4``, ``g2`` ... ``e8``."""
        text = label.strip().lower()
        name, sep, arg = text.partition(":")
        try:
            family = Family(name)
        except ValueError:
            raise InvalidGroupError(f"unknown group {label!r}") from None
        if not sep:
            return cls(family)
        try:
            param = int(arg)
        except ValueError:
            raise InvalidGroupError(f"bad parameter in group {label!r}") from None
        return cls(family, param)

    def __str__(self):
        if self.param is None:
            return self.family.value
        return f"{self.family.value}:{self.param}"

    @property
    def display_name(self) -> str:
        f, p = self.family, self.param
        if f is Family.PGL:
            return f"PGL({p},R)"
        if f is Family.PSP:
            return f"PSp±({2 * p},R)"
        if f is Family.PODD:
            return f"PO({p},{p + 1})"
        if f is Family.POEVEN:
            return f"PO±({p},{p})"
        return f.value.upper()

    @property
    def exponents(self) -> tuple:
        return exponents(self)

    @property
    def dim(self) -> int:
        return group_dim(self)

    @property
    def rank(self) -> int:
        return len(exponents(self))

    @property
    def degrees(self) -> tuple:
        return degrees(self)

    @property
    def max_exponent(self) -> int:
        return max(exponents(self))


def exponents(G: SplitGroup) -> tuple:
    """Exponents in table order (for PO±(m,m) the odd run first, then m-1)."""
    f, p = G.family, G.param
    if f is Family.PGL:
        return tuple(range(1, p))
    if f in (Family.PSP, Family.PODD):
        return tuple(range(1, 2 * p, 2))
    if f is Family.POEVEN:
        return tuple(range(1, 2 * p - 2, 2)) + (p - 1,)
    return _EXCEPTIONAL[f][1]


def group_dim(G: SplitGroup) -> int:
    f, p = G.family, G.param
    if f is Family.PGL:
        return p * p - 1
    if f in (Family.PSP, Family.PODD):
        return p * (2 * p + 1)
    if f is Family.POEVEN:
        return p * (2 * p - 1)
    return _EXCEPTIONAL[f][0]


def degrees(G: SplitGroup) -> tuple:
    """Degrees d+1 of the invariant polynomials, one per exponent slot."""
    return tuple(d + 1 for d in exponents(G))


def degree_multiset(G: SplitGroup) -> Counter:
    return Counter(degrees(G))


def pgl_ambient(G: SplitGroup) -> int:
    """n such that G sits in PGL(n,R) through its standard representation.

    Defined for the families used by the cyclic Higgs bundle classification.
    """
    f, p = G.family, G.param
    if f is Family.PGL:
        return p
    if f is Family.PSP:
        return 2 * p
    if f is Family.PODD:
        return 2 * p + 1
    if f is Family.G2:
        return 7
    raise InvalidGroupError(f"{G.display_name} has no standard PGL(n) ambient here")


def groups_up_to_rank(max_rank: int) -> list:
    """Every valid group of rank <= max_rank, in a fixed order."""
    out = []
    for n in range(2, max_rank + 2):
        out.append(SplitGroup(Family.PGL, n))
    for fam in (Family.PSP, Family.PODD):
        for m in range(1, max_rank + 1):
            out.append(SplitGroup(fam, m))
    for m in range(3, max_rank + 1):
        out.append(SplitGroup(Family.POEVEN, m))
    for fam, (_, exps) in _EXCEPTIONAL.items():
        if len(exps) <= max_rank:
            out.append(SplitGroup(fam))
    return out
