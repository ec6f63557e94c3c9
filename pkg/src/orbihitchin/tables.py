"""Regenerate the reference tables from the library.

Each ``tableN_rows`` returns plain rows (lists of strings and ints) in a
fixed order, so rendering is byte-for-byte deterministic.
"""

from __future__ import annotations

from .classify import classify_cyclic, classify_single_differential, classify_vanishing_differentials
from .hitchin import dimension_polynomial
from .liealg import Family, SplitGroup, groups_up_to_rank

TABLE2_GROUPS = (
    [SplitGroup(Family.PGL, n) for n in range(2, 8)]
    + [SplitGroup(Family.PSP, m) for m in range(2, 7)]
    + [SplitGroup(Family.POEVEN, m) for m in range(4, 7)]
    + [SplitGroup(Family.G2), SplitGroup(Family.F4), SplitGroup(Family.E6)]
)

SINGLE_GROUPS = (
    [SplitGroup(Family.PGL, n) for n in range(3, 13)]
    + [SplitGroup(Family.PSP, m) for m in range(2, 7)]
    + [SplitGroup(Family.PODD, m) for m in range(2, 7)]
    + [SplitGroup(Family.POEVEN, m) for m in range(3, 7)]
    + [SplitGroup(f) for f in (Family.G2, Family.F4, Family.E6, Family.E7, Family.E8)]
)

CYCLIC_GROUPS = [
    G for G in SINGLE_GROUPS if G.family in (Family.PGL, Family.PSP, Family.PODD, Family.G2)
]

VANISHING_DEGREES = range(2, 44)


def linear_form(total: int, corrections: dict, letter: str) -> str:
    """Render e.g. ``8k-2k2-2k3``; a unit coefficient is left implicit."""

    def term(c, sym):
        return sym if c == 1 else f"{c}{sym}"

    out = term(total, letter)
    for m in sorted(corrections):
        out += "-" + term(corrections[m], f"{letter}{m}")
    return out


def table1_rows(max_rank: int = 8) -> list:
    return [
        [G.display_name, G.dim, G.rank, " ".join(map(str, G.exponents))]
        for G in groups_up_to_rank(max_rank)
    ]


def table2_rows() -> list:
    rows = []
    for G in TABLE2_GROUPS:
        p = dimension_polynomial(G)
        rows.append(
            [
                G.display_name,
                f"-{p.surface_coeff}chi(|Y|)",
                linear_form(p.cone_coeff, p.cone_corrections, "k"),
                linear_form(p.corner_coeff, p.corner_corrections, "l"),
            ]
        )
    return rows


def _slots(f) -> str:
    return "(" + ",".join(str(s) for s in f.cones) + ")"


def table3_rows() -> list:
    rows = []
    for G in CYCLIC_GROUPS:
        for tag, d, fs in classify_cyclic(G):
            for f in fs:
                rows.append([G.display_name, tag, d, _slots(f)])
    return rows


def table4_rows(degrees=VANISHING_DEGREES) -> list:
    rows = []
    for d in degrees:
        for f in classify_vanishing_differentials(d):
            rows.append([d, len(f.cones), _slots(f)])
    return rows


def table5_rows() -> list:
    rows = []
    for G in SINGLE_GROUPS:
        for d, fs in classify_single_differential(G):
            for f in fs:
                rows.append([G.display_name, d, _slots(f)])
    return rows


HEADERS = {
    1: ["group", "dim", "rank", "exponents"],
    2: ["group", "surface_term", "cone_terms", "corner_terms"],
    3: ["group", "kind", "degree", "family"],
    4: ["degree", "k", "family"],
    5: ["group", "degree", "family"],
}

BUILDERS = {1: table1_rows, 2: table2_rows, 3: table3_rows, 4: table4_rows, 5: table5_rows}


def table_rows(number: int) -> list:
    return BUILDERS[number]()
