"""Law checkers for finite lattices.

Every checker scans the whole lattice exhaustively (no sampling) and returns
a :class:`LawReport`.  When a law fails, the report carries the
lexicographically first violating element tuple under the element ordering,
so failures are reproducible and re-checkable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import ElementId, FiniteLattice


class Law(enum.Enum):
    LATTICE_AXIOMS = "axioms"
    DISTRIBUTIVE = "distributive"
    MODULAR = "modular"
    HEIGHT_LAW = "heightlaw"
    COMPLEMENTED = "complemented"
    ATOMIC = "atomic"
    PERSPECTIVE = "perspective"
    # projective-geometry laws, checked in latlab.projective
    P1 = "p1"
    P2 = "p2"
    THIRD_POINT = "thirdpoint"
    SPANNING = "spanning"
    TOP_HEIGHT = "topheight"


class PerspectivityMode(enum.Enum):
    ATOMS_ONLY = "atoms"
    EQUAL_HEIGHT_PAIRS = "equal-height"


@dataclass(frozen=True)
class LawReport:
    """Outcome of one law check: the law, whether it holds, and a witness."""

    law: Law
    holds: bool
    witness: tuple[ElementId, ...] | None = None
    detail: str = ""

    def to_dict(self, lat: FiniteLattice | None = None) -> dict:
        witness = None
        if self.witness is not None:
            if lat is None:
                witness = [int(w) for w in self.witness]
            else:
                witness = [lat.labels[w] for w in self.witness]
        return {
            "law": self.law.value,
            "holds": self.holds,
            "witness": witness,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class HeightReport:
    """Per-element longest-chain heights plus the height-law verdict."""

    heights: tuple[int, ...]
    law: LawReport = field(compare=False)


def _first(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(mask)[0])


def check_lattice_axioms(lat: FiniteLattice) -> LawReport:
    """Re-verify idempotency, commutativity, associativity and absorption.

    Works directly off the stored tables, so a corrupted table is caught even
    though build_lattice validated the order it came from.
    """
    m, j = lat.meet_table, lat.join_table
    n = lat.size
    idx = np.arange(n)

    for table, word in ((m, "meet"), (j, "join")):
        bad = table.diagonal() != idx
        if bad.any():
            x = int(np.flatnonzero(bad)[0])
            return LawReport(Law.LATTICE_AXIOMS, False, (x,), f"{word} idempotency")
        sym = table != table.T
        if sym.any():
            return LawReport(
                Law.LATTICE_AXIOMS, False, _first(sym), f"{word} commutativity"
            )

    for x in range(n):
        for table, word in ((m, "meet"), (j, "join")):
            left = table[table[x]]        # [y, z] = t[t[x, y], z]
            right = table[x][table]       # [y, z] = t[x, t[y, z]]
            bad = left != right
            if bad.any():
                y, z = _first(bad)
                return LawReport(
                    Law.LATTICE_AXIOMS, False, (x, y, z), f"{word} associativity"
                )
        bad = m[x][j[x]] != x             # x meet (x join y) = x
        if bad.any():
            y = int(np.flatnonzero(bad)[0])
            return LawReport(Law.LATTICE_AXIOMS, False, (x, y), "meet absorption")
        bad = j[x][m[x]] != x             # x join (x meet y) = x
        if bad.any():
            y = int(np.flatnonzero(bad)[0])
            return LawReport(Law.LATTICE_AXIOMS, False, (x, y), "join absorption")
    return LawReport(Law.LATTICE_AXIOMS, True)


def is_distributive(lat: FiniteLattice) -> LawReport:
    """x meet (y join z) = (x meet y) join (x meet z), all triples."""
    m, j = lat.meet_table, lat.join_table
    for x in range(lat.size):
        lhs = m[x][j]                     # [y, z] = m[x, j[y, z]]
        rhs = j[m[x][:, None], m[x][None, :]]
        bad = lhs != rhs
        if bad.any():
            y, z = _first(bad)
            return LawReport(Law.DISTRIBUTIVE, False, (x, y, z))
    return LawReport(Law.DISTRIBUTIVE, True)


def is_modular(lat: FiniteLattice) -> LawReport:
    """x <= z implies x join (y meet z) = (x join y) meet z."""
    m, j = lat.meet_table, lat.join_table
    for x in range(lat.size):
        lhs = j[x][m]                     # [y, z] = j[x, m[y, z]]
        rhs = m[j[x]]                     # [y, z] = m[j[x, y], z]
        bad = (lhs != rhs) & lat.leq[x][None, :]
        if bad.any():
            y, z = _first(bad)
            return LawReport(Law.MODULAR, False, (x, y, z))
    return LawReport(Law.MODULAR, True)


def height_report(lat: FiniteLattice) -> HeightReport:
    """Heights for every element plus the rank identity verdict.

    The identity: h(x meet y) + h(x join y) = h(x) + h(y) for all pairs.
    """
    h = lat.heights
    lhs = h[lat.meet_table] + h[lat.join_table]
    rhs = h[:, None] + h[None, :]
    bad = lhs != rhs
    if bad.any():
        x, y = _first(bad)
        report = LawReport(
            Law.HEIGHT_LAW,
            False,
            (x, y),
            f"h(meet)+h(join)={int(lhs[x, y])} but h(x)+h(y)={int(rhs[x, y])}",
        )
    else:
        report = LawReport(Law.HEIGHT_LAW, True)
    return HeightReport(tuple(int(v) for v in h), report)


def satisfies_height_law(lat: FiniteLattice) -> LawReport:
    return height_report(lat).law


def is_complemented(lat: FiniteLattice) -> LawReport:
    """Every element has some complement."""
    has = (
        (lat.meet_table == lat.bottom) & (lat.join_table == lat.top)
    ).any(axis=1)
    if not has.all():
        x = int(np.flatnonzero(~has)[0])
        return LawReport(Law.COMPLEMENTED, False, (x,))
    return LawReport(Law.COMPLEMENTED, True)


def _join_of_atoms_below(lat: FiniteLattice) -> np.ndarray:
    jb = np.full(lat.size, lat.bottom, dtype=np.int32)
    for a in lat.atoms():
        mask = lat.leq[a]
        jb[mask] = lat.join_table[jb[mask], a]
    return jb


def is_atomic(lat: FiniteLattice) -> LawReport:
    """Every element is the join of the atoms below it."""
    jb = _join_of_atoms_below(lat)
    bad = jb != np.arange(lat.size)
    if bad.any():
        x = int(np.flatnonzero(bad)[0])
        return LawReport(
            Law.ATOMIC, False, (x,), f"join of atoms below is {lat.labels[jb[x]]!r}"
        )
    return LawReport(Law.ATOMIC, True)


def common_complement(
    lat: FiniteLattice, x: ElementId, y: ElementId
) -> ElementId | None:
    """Least element complementing both x and y, or None."""
    m, j = lat.meet_table, lat.join_table
    mask = (
        (m[x] == lat.bottom)
        & (j[x] == lat.top)
        & (m[y] == lat.bottom)
        & (j[y] == lat.top)
    )
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def is_perspective_lattice(
    lat: FiniteLattice, mode: PerspectivityMode = PerspectivityMode.ATOMS_ONLY
) -> LawReport:
    """Every pair in scope shares a complement (is perspective)."""
    if mode is PerspectivityMode.ATOMS_ONLY:
        pool = list(lat.atoms())
        pairs = [(x, y) for i, x in enumerate(pool) for y in pool[i + 1 :]]
    else:
        h = lat.heights
        pairs = [
            (x, y)
            for x in range(lat.size)
            for y in range(x + 1, lat.size)
            if h[x] == h[y]
        ]
    comp = (lat.meet_table == lat.bottom) & (lat.join_table == lat.top)
    for x, y in pairs:
        if not (comp[x] & comp[y]).any():
            return LawReport(Law.PERSPECTIVE, False, (x, y), mode.value)
    return LawReport(Law.PERSPECTIVE, True, detail=mode.value)
