"""Independent re-evaluation of law violations.

These helpers recompute bounds and heights straight from the order relation
(never from the stored tables, except for the table-level axioms) so a
witness returned by a checker can be confirmed without trusting the checker.
"""

from __future__ import annotations

from functools import lru_cache

from .core import ElementId, FiniteLattice
from .props import Law, LawReport


def order_meet(lat: FiniteLattice, x: ElementId, y: ElementId) -> ElementId | None:
    lows = [z for z in range(lat.size) if lat.le(z, x) and lat.le(z, y)]
    tops = [z for z in lows if all(lat.le(w, z) for w in lows)]
    return tops[0] if len(tops) == 1 else None


def order_join(lat: FiniteLattice, x: ElementId, y: ElementId) -> ElementId | None:
    ups = [z for z in range(lat.size) if lat.le(x, z) and lat.le(y, z)]
    lows = [z for z in ups if all(lat.le(z, w) for w in ups)]
    return lows[0] if len(lows) == 1 else None


def chain_height(lat: FiniteLattice, x: ElementId) -> int:
    """Longest chain bottom..x via direct recursion on the order."""

    @lru_cache(maxsize=None)
    def rec(e: int) -> int:
        below = [z for z in range(lat.size) if z != e and lat.le(z, e)]
        return 1 + max((rec(z) for z in below), default=-1)

    return rec(int(x))


def _violates_axioms(lat: FiniteLattice, witness) -> bool:
    m, j = lat.meet_table, lat.join_table
    if len(witness) == 1:
        (x,) = witness
        return m[x, x] != x or j[x, x] != x
    if len(witness) == 2:
        x, y = witness
        checks = [
            m[x, y] == m[y, x],
            j[x, y] == j[y, x],
            m[x, j[x, y]] == x,
            j[x, m[x, y]] == x,
        ]
        return not all(checks)
    x, y, z = witness
    checks = [
        m[m[x, y], z] == m[x, m[y, z]],
        j[j[x, y], z] == j[x, j[y, z]],
    ]
    return not all(checks)


def _violates_distributive(lat, witness) -> bool:
    x, y, z = witness
    lhs = order_meet(lat, x, order_join(lat, y, z))
    rhs = order_join(lat, order_meet(lat, x, y), order_meet(lat, x, z))
    return lhs != rhs


def _violates_modular(lat, witness) -> bool:
    x, y, z = witness
    if not lat.le(x, z):
        return False
    lhs = order_join(lat, x, order_meet(lat, y, z))
    rhs = order_meet(lat, order_join(lat, x, y), z)
    return lhs != rhs


def _violates_height_law(lat, witness) -> bool:
    x, y = witness
    lhs = chain_height(lat, order_meet(lat, x, y)) + chain_height(
        lat, order_join(lat, x, y)
    )
    return lhs != chain_height(lat, x) + chain_height(lat, y)


def _complements(lat, x):
    return [
        y
        for y in range(lat.size)
        if order_meet(lat, x, y) == lat.bottom and order_join(lat, x, y) == lat.top
    ]


def _violates_complemented(lat, witness) -> bool:
    (x,) = witness
    return not _complements(lat, x)


def _violates_atomic(lat, witness) -> bool:
    (x,) = witness
    atoms_below = [
        a
        for a in range(lat.size)
        if chain_height(lat, a) == 1 and lat.le(a, x)
    ]
    out = lat.bottom
    for a in atoms_below:
        out = order_join(lat, out, a)
    return out != x


def _violates_perspective(lat, witness) -> bool:
    x, y = witness
    return not (set(_complements(lat, x)) & set(_complements(lat, y)))


def _violates_p1(lat, witness) -> bool:
    p, q = witness
    lines = [e for e in range(lat.size) if chain_height(lat, e) == 2]
    above = [l for l in lines if lat.le(p, l) and lat.le(q, l)]
    return len(above) != 1


def _violates_p2(lat, witness) -> bool:
    l1, l2 = witness
    if chain_height(lat, order_join(lat, l1, l2)) > 3:
        return False
    return chain_height(lat, order_meet(lat, l1, l2)) < 1


def _violates_third_point(lat, witness) -> bool:
    (line,) = witness
    atoms = [
        a
        for a in range(lat.size)
        if chain_height(lat, a) == 1 and lat.le(a, line)
    ]
    return len(atoms) < 3


def _violates_spanning(lat, witness) -> bool:
    # A spanning witness is an undersized point set that already joins to top.
    out = lat.bottom
    for a in witness:
        out = order_join(lat, out, a)
    return out == lat.top


_DISPATCH = {
    Law.LATTICE_AXIOMS: _violates_axioms,
    Law.DISTRIBUTIVE: _violates_distributive,
    Law.MODULAR: _violates_modular,
    Law.HEIGHT_LAW: _violates_height_law,
    Law.COMPLEMENTED: _violates_complemented,
    Law.ATOMIC: _violates_atomic,
    Law.PERSPECTIVE: _violates_perspective,
    Law.P1: _violates_p1,
    Law.P2: _violates_p2,
    Law.THIRD_POINT: _violates_third_point,
    Law.SPANNING: _violates_spanning,
}


def witness_violates(lat: FiniteLattice, report: LawReport) -> bool:
    """True iff the report's witness really violates the reported law."""
    if report.holds or report.witness is None:
        return False
    fn = _DISPATCH.get(report.law)
    if fn is None:
        return False
    return bool(fn(lat, tuple(int(w) for w in report.witness)))
