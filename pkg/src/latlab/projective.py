"""Projective-geometry reading of a graded atomic lattice.

Atoms are points, height-2 elements are lines, height-3 elements are planes.
The checkers verify the classical incidence axioms plus spanning, and
:func:`verify_bvn_characterization` bundles them with the lattice-theoretic
clauses (modular, atomic, perspective, top height) into one report, after
Birkhoff and von Neumann's characterization of quantum-logic lattices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import ElementId, FiniteLattice
from .errors import NotAtomic, NotAtoms, NotGraded, SizeBound
from .limits import MAX_INDEPENDENCE_ATOMS
from .props import (
    Law,
    LawReport,
    PerspectivityMode,
    is_atomic,
    is_modular,
    is_perspective_lattice,
)


@dataclass(frozen=True)
class GeometryView:
    """Height-classified elements of a graded lattice."""

    lattice: FiniteLattice
    points: tuple[ElementId, ...]
    lines: tuple[ElementId, ...]
    planes: tuple[ElementId, ...]


def geometry_view(lat: FiniteLattice) -> GeometryView:
    """Classify elements by height; reject lattices that are not graded."""
    h = lat.heights
    for x, y in lat.upper_neighbors():
        if h[y] != h[x] + 1:
            raise NotGraded(
                f"cover {lat.labels[x]!r} -> {lat.labels[y]!r} jumps height "
                f"{int(h[x])} -> {int(h[y])}",
                witness=(x, y),
            )
    by_height = lambda k: tuple(int(e) for e in np.flatnonzero(h == k))
    return GeometryView(lat, by_height(1), by_height(2), by_height(3))


def check_p1(view: GeometryView) -> LawReport:
    """Two distinct points lie on exactly one common line."""
    lat = view.lattice
    line_mask = np.zeros(lat.size, dtype=bool)
    line_mask[list(view.lines)] = True
    for p, q in itertools.combinations(view.points, 2):
        count = int((lat.leq[p] & lat.leq[q] & line_mask).sum())
        if count != 1:
            return LawReport(Law.P1, False, (p, q), f"{count} common lines")
    return LawReport(Law.P1, True)


def check_p2(view: GeometryView) -> LawReport:
    """Coplanar lines (join of height <= 3) meet in at least a point."""
    lat = view.lattice
    for l1, l2 in itertools.combinations(view.lines, 2):
        if lat.height(lat.join(l1, l2)) > 3:
            continue
        mh = lat.height(lat.meet(l1, l2))
        if mh < 1:
            return LawReport(Law.P2, False, (l1, l2), f"meet height {mh}")
    return LawReport(Law.P2, True)


def check_p3_third_point(view: GeometryView) -> LawReport:
    """Every line carries at least three points."""
    lat = view.lattice
    atom_mask = np.zeros(lat.size, dtype=bool)
    atom_mask[list(view.points)] = True
    for line in view.lines:
        count = int((atom_mask & lat.leq[:, line]).sum())
        if count < 3:
            return LawReport(Law.THIRD_POINT, False, (line,), f"{count} points")
    return LawReport(Law.THIRD_POINT, True)


def _require_atoms(lat: FiniteLattice, qs) -> list[ElementId]:
    qs = [int(q) for q in qs]
    if len(set(qs)) != len(qs):
        raise NotAtoms("atom set contains duplicates", witness=tuple(qs))
    atoms = set(lat.atoms())
    for q in qs:
        if q not in atoms:
            raise NotAtoms(f"{lat.labels[q]!r} is not an atom", witness=(q,))
    return qs


def is_independent(lat: FiniteLattice, qs) -> bool:
    """No atom lies below the join of any subset of the others.

    By join monotonicity it suffices to test each atom against the join of
    all the others.
    """
    qs = _require_atoms(lat, qs)
    for i, q in enumerate(qs):
        rest = lat.join_all(qs[:i] + qs[i + 1 :])
        if lat.le(q, rest):
            return False
    return True


def max_independent_set(lat: FiniteLattice) -> tuple[ElementId, ...]:
    """Lexicographically first independent atom set of maximum size."""
    atomic = is_atomic(lat)
    if not atomic.holds:
        raise NotAtomic("lattice is not atomic", witness=atomic.witness)
    atoms = list(lat.atoms())
    if len(atoms) > MAX_INDEPENDENCE_ATOMS:
        raise SizeBound(
            f"independence search is capped at {MAX_INDEPENDENCE_ATOMS} atoms"
        )

    best: list[ElementId] = []

    def extend(chosen: list[ElementId], start: int):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i in range(start, len(atoms)):
            cand = chosen + [atoms[i]]
            if is_independent(lat, cand):
                extend(cand, i + 1)

    extend([], 0)
    return tuple(best)


def check_spanning(lat: FiniteLattice, n: int) -> LawReport:
    """Some n points join to top and no n-1 points do."""
    atomic = is_atomic(lat)
    if not atomic.holds:
        raise NotAtomic("lattice is not atomic", witness=atomic.witness)
    atoms = lat.atoms()

    def some_subset_spans(k: int):
        if k == 0:
            return (() if lat.top == lat.bottom else None)
        for combo in itertools.combinations(atoms, k):
            if lat.join_all(combo) == lat.top:
                return combo
        return None

    spanning = some_subset_spans(n)
    if spanning is None:
        return LawReport(Law.SPANNING, False, None, f"no {n}-point set spans")
    smaller = some_subset_spans(n - 1)
    if smaller is not None:
        return LawReport(
            Law.SPANNING, False, tuple(smaller), f"{n - 1} points already span"
        )
    return LawReport(Law.SPANNING, True)


@dataclass(frozen=True)
class CharacterizationReport:
    """Per-clause law reports for the quantum-lattice characterization."""

    clauses: dict[str, LawReport]

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.clauses.values())

    def failing(self) -> tuple[str, ...]:
        return tuple(name for name, r in self.clauses.items() if not r.holds)

    def to_dict(self, lat: FiniteLattice | None = None) -> dict:
        return {
            "passed": self.passed,
            "clauses": {k: r.to_dict(lat) for k, r in self.clauses.items()},
        }


def verify_bvn_characterization(lat: FiniteLattice, n: int) -> CharacterizationReport:
    """Check the full profile: modular, atomic, perspective atoms, top height
    n, and the incidence axioms with n-point spanning.  Never raises; clauses
    that cannot even be evaluated are reported as failing."""
    clauses: dict[str, LawReport] = {}
    clauses["modular"] = is_modular(lat)
    clauses["atomic"] = is_atomic(lat)
    clauses["perspective"] = is_perspective_lattice(
        lat, PerspectivityMode.ATOMS_ONLY
    )
    top_h = lat.height(lat.top)
    clauses["top_height"] = LawReport(
        Law.TOP_HEIGHT, top_h == n, None, f"height(top)={top_h}, expected {n}"
    )
    try:
        view = geometry_view(lat)
        clauses["p1"] = check_p1(view)
        clauses["p2"] = check_p2(view)
        clauses["third_point"] = check_p3_third_point(view)
    except NotGraded as exc:
        for name, law in (
            ("p1", Law.P1),
            ("p2", Law.P2),
            ("third_point", Law.THIRD_POINT),
        ):
            clauses[name] = LawReport(law, False, None, f"not graded: {exc}")
    try:
        clauses["spanning"] = check_spanning(lat, n)
    except NotAtomic as exc:
        clauses["spanning"] = LawReport(
            Law.SPANNING, False, None, f"not atomic: {exc}"
        )
    return CharacterizationReport(clauses)
