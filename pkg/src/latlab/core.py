"""Finite bounded lattices with explicit order and precomputed bound tables.

A :class:`FiniteLattice` stores element labels, the full ``leq`` relation as a
boolean matrix, the global bottom and top, and total meet/join tables.
Elements are addressed by index (``ElementId``); labels exist for rendering.
Instances are immutable after construction: all arrays are marked read-only.

:func:`build_lattice` is the validating constructor: it closes the given
relation reflexively and transitively, rejects cycles and non-lattices with a
witness, and computes the tables.  Generators elsewhere in the package reuse
:class:`FiniteLattice` directly with closed-form tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NoBoundingElements,
    NotALattice,
    NotAPartialOrder,
    NotComparable,
    SizeBound,
)
from .limits import chain_cap, element_cap

ElementId = int


def _transitive_closure(rel: np.ndarray) -> np.ndarray:
    # Doubling via float matmul; fast enough for the 4096-element cap.
    cur = rel.copy()
    while True:
        f = cur.astype(np.float32)
        nxt = cur | ((f @ f) > 0.5)
        if (nxt == cur).all():
            return nxt
        cur = nxt


def _longest_chain_heights(leq: np.ndarray, bottom: int) -> np.ndarray:
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    # y < x implies below(y) is a proper subset of below(x), so sorting by
    # below-counts is a topological order.
    order = np.argsort(leq.sum(axis=0), kind="stable")
    h = np.zeros(n, dtype=np.int32)
    for x in order:
        lows = np.flatnonzero(strict[:, x])
        if lows.size:
            h[x] = h[lows].max() + 1
    return h


class FiniteLattice:
    """Explicit finite lattice over indexed, labelled elements."""

    def __init__(self, labels, leq, bottom, top, meet_table, join_table, name=""):
        self.labels = tuple(str(lab) for lab in labels)
        self.size = len(self.labels)
        self.name = name or f"lattice{self.size}"
        self.leq = np.ascontiguousarray(leq, dtype=bool)
        self.bottom = int(bottom)
        self.top = int(top)
        self.meet_table = np.ascontiguousarray(meet_table, dtype=np.int32)
        self.join_table = np.ascontiguousarray(join_table, dtype=np.int32)
        self.heights = _longest_chain_heights(self.leq, self.bottom)
        for arr in (self.leq, self.meet_table, self.join_table, self.heights):
            arr.setflags(write=False)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, size={self.size})"

    # ----- basic queries -------------------------------------------------

    def le(self, x: ElementId, y: ElementId) -> bool:
        """True iff x <= y."""
        return bool(self.leq[x, y])

    def meet(self, x: ElementId, y: ElementId) -> ElementId:
        return int(self.meet_table[x, y])

    def join(self, x: ElementId, y: ElementId) -> ElementId:
        return int(self.join_table[x, y])

    def height(self, x: ElementId) -> int:
        """Length of the longest chain from bottom to x."""
        return int(self.heights[x])

    def atoms(self) -> tuple[ElementId, ...]:
        """Elements whose only strict lower bound is bottom."""
        return tuple(int(a) for a in np.flatnonzero(self.heights == 1))

    def complements_of(self, x: ElementId) -> tuple[ElementId, ...]:
        """All y with x meet y = bottom and x join y = top, ascending."""
        mask = (self.meet_table[x] == self.bottom) & (self.join_table[x] == self.top)
        return tuple(int(y) for y in np.flatnonzero(mask))

    def join_all(self, xs) -> ElementId:
        out = self.bottom
        for x in xs:
            out = int(self.join_table[out, x])
        return out

    def meet_all(self, xs) -> ElementId:
        out = self.top
        for x in xs:
            out = int(self.meet_table[out, x])
        return out

    def upper_neighbors(self) -> list[tuple[ElementId, ElementId]]:
        """Cover pairs (x, y): x < y with nothing strictly between."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        via = (strict.astype(np.float32) @ strict.astype(np.float32)) > 0.5
        covers = strict & ~via
        return [(int(x), int(y)) for x, y in np.argwhere(covers)]

    def index_of(self, label: str) -> ElementId:
        return self._index[label]

    def interval(self, lo: ElementId, hi: ElementId) -> "FiniteLattice":
        """The interval [lo, hi] as a standalone lattice (labels preserved)."""
        if not self.le(lo, hi):
            raise NotComparable(f"{self.labels[lo]} is not below {self.labels[hi]}")
        keep = [int(e) for e in range(self.size) if self.le(lo, e) and self.le(e, hi)]
        labels = [self.labels[e] for e in keep]
        pairs = [
            (i, j)
            for i, x in enumerate(keep)
            for j, y in enumerate(keep)
            if self.le(x, y)
        ]
        return build_lattice(labels, pairs, name=f"{self.name}[{lo},{hi}]")


def _bound_tables(leq: np.ndarray, heights: np.ndarray, labels) -> tuple[np.ndarray, np.ndarray]:
    """Meet/join tables from the order; NotALattice on the first bad pair."""
    n = leq.shape[0]
    big = np.int32(n + 1)
    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    idx = np.arange(n)
    for x in range(n):
        # join: least common upper bound.  The lub, when it exists, is the
        # unique minimum-height common upper bound dominating all others.
        cu = leq[x][None, :] & leq  # [y, z] = (x <= z) and (y <= z)
        cand = np.where(cu, heights[None, :], big).argmin(axis=1)
        sizes = cu.sum(axis=1)
        dominated = (cu & leq[cand]).sum(axis=1)
        ok = cu[idx, cand] & (dominated == sizes)
        if not ok.all():
            y = int(np.flatnonzero(~ok)[0])
            raise NotALattice(
                f"elements {labels[x]!r} and {labels[y]!r} have no least upper bound",
                witness=(x, y),
            )
        join[x] = cand

        # meet: greatest common lower bound, dual argument.
        cl = leq[:, x][None, :] & leq.T  # [y, z] = (z <= x) and (z <= y)
        cand = np.where(cl, heights[None, :], np.int32(-1)).argmax(axis=1)
        sizes = cl.sum(axis=1)
        dominates = (cl & leq[:, cand].T).sum(axis=1)
        ok = cl[idx, cand] & (dominates == sizes)
        if not ok.all():
            y = int(np.flatnonzero(~ok)[0])
            raise NotALattice(
                f"elements {labels[x]!r} and {labels[y]!r} have no greatest lower bound",
                witness=(x, y),
            )
        meet[x] = cand
    return meet, join


def build_lattice(labels, leq_pairs, name="") -> FiniteLattice:
    """Validating constructor from labels and a generating order relation.

    ``leq_pairs`` is any iterable of index pairs (i, j) meaning
    element i <= element j; the reflexive-transitive closure is computed.
    Raises NotAPartialOrder, NoBoundingElements, NotALattice, or SizeBound.
    """
    labels = [str(lab) for lab in labels]
    n = len(labels)
    if n == 0:
        raise NoBoundingElements("empty element set has no bottom or top")
    if len(set(labels)) != n:
        raise ValueError("labels must be unique")
    cap = element_cap()
    if n > cap:
        raise SizeBound(f"{n} elements exceeds the cap of {cap}")

    rel = np.eye(n, dtype=bool)
    for i, j in leq_pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"order pair ({i}, {j}) out of range")
        rel[i, j] = True
    leq = _transitive_closure(rel)

    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = (int(v) for v in np.argwhere(sym)[0])
        raise NotAPartialOrder(
            f"{labels[i]!r} and {labels[j]!r} lie on a cycle", witness=(i, j)
        )

    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if bottoms.size != 1 or tops.size != 1:
        raise NoBoundingElements("order has no unique bottom/top pair")
    bottom, top = int(bottoms[0]), int(tops[0])

    heights = _longest_chain_heights(leq, bottom)
    meet, join = _bound_tables(leq, heights, labels)
    return FiniteLattice(labels, leq, bottom, top, meet, join, name=name)


@dataclass(frozen=True)
class Chain:
    """Strictly descending sequence of elements of one lattice."""

    lattice: FiniteLattice
    elements: tuple[ElementId, ...]

    def __post_init__(self):
        els = self.elements
        if not els:
            raise ValueError("a chain has at least one element")
        for a, b in zip(els, els[1:]):
            if a == b or not self.lattice.le(b, a):
                raise ValueError("chain elements must strictly descend")

    def __len__(self):
        return len(self.elements)

    @property
    def endpoints(self) -> tuple[ElementId, ElementId]:
        return self.elements[0], self.elements[-1]

    def is_maximal(self) -> bool:
        """True iff every step is a covering step (no element fits between)."""
        lat = self.lattice
        for a, b in zip(self.elements, self.elements[1:]):
            for z in range(lat.size):
                if z not in (a, b) and lat.le(b, z) and lat.le(z, a):
                    return False
        return True


def chains_between(lat: FiniteLattice, a: ElementId, b: ElementId) -> list[Chain]:
    """All chains (maximal and not) between two comparable elements.

    Chains run from the higher end down to the lower; if the arguments come
    in ascending order they are swapped.  Refuses lattices above the chain
    enumeration cap.
    """
    cap = chain_cap()
    if lat.size > cap:
        raise SizeBound(f"chain enumeration is capped at {cap} elements")
    if lat.le(b, a):
        hi, lo = a, b
    elif lat.le(a, b):
        hi, lo = b, a
    else:
        raise NotComparable(
            f"{lat.labels[a]!r} and {lat.labels[b]!r} are incomparable",
            witness=(a, b),
        )
    if hi == lo:
        return [Chain(lat, (hi,))]

    interval = [e for e in range(lat.size) if lat.le(lo, e) and lat.le(e, hi)]
    out: list[Chain] = []

    def descend(prefix: list[ElementId]):
        tail = prefix[-1]
        if tail == lo:
            out.append(Chain(lat, tuple(prefix)))
            return
        for e in interval:
            if e != tail and lat.le(e, tail):
                descend(prefix + [e])

    descend([hi])
    out.sort(key=lambda c: (len(c.elements), c.elements))
    return out


def is_refinement(c1: Chain, c2: Chain) -> bool:
    """True iff c2 is a chain with c1's endpoints whose elements strictly
    contain c1's."""
    if c1.lattice is not c2.lattice:
        return False
    if c1.endpoints != c2.endpoints:
        return False
    s1, s2 = set(c1.elements), set(c2.elements)
    return s1 < s2
