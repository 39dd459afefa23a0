"""Partial join/meet structures and their realizations in concrete lattices.

A :class:`PartialStructure` is a finite set of named constants together with
statements about them: join equations, meet equations, disjointness, declared
heights, and recorded chain bounds.  Structures always contain the constants
``0`` and ``1`` with ``0 join 1 = 1``, and every statement set is closed under
``0 join x = x`` and ``x join 1 = 1``.  Structures are immutable; every
operation returns a new one.

Construction operations grow a structure step by step:

* :func:`initial_structure` starts from the two bounds and a depth budget.
* :func:`split_element` splits a constant of height >= 2 into two disjoint
  fresh parts whose heights add up to the parent's.
* :func:`add_split_alternative` adds a third part distinct from an existing
  split, re-deriving the parent a second way.
* :func:`boolean_closure` intersects all full boolean extensions of a
  constant set inside an ambient lattice and returns the shared statements.

:func:`find_realization` searches a concrete lattice for an injective,
bound- and statement-preserving assignment of the constants; the search is
exhaustive and returns the lexicographically least realization.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import ElementId, FiniteLattice
from .errors import (
    DepthExhausted,
    MissingSplit,
    RealizationMissing,
    SizeBound,
    UnknownConstant,
)
from .generators import boolean_lattice, subspace_lattice
from .limits import (
    MAX_REALIZATION_CONSTANTS,
    MAX_SUBSTRUCTURE_CONSTANTS,
    MAX_TREE_DEPTH,
    ambient_cap,
    realization_cap,
)
from .projective import geometry_view, is_independent, verify_bvn_characterization


class StatementKind(enum.Enum):
    JOIN_EQ = "join"
    MEET_EQ = "meet"
    DISJOINT = "disjoint"
    HEIGHT_IS = "height"
    CHAIN_BOUND = "chainbound"


@dataclass(frozen=True)
class Statement:
    """One atomic fact about named constants.

    Commutative operand pairs are stored sorted, so equal facts compare equal.
    ``value`` carries the height or chain bound; -1 means not applicable.
    """

    kind: StatementKind
    operands: tuple[str, ...]
    value: int = -1

    @staticmethod
    def join_eq(a: str, b: str, result: str) -> "Statement":
        return Statement(StatementKind.JOIN_EQ, (min(a, b), max(a, b), result))

    @staticmethod
    def meet_eq(a: str, b: str, result: str) -> "Statement":
        return Statement(StatementKind.MEET_EQ, (min(a, b), max(a, b), result))

    @staticmethod
    def disjoint(a: str, b: str) -> "Statement":
        return Statement(StatementKind.DISJOINT, (min(a, b), max(a, b)))

    @staticmethod
    def height_is(a: str, h: int) -> "Statement":
        return Statement(StatementKind.HEIGHT_IS, (a,), h)

    @staticmethod
    def chain_bound(a: str, b: str, d: int) -> "Statement":
        return Statement(StatementKind.CHAIN_BOUND, (min(a, b), max(a, b)), d)

    def sort_key(self):
        return (self.kind.value, self.operands, self.value)


@dataclass(frozen=True)
class PartialStructure:
    """Immutable set of constants plus statements, with a depth budget."""

    constants: tuple[str, ...]
    statements: frozenset[Statement]
    depth_bound: int
    zero: str = "0"
    one: str = "1"
    counter: int = 0

    # ----- queries --------------------------------------------------------

    def height_of(self, symbol: str) -> int | None:
        for st in self.statements:
            if st.kind is StatementKind.HEIGHT_IS and st.operands[0] == symbol:
                return st.value
        return None

    def split_of(self, symbol: str) -> tuple[str, str] | None:
        """The recorded disjoint split (b, c) with b join c = symbol, if any."""
        for st in sorted(self.statements, key=Statement.sort_key):
            if st.kind is StatementKind.JOIN_EQ and st.operands[2] == symbol:
                b, c = st.operands[0], st.operands[1]
                if symbol in (b, c):
                    continue
                if Statement.disjoint(b, c) in self.statements:
                    return (b, c)
        return None

    def leaves(self) -> tuple[str, ...]:
        """Constants declared at height 1, in declaration order."""
        return tuple(c for c in self.constants if self.height_of(c) == 1)

    def sorted_statements(self) -> tuple[Statement, ...]:
        return tuple(sorted(self.statements, key=Statement.sort_key))

    # ----- growth ---------------------------------------------------------

    def extend(self, constants=(), statements=(), counter=None) -> "PartialStructure":
        """New structure with extra constants and statements.

        Closure statements for the new constants are added automatically.
        Raises UnknownConstant for statements about undeclared constants and
        DepthExhausted for declared heights above the depth bound.
        """
        new_consts = tuple(constants)
        for c in new_consts:
            if c in self.constants or new_consts.count(c) > 1:
                raise ValueError(f"constant {c!r} is already declared")
        all_consts = self.constants + new_consts
        known = set(all_consts)

        stmts = set(self.statements)
        for st in statements:
            for op in st.operands:
                if op not in known:
                    raise UnknownConstant(
                        f"statement names unknown constant {op!r}", witness=(op,)
                    )
            if st.kind is StatementKind.HEIGHT_IS:
                if st.value < 0 or st.value > self.depth_bound:
                    raise DepthExhausted(
                        f"height {st.value} for {st.operands[0]!r} is outside "
                        f"the depth bound {self.depth_bound}"
                    )
            if st.kind is StatementKind.CHAIN_BOUND:
                if st.value < 0 or st.value > self.depth_bound:
                    raise DepthExhausted(
                        f"chain bound {st.value} exceeds the depth bound "
                        f"{self.depth_bound}"
                    )
            stmts.add(st)
        for c in all_consts:
            stmts.add(Statement.join_eq(self.zero, c, c))
            stmts.add(Statement.join_eq(c, self.one, self.one))

        declared: dict[str, int] = {}
        for st in stmts:
            if st.kind is StatementKind.HEIGHT_IS:
                prev = declared.setdefault(st.operands[0], st.value)
                if prev != st.value:
                    raise ValueError(
                        f"conflicting heights {prev} and {st.value} "
                        f"for {st.operands[0]!r}"
                    )

        return PartialStructure(
            constants=all_consts,
            statements=frozenset(stmts),
            depth_bound=self.depth_bound,
            zero=self.zero,
            one=self.one,
            counter=self.counter if counter is None else counter,
        )

    def renamed(self, mapping: dict[str, str]) -> "PartialStructure":
        """Rename constants (bounds excluded); statements follow."""
        for old in mapping:
            if old in (self.zero, self.one):
                raise ValueError("cannot rename the bound constants")
            if old not in self.constants:
                raise UnknownConstant(f"unknown constant {old!r}", witness=(old,))
        sub = lambda s: mapping.get(s, s)
        new_consts = tuple(sub(c) for c in self.constants)
        if len(set(new_consts)) != len(new_consts):
            raise ValueError("renaming collides constants")
        new_stmts = set()
        for st in self.statements:
            ops = st.operands
            if st.kind in (StatementKind.JOIN_EQ, StatementKind.MEET_EQ):
                new_stmts.add(
                    Statement(st.kind, (min(sub(ops[0]), sub(ops[1])),
                                        max(sub(ops[0]), sub(ops[1])),
                                        sub(ops[2])), st.value)
                )
            elif st.kind in (StatementKind.DISJOINT, StatementKind.CHAIN_BOUND):
                new_stmts.add(
                    Statement(st.kind, (min(sub(ops[0]), sub(ops[1])),
                                        max(sub(ops[0]), sub(ops[1]))), st.value)
                )
            else:
                new_stmts.add(Statement(st.kind, (sub(ops[0]),), st.value))
        return PartialStructure(
            constants=new_consts,
            statements=frozenset(new_stmts),
            depth_bound=self.depth_bound,
            zero=self.zero,
            one=self.one,
            counter=self.counter,
        )


def initial_structure(depth_bound: int) -> PartialStructure:
    """The two bounds with 0 join 1 = 1, h(0)=0 and h(1)=depth_bound."""
    if depth_bound < 1:
        raise ValueError("depth bound must be >= 1")
    seed = PartialStructure(
        constants=(), statements=frozenset(), depth_bound=depth_bound
    )
    return seed.extend(
        constants=("0", "1"),
        statements=(
            Statement.join_eq("0", "1", "1"),
            Statement.height_is("0", 0),
            Statement.height_is("1", depth_bound),
        ),
    )


def split_element(
    structure: PartialStructure, symbol: str, heights: tuple[int, int] | None = None
) -> PartialStructure:
    """Split a constant into two fresh disjoint parts re-joining to it.

    The parts' declared heights are positive and sum to the parent's height;
    by default the split is as even as possible.  Raises DepthExhausted when
    the parent's height is below 2.
    """
    if symbol not in structure.constants:
        raise UnknownConstant(f"unknown constant {symbol!r}", witness=(symbol,))
    h = structure.height_of(symbol)
    if h is None:
        raise UnknownConstant(f"{symbol!r} has no declared height", witness=(symbol,))
    if h < 2:
        raise DepthExhausted(
            f"cannot split {symbol!r} at height {h}", witness=(symbol,)
        )
    if heights is None:
        heights = ((h + 1) // 2, h // 2)
    hb, hc = heights
    if hb < 1 or hc < 1 or hb + hc != h:
        raise ValueError("split heights must be positive and sum to the parent's")

    k = structure.counter + 1
    b, c = f"b{k}", f"c{k}"
    return structure.extend(
        constants=(b, c),
        statements=(
            Statement.join_eq(b, c, symbol),
            Statement.join_eq(b, symbol, symbol),
            Statement.join_eq(c, symbol, symbol),
            Statement.disjoint(b, c),
            Statement.height_is(b, hb),
            Statement.height_is(c, hc),
        ),
        counter=k,
    )


def split_element_branches(
    structure: PartialStructure, symbol: str
) -> list[PartialStructure]:
    """One structure per admissible height split of the constant."""
    h = structure.height_of(symbol)
    if h is None or symbol not in structure.constants:
        raise UnknownConstant(f"unknown constant {symbol!r}", witness=(symbol,))
    if h < 2:
        raise DepthExhausted(
            f"cannot split {symbol!r} at height {h}", witness=(symbol,)
        )
    return [split_element(structure, symbol, (i, h - i)) for i in range(1, h)]


def add_split_alternative(
    structure: PartialStructure, symbol: str, part: str, other: str
) -> PartialStructure:
    """Add a third part distinct from an existing split of ``symbol``.

    Requires the split ``part join other = symbol`` (with disjointness) to be
    recorded.  The new constant re-derives the parent: it joins with
    ``other`` to ``symbol``, is disjoint from ``other``, and has ``part``'s
    height.  Distinctness from the old parts is inherent: distinct constants
    realize injectively.
    """
    joined = Statement.join_eq(part, other, symbol)
    apart = Statement.disjoint(part, other)
    if joined not in structure.statements or apart not in structure.statements:
        raise MissingSplit(
            f"no recorded split of {symbol!r} into {part!r} and {other!r}",
            witness=(symbol, part, other),
        )
    h = structure.height_of(part)
    alt = part + "'"
    while alt in structure.constants:
        alt += "'"
    stmts = [
        Statement.join_eq(alt, other, symbol),
        Statement.join_eq(alt, symbol, symbol),
        Statement.disjoint(alt, other),
    ]
    if h is not None:
        stmts.append(Statement.height_is(alt, h))
    return structure.extend(constants=(alt,), statements=stmts)


def saturate_splits(structure: PartialStructure) -> PartialStructure:
    """Split every unsplit constant of height >= 2 until only atoms remain.

    Splits are as even as possible, so a structure started at depth 2^d
    becomes a perfect binary split tree with 2^d height-1 leaves.
    """
    while True:
        target = None
        for c in structure.constants:
            h = structure.height_of(c)
            if h is not None and h >= 2 and structure.split_of(c) is None:
                target = c
                break
        if target is None:
            return structure
        structure = split_element(structure, target)


def build_tree(depth: int) -> PartialStructure:
    """Perfect binary split tree of the given depth.

    The root receives height 2^depth and every split is even, so the tree
    has exactly 2^depth height-1 leaves, renamed p1..p{2^depth}.
    """
    if not 1 <= depth <= MAX_TREE_DEPTH:
        raise SizeBound(f"tree depth must be between 1 and {MAX_TREE_DEPTH}")
    s = saturate_splits(initial_structure(2**depth))
    renames = {c: f"p{i + 1}" for i, c in enumerate(s.leaves())}
    return s.renamed(renames)


def triple_split_structure() -> PartialStructure:
    """Two disjoint atoms joining to a height-2 top, plus a third alternative.

    The smallest structure that separates boolean from non-boolean targets:
    it has no realization in any powerset lattice but realizes in the
    diamond and in rank-2 subspace lattices.
    """
    s = split_element(initial_structure(2), "1")
    b, c = s.split_of("1")
    return add_split_alternative(s, "1", b, c)


# ----- realizations -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Realization:
    """Injective bound/statement-preserving assignment of constants."""

    structure: PartialStructure
    lattice: FiniteLattice
    mapping: dict[str, ElementId]

    def as_labels(self) -> dict[str, str]:
        return {c: self.lattice.labels[e] for c, e in self.mapping.items()}


def satisfies(
    structure: PartialStructure, lat: FiniteLattice, mapping: dict[str, ElementId]
) -> bool:
    """Direct evaluation: does the mapping realize the structure?

    Used by the search below only through its result, so it doubles as an
    independent check on any claimed realization.
    """
    try:
        values = [mapping[c] for c in structure.constants]
    except KeyError:
        return False
    if len(set(values)) != len(values):
        return False
    if mapping[structure.zero] != lat.bottom or mapping[structure.one] != lat.top:
        return False
    for st in structure.statements:
        ops = [mapping[o] for o in st.operands]
        if st.kind is StatementKind.JOIN_EQ:
            if lat.join(ops[0], ops[1]) != ops[2]:
                return False
        elif st.kind is StatementKind.MEET_EQ:
            if lat.meet(ops[0], ops[1]) != ops[2]:
                return False
        elif st.kind is StatementKind.DISJOINT:
            if lat.meet(ops[0], ops[1]) != lat.bottom:
                return False
        elif st.kind is StatementKind.HEIGHT_IS:
            if lat.height(ops[0]) != st.value:
                return False
        # chain bounds are recorded, not enforced
    return True


def find_realization(
    structure: PartialStructure,
    lat: FiniteLattice,
    pin: dict[str, ElementId] | None = None,
) -> Realization | None:
    """Exhaustive backtracking search for a realization.

    Constants are assigned in declaration order and candidate elements tried
    ascending, so the first hit is the lexicographically least realization.
    ``pin`` fixes chosen constants to given elements.  Returns None when no
    realization exists.
    """
    cap = realization_cap()
    if lat.size > cap:
        raise SizeBound(f"realization search is capped at {cap} elements")
    consts = structure.constants
    if len(consts) > MAX_REALIZATION_CONSTANTS:
        raise SizeBound(
            f"realization search is capped at {MAX_REALIZATION_CONSTANTS} constants"
        )
    pin = dict(pin or {})
    for c in pin:
        if c not in consts:
            raise UnknownConstant(f"pinned constant {c!r} is undeclared", witness=(c,))

    pos = {c: i for i, c in enumerate(consts)}
    heights = lat.heights
    domains: list[list[int]] = []
    for c in consts:
        if c == structure.zero:
            dom = [lat.bottom]
        elif c == structure.one:
            dom = [lat.top]
        else:
            dom = list(range(lat.size))
        h = structure.height_of(c)
        if h is not None:
            dom = [e for e in dom if heights[e] == h]
        if c in pin:
            dom = [e for e in dom if e == pin[c]]
        if not dom:
            return None
        domains.append(dom)

    by_last: list[list[tuple[Statement, list[int]]]] = [[] for _ in consts]
    for st in structure.statements:
        if st.kind is StatementKind.CHAIN_BOUND:
            continue
        ps = [pos[o] for o in st.operands]
        by_last[max(ps)].append((st, ps))

    meet_t, join_t = lat.meet_table, lat.join_table
    assign = [-1] * len(consts)
    used: set[int] = set()

    def locally_consistent(k: int) -> bool:
        for st, ps in by_last[k]:
            vals = [assign[p] for p in ps]
            if st.kind is StatementKind.JOIN_EQ:
                if join_t[vals[0], vals[1]] != vals[2]:
                    return False
            elif st.kind is StatementKind.MEET_EQ:
                if meet_t[vals[0], vals[1]] != vals[2]:
                    return False
            elif st.kind is StatementKind.DISJOINT:
                if meet_t[vals[0], vals[1]] != lat.bottom:
                    return False
            elif st.kind is StatementKind.HEIGHT_IS:
                if heights[vals[0]] != st.value:
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(consts):
            return True
        for e in domains[k]:
            if e in used:
                continue
            assign[k] = e
            if locally_consistent(k):
                used.add(e)
                if search(k + 1):
                    return True
                used.discard(e)
        assign[k] = -1
        return False

    if not search(0):
        return None
    return Realization(structure, lat, {c: int(assign[pos[c]]) for c in consts})


# ----- boolean sublattices, covers, closure --------------------------------


@dataclass(frozen=True)
class BooleanSublattice:
    """A boolean sublattice of an ambient lattice, given by its elements.

    ``blocks`` are its atoms: pairwise-disjoint ambient elements joining to
    the ambient top; the sublattice is all subset-joins of the blocks.
    """

    elements: tuple[ElementId, ...]
    blocks: tuple[ElementId, ...]


def _close_blocks(lat: FiniteLattice, blocks: list[int]) -> BooleanSublattice | None:
    k = len(blocks)
    joins = [lat.bottom] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        joins[mask] = lat.join(joins[mask ^ (1 << low)], blocks[low])
    if len(set(joins)) != 1 << k:
        return None
    for i in range(1 << k):
        for j in range(i, 1 << k):
            if lat.meet(joins[i], joins[j]) != joins[i & j]:
                return None
    return BooleanSublattice(tuple(sorted(set(joins))), tuple(blocks))


def enumerate_boolean_sublattices(
    lat: FiniteLattice, must_contain=()
) -> list[BooleanSublattice]:
    """All boolean sublattices sharing the ambient bottom and top.

    Each is generated by a disjoint block decomposition of the top; the
    decomposition's subset-joins must be distinct and meet-compatible.
    """
    cap = ambient_cap()
    if lat.size > cap:
        raise SizeBound(f"sublattice enumeration is capped at {cap} elements")
    required = set(int(e) for e in must_contain)
    nonzero = [e for e in range(lat.size) if e != lat.bottom]
    max_blocks = max(lat.size.bit_length() - 1, 1)
    out: list[BooleanSublattice] = []

    def grow(blocks: list[int], join_so_far: int, start: int):
        if join_so_far == lat.top and blocks:
            sub = _close_blocks(lat, blocks)
            if sub is not None and required <= set(sub.elements):
                out.append(sub)
            return
        if len(blocks) >= max_blocks:
            return
        for i in range(start, len(nonzero)):
            z = nonzero[i]
            if all(lat.meet(z, b) == lat.bottom for b in blocks):
                grow(blocks + [z], lat.join(join_so_far, z), i + 1)

    grow([], lat.bottom, 0)
    out.sort(key=lambda s: (len(s.elements), s.elements))
    return out


@dataclass(frozen=True, eq=False)
class CoverPart:
    """A substructure, a boolean sublattice extending it, and the embedding."""

    constants: tuple[str, ...]
    sublattice: BooleanSublattice
    embedding: dict[str, ElementId]


@dataclass(frozen=True, eq=False)
class Cover:
    """Maximal mutually-consistent family of boolean extensions."""

    parts: tuple[CoverPart, ...]

    def full_extensions(self, constants) -> list[CoverPart]:
        target = tuple(sorted(constants))
        return [p for p in self.parts if p.constants == target]


def _anchored_realization(structure, ambient, realization):
    if realization is None:
        realization = find_realization(structure, ambient)
    if realization is None:
        raise RealizationMissing(
            f"structure has no realization in {ambient.name}"
        )
    return realization


def covers_of(
    structure: PartialStructure,
    constants,
    ambient: FiniteLattice,
    realization: Realization | None = None,
) -> list[Cover]:
    """All maximal consistent families of boolean extensions of subsets of
    ``constants`` inside the ambient lattice.

    Embeddings are anchored to the canonical (lexicographically least)
    realization, under which all admissible extensions agree pairwise, so
    exactly one maximal family exists.
    """
    symbols = tuple(sorted(set(constants)))
    for c in symbols:
        if c not in structure.constants:
            raise UnknownConstant(f"unknown constant {c!r}", witness=(c,))
    if len(symbols) > MAX_SUBSTRUCTURE_CONSTANTS:
        raise SizeBound(
            f"covers are capped at {MAX_SUBSTRUCTURE_CONSTANTS} constants"
        )
    f = _anchored_realization(structure, ambient, realization)
    subs = enumerate_boolean_sublattices(ambient)
    parts = []
    for r in range(1, len(symbols) + 1):
        for group in itertools.combinations(symbols, r):
            image = {f.mapping[c] for c in group}
            for sub in subs:
                if image <= set(sub.elements):
                    parts.append(
                        CoverPart(group, sub, {c: f.mapping[c] for c in group})
                    )
    return [Cover(tuple(parts))]


@dataclass(frozen=True, eq=False)
class ClosureResult:
    """Statements common to all full boolean extensions of a constant set."""

    statements: frozenset[Statement]
    new_constants: tuple[str, ...]
    naming: dict[str, ElementId]
    elements: tuple[ElementId, ...]


def boolean_closure(
    structure: PartialStructure,
    constants,
    ambient: FiniteLattice,
    realization: Realization | None = None,
) -> ClosureResult | None:
    """Intersect every full boolean extension of ``constants`` in the ambient.

    Returns the join/meet/disjointness/height statements shared by all such
    extensions, phrased over existing constant names plus fresh ones for
    shared elements the structure does not name yet.  Returns None when no
    boolean sublattice extends the whole constant set.
    """
    symbols = tuple(sorted(set(constants)))
    for c in symbols:
        if c not in structure.constants:
            raise UnknownConstant(f"unknown constant {c!r}", witness=(c,))
    if len(symbols) > MAX_SUBSTRUCTURE_CONSTANTS:
        raise SizeBound(
            f"closure is capped at {MAX_SUBSTRUCTURE_CONSTANTS} constants"
        )
    f = _anchored_realization(structure, ambient, realization)
    image = {f.mapping[c] for c in symbols}
    extensions = [
        sub
        for sub in enumerate_boolean_sublattices(ambient)
        if image <= set(sub.elements)
    ]
    if not extensions:
        return None
    shared = set(extensions[0].elements)
    for sub in extensions[1:]:
        shared &= set(sub.elements)
    elements = tuple(sorted(shared))

    name_of: dict[ElementId, str] = {}
    for c in structure.constants:
        name_of[f.mapping[c]] = c
    fresh: list[str] = []
    serial = 0
    for e in elements:
        if e not in name_of:
            serial += 1
            sym = f"q{serial}"
            while sym in structure.constants or sym in fresh:
                serial += 1
                sym = f"q{serial}"
            name_of[e] = sym
            fresh.append(sym)

    stmts: set[Statement] = set()
    for e in elements:
        stmts.add(Statement.height_is(name_of[e], ambient.height(e)))
    for x, y in itertools.combinations(elements, 2):
        stmts.add(Statement.join_eq(name_of[x], name_of[y], name_of[ambient.join(x, y)]))
        m = ambient.meet(x, y)
        stmts.add(Statement.meet_eq(name_of[x], name_of[y], name_of[m]))
        if m == ambient.bottom:
            stmts.add(Statement.disjoint(name_of[x], name_of[y]))

    naming = {name_of[e]: e for e in elements}
    return ClosureResult(frozenset(stmts), tuple(fresh), naming, elements)


def apply_closure(
    structure: PartialStructure, closure: ClosureResult
) -> PartialStructure:
    """Extend the structure by a closure's fresh constants and statements."""
    return structure.extend(closure.new_constants, closure.statements)


def derive_independent_atoms(
    structure: PartialStructure,
    lat: FiniteLattice,
    realization: Realization | None = None,
) -> tuple[ElementId, ...]:
    """Greedily select leaf images whose running join climbs one per step.

    Walks the structure's height-1 constants in declaration order, keeping
    each image that is not yet below the running join and raises its height
    by exactly one.  On height-law targets the result is an independent atom
    set spanning the image of the root.
    """
    f = _anchored_realization(structure, lat, realization)
    chosen: list[ElementId] = []
    running = lat.bottom
    for c in structure.leaves():
        e = f.mapping[c]
        if lat.le(e, running):
            continue
        stepped = lat.join(running, e)
        if lat.height(stepped) == lat.height(running) + 1:
            chosen.append(e)
            running = stepped
    return tuple(chosen)


# ----- probe structures -----------------------------------------------------


def line_probe_structure(depth_bound: int) -> PartialStructure:
    """Two atoms spanning a line, plus a third alternative part.

    Realizable in a lattice (with the line pinned) exactly when that line
    carries a third point.  For depth 2 the line is the top itself.
    """
    s = initial_structure(depth_bound)
    if depth_bound == 2:
        line = s.one
    else:
        line = "l"
        s = s.extend((line,), (Statement.height_is(line, 2),))
    s = s.extend(
        ("x", "y"),
        (
            Statement.height_is("x", 1),
            Statement.height_is("y", 1),
            Statement.join_eq("x", "y", line),
            Statement.disjoint("x", "y"),
        ),
    )
    return add_split_alternative(s, line, "x", "y")


def atom_pair_structure(depth_bound: int) -> PartialStructure:
    """Bounds plus two unconstrained atoms."""
    s = initial_structure(depth_bound)
    return s.extend(
        ("x", "y"),
        (Statement.height_is("x", 1), Statement.height_is("y", 1)),
    )


def coplanar_lines_structure(depth_bound: int) -> PartialStructure:
    """Two distinct lines joining to a common plane.

    For depth 3 the plane is the top itself.
    """
    if depth_bound < 3:
        raise ValueError("coplanar lines need a depth bound of at least 3")
    s = initial_structure(depth_bound)
    if depth_bound == 3:
        plane = s.one
    else:
        plane = "pl"
        s = s.extend((plane,), (Statement.height_is(plane, 3),))
    return s.extend(
        ("l1", "l2"),
        (
            Statement.height_is("l1", 2),
            Statement.height_is("l2", 2),
            Statement.join_eq("l1", "l2", plane),
        ),
    )


# ----- end-to-end verification ----------------------------------------------


@dataclass
class PipelineReport:
    """Stage-by-stage outcome of an end-to-end verification run."""

    name: str
    params: dict
    stages: dict[str, dict]

    @property
    def passed(self) -> bool:
        return all(stage["ok"] for stage in self.stages.values())

    def to_dict(self) -> dict:
        return {
            "pipeline": self.name,
            "params": dict(self.params),
            "passed": self.passed,
            "stages": {k: dict(v) for k, v in self.stages.items()},
        }


def _split_witness_exists(lat: FiniteLattice, e: ElementId, hb: int, hc: int) -> bool:
    hs = lat.heights
    for x in np.flatnonzero(hs == hb):
        hits = (
            (hs == hc)
            & (lat.join_table[x] == e)
            & (lat.meet_table[x] == lat.bottom)
        )
        if hits.any():
            return True
    return False


def _all_splits_realizable(structure, lat, mapping) -> tuple[bool, str]:
    for c in structure.constants:
        h = structure.height_of(c)
        if h is None or h < 2:
            continue
        for hb in range(1, h):
            if not _split_witness_exists(lat, mapping[c], hb, h - hb):
                return False, f"no ({hb},{h - hb}) split below {c!r}"
    return True, "every admissible split has a witness pair"


def _all_closures_realizable(structure, lat, realization) -> tuple[bool, str]:
    symbols = structure.constants
    if len(symbols) > MAX_SUBSTRUCTURE_CONSTANTS:
        groups = itertools.chain(
            itertools.combinations(symbols, 1), itertools.combinations(symbols, 2)
        )
    else:
        groups = itertools.chain.from_iterable(
            itertools.combinations(symbols, r) for r in range(1, len(symbols) + 1)
        )
    checked = 0
    for group in groups:
        closure = boolean_closure(structure, group, lat, realization=realization)
        if closure is None:
            continue
        extended = apply_closure(structure, closure)
        mapping = dict(realization.mapping)
        mapping.update({c: closure.naming[c] for c in closure.new_constants})
        if not satisfies(extended, lat, mapping):
            return False, f"closure over {group} is not realizable"
        checked += 1
    return True, f"{checked} closures re-realized"


def _closure_covers_lattice(lat: FiniteLattice, closure: ClosureResult) -> bool:
    if set(closure.naming.values()) != set(range(lat.size)):
        return False
    name_of = {e: s for s, e in closure.naming.items()}
    stmts = closure.statements
    for x in range(lat.size):
        if Statement.height_is(name_of[x], lat.height(x)) not in stmts:
            return False
        for y in range(x + 1, lat.size):
            ok = (
                Statement.join_eq(name_of[x], name_of[y], name_of[lat.join(x, y)])
                in stmts
                and Statement.meet_eq(name_of[x], name_of[y], name_of[lat.meet(x, y)])
                in stmts
            )
            if not ok:
                return False
    return True


def verify_boolean_pipeline(n: int) -> PipelineReport:
    """Grow a split tree under depth bound n, realize it in the powerset
    lattice B_n, derive n independent atoms, and recover all of B_n by
    boolean closure; then confirm every further split or closure stays
    realizable."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 4:
        raise SizeBound("the end-to-end boolean pipeline is capped at n=4")
    stages: dict[str, dict] = {}
    report = PipelineReport("boolean", {"n": n}, stages)
    lat = boolean_lattice(n)
    tree = saturate_splits(initial_structure(n))
    f = find_realization(tree, lat)
    stages["tree_realized"] = {
        "ok": f is not None,
        "detail": f"{len(tree.constants)} constants into {lat.name}",
    }
    if f is None:
        return report

    atoms = derive_independent_atoms(tree, lat, f)
    atoms_ok = (
        len(atoms) == n
        and lat.join_all(atoms) == lat.top
        and is_independent(lat, atoms)
    )
    stages["independent_atoms"] = {
        "ok": atoms_ok,
        "detail": f"{len(atoms)} atoms, join height {lat.height(lat.join_all(atoms))}",
    }

    closure = boolean_closure(tree, tree.leaves(), lat, realization=f)
    closure_ok = closure is not None and _closure_covers_lattice(lat, closure)
    stages["closure_complete"] = {
        "ok": closure_ok,
        "detail": "closure names every element with all joins, meets, heights"
        if closure_ok
        else "closure incomplete",
    }
    if not closure_ok:
        return report

    extended = apply_closure(tree, closure)
    mapping = dict(f.mapping)
    mapping.update({c: closure.naming[c] for c in closure.new_constants})
    stages["extension_realized"] = {
        "ok": satisfies(extended, lat, mapping),
        "detail": f"{len(extended.constants)} constants after closure",
    }
    full = Realization(extended, lat, mapping)

    ok, detail = _all_splits_realizable(extended, lat, mapping)
    stages["splits_realizable"] = {"ok": ok, "detail": detail}
    ok, detail = _all_closures_realizable(extended, lat, full)
    stages["closures_realizable"] = {"ok": ok, "detail": detail}
    return report


def verify_projective_pipeline(n: int, q: int) -> PipelineReport:
    """Run the split-tree pipeline against the rank-n subspace lattice over
    GF(q), with the alternative-part operation enabled: check the quantum
    profile, realize the tree, derive independent atoms, give every line a
    third point (impossible in the boolean target), and close coplanar line
    pairs down to a height-1 meet."""
    if n < 1:
        raise ValueError("n must be >= 1")
    stages: dict[str, dict] = {}
    report = PipelineReport("projective", {"n": n, "q": q}, stages)
    lat = subspace_lattice(n, q)

    character = verify_bvn_characterization(lat, n)
    stages["characterization"] = {
        "ok": character.passed,
        "detail": "all clauses hold"
        if character.passed
        else f"failing: {', '.join(character.failing())}",
    }

    tree = saturate_splits(initial_structure(n))
    f = find_realization(tree, lat)
    stages["tree_realized"] = {
        "ok": f is not None,
        "detail": f"{len(tree.constants)} constants into {lat.name}",
    }
    if f is None:
        return report

    atoms = derive_independent_atoms(tree, lat, f)
    atoms_ok = (
        len(atoms) == n
        and lat.join_all(atoms) == lat.top
        and is_independent(lat, atoms)
    )
    stages["independent_atoms"] = {
        "ok": atoms_ok,
        "detail": f"{len(atoms)} atoms, join height {lat.height(lat.join_all(atoms))}",
    }

    view = geometry_view(lat)
    if n >= 2:
        probe = line_probe_structure(n)
        line_const = probe.one if n == 2 else "l"
        missing = [
            line
            for line in view.lines
            if find_realization(probe, lat, pin={line_const: line}) is None
        ]
        stages["third_point_per_line"] = {
            "ok": not missing,
            "detail": f"{len(view.lines)} lines probed"
            if not missing
            else f"no third point on {[lat.labels[l] for l in missing]}",
        }
        boolean = boolean_lattice(n)
        bview = geometry_view(boolean)
        realized = [
            line
            for line in bview.lines
            if find_realization(probe, boolean, pin={line_const: line}) is not None
        ]
        stages["third_point_absent_boolean"] = {
            "ok": not realized,
            "detail": f"probe unrealizable on all {len(bview.lines)} boolean lines"
            if not realized
            else f"boolean line {[boolean.labels[l] for l in realized]} admits one",
        }
    else:
        stages["third_point_per_line"] = {"ok": True, "detail": "no lines at n=1"}
        stages["third_point_absent_boolean"] = {
            "ok": True,
            "detail": "no lines at n=1",
        }

    pair = atom_pair_structure(n)
    joins_ok = True
    pairs_checked = 0
    detail = ""
    for p, r in itertools.combinations(view.points, 2):
        real = find_realization(pair, lat, pin={"x": p, "y": r})
        if real is None:
            joins_ok, detail = False, f"atom pair {p},{r} not realizable"
            break
        closure = boolean_closure(pair, ("x", "y"), lat, realization=real)
        if closure is None:
            joins_ok, detail = False, f"no boolean extension for atoms {p},{r}"
            break
        join_name = None
        for st in closure.statements:
            if st.kind is StatementKind.JOIN_EQ and set(st.operands[:2]) == {"x", "y"}:
                join_name = st.operands[2]
                break
        expected_h = lat.height(lat.join(p, r))
        if (
            join_name is None
            or Statement.height_is(join_name, expected_h) not in closure.statements
            or expected_h != 2
        ):
            joins_ok, detail = False, f"join of atoms {p},{r} not recovered at height 2"
            break
        pairs_checked += 1
    stages["atom_joins_closed"] = {
        "ok": joins_ok,
        "detail": detail or f"{pairs_checked} atom pairs closed with height-2 joins",
    }

    if n >= 3:
        cop = coplanar_lines_structure(n)
        plane_const = cop.one if n == 3 else "pl"
        meets_ok = True
        checked = 0
        detail = ""
        for l1, l2 in itertools.combinations(view.lines, 2):
            plane = lat.join(l1, l2)
            if lat.height(plane) != 3:
                continue
            pins = {"l1": l1, "l2": l2, plane_const: plane}
            real = find_realization(cop, lat, pin=pins)
            if real is None:
                meets_ok, detail = False, f"lines {l1},{l2} not realizable"
                break
            closure = boolean_closure(
                cop, ("l1", "l2", plane_const), lat, realization=real
            )
            if closure is None:
                meets_ok, detail = False, f"no boolean extension for lines {l1},{l2}"
                break
            meet_name = None
            for st in closure.statements:
                if st.kind is StatementKind.MEET_EQ and set(st.operands[:2]) == {
                    "l1",
                    "l2",
                }:
                    meet_name = st.operands[2]
                    break
            if (
                meet_name is None
                or Statement.height_is(meet_name, 1) not in closure.statements
            ):
                meets_ok, detail = False, f"meet of lines {l1},{l2} not at height 1"
                break
            checked += 1
        stages["coplanar_meets_closed"] = {
            "ok": meets_ok,
            "detail": detail or f"{checked} coplanar pairs closed with height-1 meets",
        }
    else:
        stages["coplanar_meets_closed"] = {
            "ok": True,
            "detail": f"no planes at n={n}",
        }
    return report
