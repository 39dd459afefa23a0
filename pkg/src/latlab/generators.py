"""Canonical lattice generators.

Powerset (boolean) lattices, subspace lattices of prime-field vector spaces,
and the small named fixtures: the diamond M3, the pentagon N5, and chains.
Generated lattices come with closed-form tables; the validating path through
build_lattice is reserved for the tiny fixtures and user input.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass

import numpy as np

from .core import FiniteLattice, build_lattice
from .errors import SizeBound
from .limits import MAX_BOOLEAN_EXPONENT, MAX_VECTORS, element_cap


def boolean_lattice(n: int) -> FiniteLattice:
    """Powerset of an n-element set ordered by inclusion (B_n)."""
    if n < 1:
        raise ValueError("boolean_lattice needs n >= 1")
    if n > MAX_BOOLEAN_EXPONENT:
        raise SizeBound(f"boolean_lattice is capped at n={MAX_BOOLEAN_EXPONENT}")
    size = 1 << n
    cap = element_cap()
    if size > cap:
        raise SizeBound(f"2^{n} elements exceeds the cap of {cap}")

    names = string.ascii_lowercase[:n]
    labels = [
        "{" + ",".join(names[i] for i in range(n) if mask >> i & 1) + "}"
        for mask in range(size)
    ]
    idx = np.arange(size)
    meet = idx[:, None] & idx[None, :]
    join = idx[:, None] | idx[None, :]
    leq = meet == idx[:, None]
    return FiniteLattice(labels, leq, 0, size - 1, meet, join, name=f"B_{n}")


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q**0.5) + 1))


@dataclass(frozen=True)
class SubspaceLatticeSpec:
    """Parameters of a subspace lattice: dimension and prime field order."""

    dimension: int
    field_order: int

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if not _is_prime(self.field_order):
            raise ValueError(f"field order {self.field_order} is not prime")
        if self.field_order**self.dimension > MAX_VECTORS:
            raise SizeBound(
                f"{self.field_order}^{self.dimension} vectors exceeds "
                f"the cap of {MAX_VECTORS}"
            )


def _rref_bases(n: int, q: int, k: int):
    """All reduced-row-echelon bases of k-dim subspaces of F_q^n."""
    if k == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(n), k):
        free_cells = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free_cells)):
            rows = [[0] * n for _ in range(k)]
            for r in range(k):
                rows[r][pivots[r]] = 1
            for (r, c), v in zip(free_cells, values):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def _span(basis, q: int, n: int) -> frozenset:
    vectors = set()
    for coeffs in itertools.product(range(q), repeat=len(basis)):
        vec = tuple(
            sum(c * row[i] for c, row in zip(coeffs, basis)) % q for i in range(n)
        )
        vectors.add(vec)
    if not basis:
        vectors.add((0,) * n)
    return frozenset(vectors)


def _vector_label(vec, q: int) -> str:
    sep = "" if q <= 9 else ","
    return sep.join(str(v) for v in vec)


def subspace_lattice(dimension: int, field_order: int) -> FiniteLattice:
    """All subspaces of F_q^n ordered by inclusion.

    Meet is intersection, join is linear span; height equals dimension.
    Subspaces are keyed by their reduced-row-echelon basis, so element order
    and labels are canonical.
    """
    spec = SubspaceLatticeSpec(dimension, field_order)
    n, q = spec.dimension, spec.field_order

    bases = []
    for k in range(n + 1):
        bases.extend(sorted(_rref_bases(n, q, k)))
    spans = [_span(b, q, n) for b in bases]
    size = len(bases)
    cap = element_cap()
    if size > cap:
        raise SizeBound(f"{size} subspaces exceeds the cap of {cap}")

    labels = []
    for b in bases:
        if not b:
            labels.append("0")
        else:
            labels.append("<" + ",".join(_vector_label(r, q) for r in b) + ">")

    # containment via one bitset matmul over the q^n vectors
    vec_index = {
        v: i for i, v in enumerate(itertools.product(range(q), repeat=n))
    }
    member = np.zeros((size, len(vec_index)), dtype=np.float32)
    for s, span in enumerate(spans):
        for v in span:
            member[s, vec_index[v]] = 1.0
    missing = member @ (1.0 - member).T  # [x, y] = #(vectors in x but not y)
    leq = missing < 0.5

    dims = np.array([len(b) for b in bases], dtype=np.int32)
    by_span = {span: i for i, span in enumerate(spans)}
    meet = np.empty((size, size), dtype=np.int32)
    for x in range(size):
        for y in range(x, size):
            meet[x, y] = meet[y, x] = by_span[spans[x] & spans[y]]
    # join = lowest-dimensional common superspace
    join = np.empty((size, size), dtype=np.int32)
    big = np.int32(n + 1)
    for x in range(size):
        cu = leq[x][None, :] & leq
        join[x] = np.where(cu, dims[None, :], big).argmin(axis=1)

    return FiniteLattice(
        labels, leq, 0, size - 1, meet, join, name=f"subspaces_{n}_{q}"
    )


def diamond_m3() -> FiniteLattice:
    """Five-element diamond: three incomparable atoms between 0 and 1."""
    labels = ["0", "a", "b", "c", "1"]
    pairs = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    return build_lattice(labels, pairs, name="M3")


def pentagon_n5() -> FiniteLattice:
    """Five-element pentagon: 0 < a < c < 1 alongside 0 < b < 1."""
    labels = ["0", "a", "b", "c", "1"]
    pairs = [(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)]
    return build_lattice(labels, pairs, name="N5")


def chain(k: int) -> FiniteLattice:
    """Total order on k elements."""
    if k < 2:
        raise ValueError("chain needs k >= 2")
    labels = [str(i) for i in range(k)]
    pairs = [(i, i + 1) for i in range(k - 1)]
    return build_lattice(labels, pairs, name=f"chain_{k}")
