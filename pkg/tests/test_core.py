import itertools

import numpy as np
import pytest

from latlab import (
    Chain,
    NoBoundingElements,
    NotALattice,
    NotAPartialOrder,
    NotComparable,
    SizeBound,
    boolean_lattice,
    build_lattice,
    chain,
    chains_between,
    diamond_m3,
    is_refinement,
    pentagon_n5,
    subspace_lattice,
)
from latlab.limits import chain_cap, element_cap

from oracles import brute_chains, brute_heights, brute_join, brute_meet, leq_rows


def powerset_pairs():
    """B_3 as raw containment cover pairs over labeled subsets."""
    labels = ["{}", "{a}", "{b}", "{c}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}"]
    sets = [set(), {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"},
            {"a", "b", "c"}]
    pairs = [
        (i, j)
        for i, j in itertools.permutations(range(8), 2)
        if sets[i] < sets[j] and len(sets[j] - sets[i]) == 1
    ]
    return labels, pairs, sets


def test_two_element_chain_is_smallest_bounded_lattice():
    lat = build_lattice(["lo", "hi"], [(0, 1)])
    assert lat.size == 2
    assert lat.bottom == 0 and lat.top == 1
    assert lat.meet(0, 1) == 0 and lat.join(0, 1) == 1


def test_powerset_from_cover_pairs_matches_order_oracle():
    labels, pairs, sets = powerset_pairs()
    lat = build_lattice(labels, pairs)
    assert lat.size == 8
    rows = leq_rows(lat)
    for x in range(8):
        for y in range(8):
            assert rows[x][y] == (sets[x] <= sets[y])
            assert lat.meet(x, y) == brute_meet(rows, x, y)
            assert lat.join(x, y) == brute_join(rows, x, y)


def test_hexagon_without_joins_is_rejected_with_witness():
    # 0 below a,b; both a,b below both c,d; 1 on top: lub(a,b) is not unique.
    labels = ["0", "a", "b", "c", "d", "1"]
    pairs = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NotALattice) as err:
        build_lattice(labels, pairs)
    assert err.value.witness == (1, 2)


def test_cycle_is_rejected():
    with pytest.raises(NotAPartialOrder):
        build_lattice(["a", "b"], [(0, 1), (1, 0)])


def test_missing_bounds_are_rejected():
    with pytest.raises(NoBoundingElements):
        build_lattice(["0", "a", "b"], [(0, 1), (0, 2)])
    with pytest.raises(NoBoundingElements):
        build_lattice(["a", "b", "1"], [(0, 2), (1, 2)])


def test_meet_join_powerset_examples():
    b3 = boolean_lattice(3)
    ab = b3.index_of("{a,b}")
    bc = b3.index_of("{b,c}")
    assert b3.labels[b3.meet(ab, bc)] == "{b}"
    a, c = b3.index_of("{a}"), b3.index_of("{c}")
    assert b3.labels[b3.join(a, c)] == "{a,c}"


@pytest.mark.parametrize("lat_builder", [lambda: boolean_lattice(3), diamond_m3,
                                         pentagon_n5, lambda: subspace_lattice(3, 2)])
def test_bound_identities_everywhere(lat_builder):
    lat = lat_builder()
    for x in range(lat.size):
        assert lat.join(lat.bottom, x) == x
        assert lat.join(x, lat.top) == lat.top
        assert lat.meet(x, x) == x
        assert lat.le(x, x)


@pytest.mark.parametrize("lat_builder", [lambda: boolean_lattice(3), diamond_m3,
                                         pentagon_n5, lambda: subspace_lattice(2, 3)])
def test_meet_is_greatest_lower_bound(lat_builder):
    lat = lat_builder()
    rows = leq_rows(lat)
    for x in range(lat.size):
        for y in range(lat.size):
            m, j = lat.meet(x, y), lat.join(x, y)
            assert rows[m][x] and rows[m][y]
            assert rows[x][j] and rows[y][j]
            for z in range(lat.size):
                if rows[z][x] and rows[z][y]:
                    assert rows[z][m]
                if rows[x][z] and rows[y][z]:
                    assert rows[j][z]


@pytest.mark.parametrize("lat_builder", [lambda: boolean_lattice(4), diamond_m3,
                                         pentagon_n5, lambda: subspace_lattice(3, 2)])
def test_order_equivalences(lat_builder):
    lat = lat_builder()
    for x in range(lat.size):
        for y in range(lat.size):
            le = lat.le(x, y)
            assert le == (lat.meet(x, y) == x) == (lat.join(x, y) == y)


def test_heights_match_longest_chain_oracle():
    for lat in [boolean_lattice(4), subspace_lattice(3, 2), pentagon_n5(),
                diamond_m3(), chain(5)]:
        assert list(lat.heights) == brute_heights(leq_rows(lat))


def test_height_profile_examples():
    for n in (1, 2, 3, 4, 5):
        b = boolean_lattice(n)
        assert b.height(b.bottom) == 0
        assert b.height(b.top) == n
    fano = subspace_lattice(3, 2)
    two_dim = [e for e in range(fano.size) if fano.labels[e].count(",") == 1]
    assert len(two_dim) == 7
    assert all(fano.height(e) == 2 for e in two_dim)
    n5 = pentagon_n5()
    # longest chains 0 < a < c < 1 (length 3) and 0 < b < 1 (length 2)
    assert n5.height(n5.top) == 3
    assert n5.height(n5.index_of("b")) == 1
    assert n5.height(n5.index_of("c")) == 2


def test_height_strictly_monotone():
    for lat in [boolean_lattice(4), pentagon_n5(), subspace_lattice(2, 3)]:
        for x in range(lat.size):
            for y in range(lat.size):
                if lat.le(x, y) and x != y:
                    assert lat.height(x) < lat.height(y)


def test_atoms_examples():
    b3 = boolean_lattice(3)
    assert sorted(b3.labels[a] for a in b3.atoms()) == ["{a}", "{b}", "{c}"]
    assert len(subspace_lattice(3, 2).atoms()) == 7
    two = chain(2)
    assert two.atoms() == (two.top,)


def test_complements_examples():
    b3 = boolean_lattice(3)
    assert b3.complements_of(b3.bottom) == (b3.top,)
    a = b3.index_of("{a}")
    assert [b3.labels[c] for c in b3.complements_of(a)] == ["{b,c}"]
    m3 = diamond_m3()
    assert sorted(m3.labels[c] for c in m3.complements_of(m3.index_of("a"))) == ["b", "c"]


def test_every_boolean_element_has_exactly_one_complement():
    for n in (2, 3, 4):
        b = boolean_lattice(n)
        for x in range(b.size):
            assert len(b.complements_of(x)) == 1


def test_lattice_is_immutable():
    b2 = boolean_lattice(2)
    with pytest.raises(ValueError):
        b2.leq[0, 0] = False
    with pytest.raises(ValueError):
        b2.meet_table[0, 0] = 1
    with pytest.raises(ValueError):
        b2.heights[0] = 5


def test_element_cap_env_var_lowers_only(monkeypatch):
    monkeypatch.setenv("LATTICE_MAX_ELEMENTS", "4")
    assert element_cap() == 4
    with pytest.raises(SizeBound):
        boolean_lattice(3)
    monkeypatch.setenv("LATTICE_MAX_ELEMENTS", "999999")
    assert element_cap() == 4096


def test_chains_between_trivial_and_diamond():
    two = chain(2)
    found = chains_between(two, two.top, two.bottom)
    assert [c.elements for c in found] == [(1, 0)]

    b2 = boolean_lattice(2)
    found = chains_between(b2, b2.top, b2.bottom)
    oracle = brute_chains(leq_rows(b2), b2.top, b2.bottom)
    assert [c.elements for c in found] == oracle
    maximal = [c for c in found if c.is_maximal()]
    assert len(maximal) == 2  # one through either atom
    assert all(len(c) == 3 for c in maximal)


def test_chains_between_matches_oracle_on_b3():
    b3 = boolean_lattice(3)
    found = chains_between(b3, b3.top, b3.bottom)
    assert [c.elements for c in found] == brute_chains(leq_rows(b3), b3.top, b3.bottom)
    assert sum(c.is_maximal() for c in found) == 6


def test_chains_between_orients_and_rejects_incomparable():
    b2 = boolean_lattice(2)
    down = chains_between(b2, b2.top, b2.bottom)
    up = chains_between(b2, b2.bottom, b2.top)
    assert [c.elements for c in down] == [c.elements for c in up]
    atoms = b2.atoms()
    with pytest.raises(NotComparable):
        chains_between(b2, atoms[0], atoms[1])


def test_chain_validation_and_refinement():
    b2 = boolean_lattice(2)
    atom = b2.atoms()[0]
    coarse = Chain(b2, (b2.top, b2.bottom))
    fine = Chain(b2, (b2.top, atom, b2.bottom))
    assert is_refinement(coarse, fine)
    assert not is_refinement(fine, coarse)
    assert not is_refinement(coarse, coarse)
    with pytest.raises(ValueError):
        Chain(b2, (b2.bottom, b2.top))  # ascending, not descending
    with pytest.raises(ValueError):
        Chain(b2, (b2.top, b2.top))
    other = Chain(b2, (b2.top, atom))
    assert not is_refinement(other, fine)  # endpoints differ


def test_chain_enumeration_cap(monkeypatch):
    lat = subspace_lattice(3, 2)
    monkeypatch.setenv("LATTICE_MAX_ELEMENTS", "8")
    assert chain_cap() == 8
    with pytest.raises(SizeBound):
        chains_between(lat, lat.top, lat.bottom)


def test_interval_of_fano_line_is_five_elements():
    fano = subspace_lattice(3, 2)
    line = next(e for e in range(fano.size) if fano.height(e) == 2)
    seg = fano.interval(fano.bottom, line)
    assert seg.size == 5
    assert seg.height(seg.top) == 2
    atoms = fano.atoms()
    with pytest.raises(NotComparable):
        fano.interval(atoms[0], atoms[1])


def test_upper_neighbors_counts():
    assert len(boolean_lattice(3).upper_neighbors()) == 12
    assert len(subspace_lattice(3, 2).upper_neighbors()) == 35
    assert len(chain(2).upper_neighbors()) == 1


def test_tables_are_int_and_leq_bool():
    b3 = boolean_lattice(3)
    assert b3.meet_table.dtype == np.int32
    assert b3.join_table.dtype == np.int32
    assert b3.leq.dtype == bool
