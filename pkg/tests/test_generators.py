import numpy as np
import pytest

from latlab import (
    SizeBound,
    SubspaceLatticeSpec,
    boolean_lattice,
    chain,
    diamond_m3,
    is_atomic,
    is_complemented,
    is_distributive,
    is_modular,
    is_perspective_lattice,
    pentagon_n5,
    subspace_lattice,
)

from oracles import (
    count_subsets,
    enumerate_subspaces,
    gaussian_binomial,
    subspace_dim,
)


def test_boolean_counts_match_subset_oracle():
    for n in range(1, 9):
        assert boolean_lattice(n).size == 2**n == count_subsets(n)


def test_boolean_one_is_two_element_chain():
    b1 = boolean_lattice(1)
    two = chain(2)
    assert b1.size == two.size == 2
    assert bool(b1.le(b1.bottom, b1.top)) and bool(two.le(two.bottom, two.top))


def test_boolean_bounds():
    with pytest.raises(ValueError):
        boolean_lattice(0)
    with pytest.raises(SizeBound):
        boolean_lattice(13)


def test_subspace_3_2_against_brute_enumeration():
    fano = subspace_lattice(3, 2)
    oracle = enumerate_subspaces(3, 2)
    assert fano.size == len(oracle) == 16
    profile = [sum(1 for s in oracle if subspace_dim(s, 2) == d) for d in range(4)]
    assert profile == [1, 7, 7, 1]
    assert [int((fano.heights == h).sum()) for h in range(4)] == [1, 7, 7, 1]
    # every 2-dim subspace contains exactly 3 of the 1-dim ones
    dims1 = [s for s in oracle if subspace_dim(s, 2) == 1]
    dims2 = [s for s in oracle if subspace_dim(s, 2) == 2]
    assert all(sum(1 for p in dims1 if p <= l) == 3 for l in dims2)


def test_subspace_2_3_against_brute_enumeration():
    lat = subspace_lattice(2, 3)
    oracle = enumerate_subspaces(2, 3)
    assert lat.size == len(oracle) == 6
    assert [int((lat.heights == h).sum()) for h in range(3)] == [1, 4, 1]


def test_subspace_counts_match_gaussian_binomials():
    for n, q in [(2, 2), (2, 5), (3, 2), (3, 3), (4, 2)]:
        expected = sum(gaussian_binomial(n, k, q) for k in range(n + 1))
        assert subspace_lattice(n, q).size == expected


def test_subspace_one_dimensional_is_chain():
    for q in (2, 3, 7):
        lat = subspace_lattice(1, q)
        assert lat.size == 2
        assert lat.height(lat.top) == 1


def test_subspace_dimension_formula_is_height_law():
    for n, q in [(3, 2), (2, 5), (4, 2)]:
        lat = subspace_lattice(n, q)
        h = lat.heights.astype(int)
        lhs = h[:, None] + h[None, :]
        rhs = h[lat.meet_table] + h[lat.join_table]
        assert np.array_equal(lhs, rhs)


def test_subspace_law_profile():
    for n, q in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        lat = subspace_lattice(n, q)
        assert is_modular(lat).holds, lat.name
        assert is_atomic(lat).holds, lat.name
        assert is_complemented(lat).holds, lat.name
        assert is_perspective_lattice(lat).holds, lat.name
        assert not is_distributive(lat).holds, lat.name


def test_boolean_law_profile():
    for n in (2, 3, 4):
        lat = boolean_lattice(n)
        assert is_distributive(lat).holds
        assert not is_perspective_lattice(lat).holds


def test_subspace_parameter_validation():
    with pytest.raises(ValueError):
        subspace_lattice(0, 2)
    with pytest.raises(ValueError):
        subspace_lattice(2, 4)  # not prime
    with pytest.raises(ValueError):
        subspace_lattice(2, 1)
    with pytest.raises(SizeBound):
        subspace_lattice(9, 7)  # 7^9 vectors is over the cap
    spec = SubspaceLatticeSpec(3, 2)
    assert spec.dimension == 3 and spec.field_order == 2


def test_small_counterexample_shapes():
    m3 = diamond_m3()
    assert m3.size == 5 and len(m3.atoms()) == 3
    assert is_modular(m3).holds and not is_distributive(m3).holds
    n5 = pentagon_n5()
    assert n5.size == 5
    assert not is_modular(n5).holds
    assert sorted(n5.labels) == ["0", "1", "a", "b", "c"]


def test_chain_generator():
    for k in (2, 3, 6):
        c = chain(k)
        assert c.size == k
        assert c.height(c.top) == k - 1
        assert all(c.le(i, j) == (i <= j) for i in range(k) for j in range(k))
    with pytest.raises(ValueError):
        chain(1)


def test_subspace_label_determinism():
    a = subspace_lattice(3, 2)
    b = subspace_lattice(3, 2)
    assert a.labels == b.labels
    assert np.array_equal(a.meet_table, b.meet_table)
