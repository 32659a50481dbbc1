import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linmatch.errors import SizeMismatch, SpecMismatch, TooLarge
from linmatch.group_matching import (GroupMatching, GroupSpec, GroupSubset,
                                     exhaustive_matching_exists, find_matching, is_matching)


def subset(moduli, elems):
    return GroupSubset.of(GroupSpec(tuple(moduli)), elems)


def matching(pairs):
    return GroupMatching(tuple(((a,), (b,)) for a, b in pairs))


def test_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec((1,))
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(TooLarge):
        GroupSpec((100_000, 100_000))
    assert GroupSpec.parse("Z2xZ3").moduli == (2, 3)
    assert GroupSpec.parse("Z4").order == 4


def test_subsets_are_canonical():
    A = subset([5], [3, 1, 6])
    assert A.elements == ((1,), (3,))
    with pytest.raises(ValueError):
        subset([5], [])
    G = GroupSpec((2, 3))
    assert GroupSubset.parse(G, "1,2;0,4").elements == ((0, 1), (1, 2))


def test_is_matching_examples():
    assert is_matching(subset([5], [1]), subset([5], [2]), matching([(1, 2)]))
    assert not is_matching(subset([4], [0, 2]), subset([4], [1, 2]), matching([(0, 1), (2, 2)]))
    assert is_matching(subset([5], [0, 1]), subset([5], [2, 3]), matching([(0, 2), (1, 3)]))


def test_is_matching_rejects_non_bijections():
    A, B = subset([7], [0, 1]), subset([7], [2, 3])
    assert not is_matching(A, B, matching([(0, 2), (1, 2)]))
    assert not is_matching(A, B, matching([(0, 2)]))


def test_errors():
    with pytest.raises(SpecMismatch):
        is_matching(subset([5], [1]), subset([7], [2]), matching([(1, 2)]))
    with pytest.raises(SizeMismatch):
        find_matching(subset([5], [1, 2]), subset([5], [2]))
    with pytest.raises(TooLarge):
        exhaustive_matching_exists(subset([11], range(10)), subset([11], range(1, 11)))


def test_find_matching_examples():
    assert find_matching(subset([4], [0, 2]), subset([4], [1, 2])) is None
    A, B = subset([7], [0, 1, 3]), subset([7], [1, 2, 4])
    phi = find_matching(A, B)
    assert phi is not None and is_matching(A, B, phi)
    assert find_matching(subset([5], [1]), subset([5], [2])) == matching([(1, 2)])


def test_exhaustive_examples():
    assert not exhaustive_matching_exists(subset([4], [0, 2]), subset([4], [1, 2]))
    assert exhaustive_matching_exists(subset([5], [0, 1]), subset([5], [2, 3]))
    assert exhaustive_matching_exists(subset([5], [2]), subset([5], [2]))


def test_z4_subgroup_obstruction():
    A = subset([4], [0, 2])
    for b in ([1, 2], [2, 3]):
        assert find_matching(A, subset([4], b)) is None


def test_find_matching_is_deterministic():
    A, B = subset([3, 3], [(0, 0), (1, 2), (2, 1)]), subset([3, 3], [(0, 1), (1, 1), (2, 2)])
    assert find_matching(A, B) == find_matching(A, B)


@st.composite
def subset_pairs(draw):
    moduli = tuple(draw(st.lists(st.integers(2, 5), min_size=1, max_size=2)))
    G = GroupSpec(moduli)
    elems = list(G.elements())
    k = draw(st.integers(1, min(7, len(elems))))
    a = draw(st.lists(st.sampled_from(elems), min_size=k, max_size=k, unique=True))
    b = draw(st.lists(st.sampled_from(elems), min_size=k, max_size=k, unique=True))
    return GroupSubset.of(G, a), GroupSubset.of(G, b)


@given(subset_pairs())
def test_search_agrees_with_exhaustive_oracle(pair):
    A, B = pair
    phi = find_matching(A, B)
    assert (phi is not None) == exhaustive_matching_exists(A, B)
    if phi is not None:
        assert is_matching(A, B, phi)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_prime_cyclic_groups_always_match_when_zero_not_in_b(p):
    G = GroupSpec((p,))
    nonzero = range(1, p)
    for k in range(1, p):
        for a in itertools.combinations(range(p), k):
            for b in itertools.combinations(nonzero, k):
                A, B = GroupSubset.of(G, a), GroupSubset.of(G, b)
                phi = find_matching(A, B)
                assert phi is not None and is_matching(A, B, phi), (a, b)
