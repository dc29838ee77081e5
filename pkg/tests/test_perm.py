from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

import oracles
from expected import TEN_PERM
from intervalia.errors import IndexMismatch, NotAPermutation, NotSorted
from intervalia.intervals import PERMUTATION, IntervalFamily, distinct_lengths
from intervalia.perm import (SortedColoring, containments, enumerate_sorted_colorings,
                             initial_representation, is_sorted_coloring,
                             mirsky_sorted_coloring, nesting_pairs, parse_permutation,
                             perm_depth, require_sorted, verify_perm_representation)

perms = st.integers(min_value=0, max_value=9).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


def all_perms(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from permutations(range(1, n + 1))


def test_parse():
    assert parse_permutation("[4,2,5,10,3,1,7,6,9,8]") == TEN_PERM
    for bad in ("[1,1]", "[0,1]", "[1,x]", "1,3"):
        with pytest.raises(NotAPermutation):
            parse_permutation(bad)


def test_depth_examples():
    assert perm_depth(TEN_PERM) == 3
    assert perm_depth(tuple(range(1, 8))) == 1
    assert perm_depth((3, 2, 1)) == 3


@given(perms)
def test_depth_matches_bruteforce(perm):
    assert perm_depth(perm) == oracles.lds(perm)


def test_depth_is_nesting_height():
    for perm in all_perms(7):
        assert perm_depth(perm) == oracles.nesting_height(perm)


def test_nesting_pairs():
    assert nesting_pairs((2, 1)) == {(1, 2)}
    assert nesting_pairs((1, 2, 3)) == set()
    # covering relations of the inclusion order drawn for the 10-element example
    pairs = nesting_pairs(TEN_PERM)
    for inner, outer in [(1, 2), (1, 3), (3, 5), (3, 10), (3, 4), (2, 4), (6, 7), (7, 10),
                         (8, 9), (9, 10)]:
        assert (inner, outer) in pairs


def test_mirsky_examples():
    assert mirsky_sorted_coloring((2, 1)).classes == (frozenset({1}), frozenset({2}))
    assert mirsky_sorted_coloring((1, 2, 3)).classes == (frozenset({1, 2, 3}),)
    c = mirsky_sorted_coloring(TEN_PERM)
    assert c.k == 3
    assert {1, 6} <= c.classes[0] and {2, 9} <= c.classes[1] and {5, 10} <= c.classes[2]


def test_mirsky_is_sorted_exhaustive():
    for perm in all_perms(7):
        c = mirsky_sorted_coloring(perm)
        assert c.k == perm_depth(perm) and is_sorted_coloring(perm, c)


def test_enumerate_examples():
    assert [c.classes for c in enumerate_sorted_colorings((2, 1), 2)] == \
        [(frozenset({1}), frozenset({2}))]
    assert len(list(enumerate_sorted_colorings((1, 2), 2))) == 2
    assert list(enumerate_sorted_colorings((3, 2, 1), 2)) == []


def test_enumerate_matches_bruteforce():
    for perm in all_perms(6):
        for k in (1, 2, 3):
            got = [c.colors(len(perm)) for c in enumerate_sorted_colorings(perm, k)]
            assert got == oracles.sorted_colorings_bruteforce(perm, k)
            assert all(is_sorted_coloring(perm, SortedColoring.from_colors(c, k)) for c in got)


def test_require_sorted():
    with pytest.raises(NotSorted):
        require_sorted((2, 1), SortedColoring(({2}, {1})))


def test_initial_representation():
    rep = initial_representation((2, 1))
    assert rep.intervals == ((-1, 1), (-2, 2))
    assert distinct_lengths(rep) == [2, 4]
    rep = initial_representation((1, 2, 3))
    assert rep.intervals == tuple((j - 4, j) for j in (1, 2, 3))
    rep = initial_representation((1, 3, 4, 5, 2))
    lefts = sorted(range(1, 6), key=lambda v: rep.left(v - 1))
    assert lefts == [1, 3, 4, 5, 2]


def test_initial_representation_verifies():
    for perm in all_perms(8):
        assert verify_perm_representation(perm, initial_representation(perm)) is None


def test_verify_violations():
    bad = verify_perm_representation((2, 1), IntervalFamily(((-2, 1), (-1, 2)), PERMUTATION))
    assert bad is not None and bad.kind == "left"
    bad = verify_perm_representation((1, 2), IntervalFamily(((0, 3), (1, 2)), PERMUTATION))
    assert (bad.kind, bad.first, bad.second) == ("right", 1, 2)
    bad = verify_perm_representation((1, 2), IntervalFamily(((0, 2), (3, 4)), PERMUTATION))
    assert bad.kind == "middle"
    with pytest.raises(IndexMismatch):
        verify_perm_representation((1, 2), IntervalFamily(((0, 1),), PERMUTATION))


def test_five_element_layout():
    # pi = [5,2,3,1,4]: left endpoints in that order, right endpoints 1..5
    perm = (5, 2, 3, 1, 4)
    ivs = {5: (0, 10), 2: (1, 7), 3: (2, 8), 1: (3, 6), 4: (4, 9)}
    fam = IntervalFamily(tuple(ivs[v] for v in range(1, 6)), PERMUTATION)
    assert verify_perm_representation(perm, fam) is None


def test_containments_equal_nesting_pairs():
    for perm in all_perms(7):
        rep = initial_representation(perm)
        assert containments(rep) == nesting_pairs(perm)


@given(perms, st.lists(st.fractions(min_value=Fraction(1, 10), max_value=3), min_size=9,
                       max_size=9))
def test_containments_on_distorted_representations(perm, gaps):
    # any family with the endpoint pattern has exactly the forced nestings
    n = len(perm)
    points, acc = [], Fraction(0)
    for g in gaps[:n] + gaps[:n]:
        acc += g
        points.append(acc)
    ivs = [None] * n
    for i, v in enumerate(perm):
        ivs[v - 1] = [points[i], None]
    for j in range(n):
        ivs[j][1] = points[n + j]
    fam = IntervalFamily(tuple(map(tuple, ivs)), PERMUTATION)
    assert verify_perm_representation(perm, fam) is None
    assert containments(fam) == nesting_pairs(perm)
