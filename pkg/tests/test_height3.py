from fractions import Fraction

import pytest

from conftest import orders_up_to
from expected import ELEVEN_HEIGHT, TWELVE_MIDDLE_PERM
from intervalia.errors import DepthExceeded, HeightExceeded
from intervalia.height3 import break_ties, middle_part, two_count_height3
from intervalia.intervals import ORDER, IntervalFamily, distinct_lengths
from intervalia.kcount import is_k_count_order
from intervalia.order import (antichain, canonical_representation, chain, collapse_twins,
                              depth_order, height, verify_order_representation)
from intervalia.perm import perm_depth


def staged_of(order):
    reduced, _ = collapse_twins(order)
    return reduced, break_ties(canonical_representation(reduced))


def test_twelve_middle_part(twelve):
    _, staged = staged_of(twelve)
    mid = middle_part(staged)
    assert mid.perm == TWELVE_MIDDLE_PERM
    assert all(staged.family.left(x) < staged.ell0 < staged.family.right(x) for x in mid.elements)


def test_twelve_two_count(twelve):
    fam, stages = two_count_height3(twelve, return_stages=True)
    assert verify_order_representation(twelve, fam) is None
    assert fam.is_integral() and len(distinct_lengths(fam)) <= 2
    assert stages["middle"].perm == TWELVE_MIDDLE_PERM


def test_three_chain():
    fam, stages = two_count_height3(chain(3), return_stages=True)
    assert verify_order_representation(chain(3), fam) is None
    assert len(stages["middle"].perm) >= 1
    assert perm_depth(stages["middle"].perm) == 1


def test_trivial_orders():
    for order in (antichain(1), antichain(4), chain(1), chain(2)):
        fam = two_count_height3(order)
        assert verify_order_representation(order, fam) is None


def test_eleven_is_too_tall(eleven):
    # the 11-element example has a 4-chain, so this construction does not apply
    assert height(eleven) == ELEVEN_HEIGHT == 4
    with pytest.raises(HeightExceeded) as info:
        two_count_height3(eleven)
    assert info.value.details["height"] == 4
    assert not is_k_count_order(eleven, 2)


def test_height_four_rejected():
    with pytest.raises(HeightExceeded):
        two_count_height3(chain(4))


def test_break_ties_on_tie_free_input():
    reduced, staged = staged_of(chain(2))
    assert staged.family.intervals == canonical_representation(reduced).intervals
    assert staged.middle == set()
    # all non-extremal intervals meet in one line: endpoints on it move by h/2 only
    reduced, staged = staged_of(chain(3))
    assert staged.ell0 == 1 and staged.middle == {1}
    canon = canonical_representation(reduced).intervals
    for (l, r), (cl, cr) in zip(staged.family.intervals, canon):
        assert abs(l - cl) < Fraction(1, 8) and abs(r - cr) < Fraction(1, 8)


def test_stage_invariants():
    for _, order in orders_up_to(7):
        reduced, _ = collapse_twins(order)
        if height(reduced) > 3 or depth_order(reduced) > 2:
            continue
        _, staged = staged_of(order)
        fam = staged.family
        assert verify_order_representation(reduced, fam) is None
        n = len(fam)
        assert staged.middle | staged.extremal_left | staged.extremal_right == set(range(n))
        assert len(staged.middle) + len(staged.extremal_left) + len(staged.extremal_right) == n
        lefts = [fam.left(x) for x in range(n)]
        rights = [fam.right(x) for x in range(n)]
        assert len(set(lefts)) == n and len(set(rights)) == n
        assert staged.ell0 not in set(lefts) | set(rights) or not staged.middle

        result, stages = two_count_height3(order, return_stages=True)
        alpha = stages["alpha"]
        middle = set(stages["middle"].elements)
        # leftover extremal intervals get length alpha and take part in no nesting
        _, classes = collapse_twins(order)
        merged = IntervalFamily(tuple(result[c[0]] for c in classes), ORDER)
        for x in set(range(n)) - middle:
            assert merged.length(x) == alpha
            for y in middle:
                assert not contains(merged, x, y) and not contains(merged, y, x)


def contains(fam, x, y):
    (lx, rx), (ly, ry) = fam[x], fam[y]
    return lx <= ly and ry <= rx


def test_twins_share_intervals():
    for _, order in orders_up_to(6):
        reduced, classes = collapse_twins(order)
        if height(reduced) > 3 or depth_order(reduced) > 2:
            continue
        fam = two_count_height3(order)
        for cls in classes:
            assert len({fam[x] for x in cls}) == 1


def test_exhaustive_up_to_8():
    count = 0
    for _, order in orders_up_to(8):
        if height(order) > 3 or depth_order(order) > 2:
            with pytest.raises((HeightExceeded, DepthExceeded)):
                two_count_height3(order)
            continue
        fam = two_count_height3(order)
        assert verify_order_representation(order, fam) is None
        assert fam.is_integral() and len(distinct_lengths(fam)) <= 2
        count += 1
    assert count > 0
