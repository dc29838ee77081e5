import pytest

import oracles
from expected import ASCENT_COUNTS, ELEVEN_ASCENT
from intervalia.ascent import (ascent_of_order, count_ascent_sequences,
                               enumerate_ascent_sequences, order_from_ascent,
                               parse_ascent_sequence)
from intervalia.errors import (AscentBoundViolated, FirstEntryNonzero, NotAnInteger,
                               NotAnIntervalOrder)
from intervalia.order import IntervalOrder, Poset, antichain, chain


def test_parse_examples():
    assert len(parse_ascent_sequence(ELEVEN_ASCENT)) == 11
    assert parse_ascent_sequence("0") == (0,)
    assert str(parse_ascent_sequence(" (0, 1, 0) ")) == "0,1,0"


@pytest.mark.parametrize("text, error, index", [
    ("0,2", AscentBoundViolated, 1),
    ("0,1,3", AscentBoundViolated, 2),
    ("1,0", FirstEntryNonzero, 0),
    ("0,x", NotAnInteger, 1),
    ("0,-1", AscentBoundViolated, 1),
])
def test_parse_errors(text, error, index):
    with pytest.raises(error) as info:
        parse_ascent_sequence(text)
    assert info.value.details["index"] == index


def test_small_orders():
    assert order_from_ascent((0,)) == antichain(1)
    assert order_from_ascent((0, 0)) == antichain(2)
    assert order_from_ascent((0, 1)) == chain(2)


def test_round_trip_exhaustive():
    for n in range(1, 8):
        for seq in enumerate_ascent_sequences(n):
            assert ascent_of_order(order_from_ascent(seq)) == seq


def test_ascent_of_order_is_label_invariant():
    # relabelling an order must not change its ascent sequence
    order = order_from_ascent(parse_ascent_sequence(ELEVEN_ASCENT))
    perm = list(range(order.n))[::-1]
    pairs = [(perm.index(x), perm.index(y)) for x, y in order.pairs()]
    shuffled = IntervalOrder.from_relation(order.n, pairs)
    assert str(ascent_of_order(shuffled)) == ELEVEN_ASCENT


def test_ascent_of_order_rejects_two_plus_two():
    assert str(ascent_of_order(antichain(1))) == "0"
    with pytest.raises(NotAnIntervalOrder):
        ascent_of_order(Poset.from_relation(4, [(0, 1), (2, 3)]))


def test_bijection_hits_every_interval_order_once():
    for n in range(1, 7):
        orders = [order_from_ascent(s) for s in enumerate_ascent_sequences(n)]
        keys = {str(ascent_of_order(o)) for o in orders}
        assert len(keys) == len(orders)


def test_counts_against_definition():
    for n in range(1, 7):
        assert count_ascent_sequences(n) == oracles.count_ascent_sequences_bruteforce(n)


def test_enumeration_counts():
    for n, expected in enumerate(ASCENT_COUNTS, start=1):
        assert sum(1 for _ in enumerate_ascent_sequences(n)) == expected
        assert count_ascent_sequences(n) == expected


def test_enumeration_is_lexicographic():
    seqs = [tuple(s) for s in enumerate_ascent_sequences(5)]
    assert seqs == sorted(seqs)
    assert [str(s) for s in enumerate_ascent_sequences(2)] == ["0,0", "0,1"]
