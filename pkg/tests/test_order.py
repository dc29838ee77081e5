import pytest

import oracles
from conftest import orders_up_to
from expected import (ELEVEN_CANONICAL, ELEVEN_DEPTH, ELEVEN_HEIGHT, ELEVEN_MAGNITUDE, ELEVEN_PP_ARCS,
                      ELEVEN_PP_ISOLATED, ELEVEN_SPRING_SET, TWELVE_HEIGHT, TWELVE_MAGNITUDE,
                      TWELVE_MULTISET)
from intervalia.ascent import order_from_ascent, parse_ascent_sequence
from intervalia.errors import IndexMismatch, NotAnIntervalOrder, NotAPoset
from intervalia.intervals import IntervalFamily
from intervalia.order import (IntervalOrder, Poset, antichain, canonical_representation, chain,
                              collapse_twins, depth_order, expand_twins, find_chain_plus_one,
                              find_springs, height, magnitude, pp_graph,
                              verify_order_representation)

THREE_PLUS_ONE = IntervalOrder.from_relation(4, [(0, 1), (1, 2)])


def test_poset_rejects_cycles_and_non_transitive():
    with pytest.raises(NotAPoset):
        Poset.from_relation(2, [(0, 1), (1, 0)])
    with pytest.raises(NotAPoset):
        Poset(3, [0, 1, 2])  # 0<1<2 without 0<2


def test_two_plus_two_rejected():
    with pytest.raises(NotAnIntervalOrder) as info:
        IntervalOrder.from_relation(4, [(0, 1), (2, 3)])
    assert sorted(info.value.details["witness"]) == [1, 2, 3, 4]


def test_json_round_trip(eleven):
    again = IntervalOrder.from_json(eleven.to_json())
    assert again == eleven


def test_eleven_canonical_per_label(eleven):
    canon = canonical_representation(eleven)
    assert canon.magnitude == ELEVEN_MAGNITUDE
    assert {x + 1: iv for x, iv in enumerate(canon.intervals)} == ELEVEN_CANONICAL


def test_twelve_canonical_multiset(twelve):
    canon = canonical_representation(twelve)
    assert canon.magnitude == TWELVE_MAGNITUDE
    assert canon.multiset() == TWELVE_MULTISET
    assert verify_order_representation(twelve, canon.family()) is None


def test_singleton_canonical():
    canon = canonical_representation(antichain(1))
    assert (canon.magnitude, canon.intervals) == (1, ((0, 0),))


def test_canonical_invariants_exhaustive():
    for _, order in orders_up_to(7):
        canon = canonical_representation(order)
        m = canon.magnitude
        lefts = {l for l, _ in canon.intervals}
        rights = {r for _, r in canon.intervals}
        assert lefts == rights == set(range(m))
        assert (0, 0) in canon.intervals and (m - 1, m - 1) in canon.intervals
        assert verify_order_representation(order, canon.family()) is None


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_chain_magnitude_matches_bruteforce(k):
    order = chain(k)
    assert magnitude(order) == k == oracles.brute_magnitude(k, oracles.relation(order))


def test_magnitude_bruteforce_small_orders():
    for _, order in orders_up_to(4):
        assert magnitude(order) == oracles.brute_magnitude(order.n, oracles.relation(order))


def test_heights(eleven, twelve):
    assert height(twelve) == TWELVE_HEIGHT
    assert height(eleven) == ELEVEN_HEIGHT
    assert height(antichain(5)) == 1
    assert height(chain(4)) == 4


def test_height_matches_bruteforce():
    for _, order in orders_up_to(6):
        assert height(order) == oracles.longest_chain_length(order.n, oracles.relation(order))


def test_chain_plus_one(eleven):
    assert find_chain_plus_one(eleven, 4) is None
    chain3, x = find_chain_plus_one(eleven, 3)
    assert all(eleven.less(a, b) for a, b in zip(chain3, chain3[1:]))
    assert all(not eleven.comparable(x, c) for c in chain3)
    assert find_chain_plus_one(chain(3), 3) is None


def test_chain_plus_one_matches_bruteforce():
    for _, order in orders_up_to(6):
        rel = oracles.relation(order)
        for r in (2, 3, 4):
            assert (find_chain_plus_one(order, r) is not None) == \
                oracles.chain_plus_one(order.n, rel, r)


def test_eleven_pp_graph(eleven):
    graph = pp_graph(eleven)
    assert {(y + 1, x + 1) for y, x in graph.arcs} == ELEVEN_PP_ARCS
    assert {v + 1 for v in graph.isolated()} == ELEVEN_PP_ISOLATED
    for (y, x), w in graph.witness.items():
        assert eleven.less(w.below, y) and eleven.less(y, w.above)
        assert not any(eleven.comparable(x, z) for z in (w.below, y, w.above))


def test_pp_graph_small_cases():
    assert not pp_graph(chain(5)).arcs
    assert pp_graph(THREE_PLUS_ONE).arcs == {(1, 3)}


def test_pp_graph_matches_bruteforce():
    for _, order in orders_up_to(6):
        assert set(pp_graph(order).arcs) == oracles.pp_arcs(order.n, oracles.relation(order))


def test_pp_graph_of_dual():
    for _, order in orders_up_to(6):
        dual = order.dual()
        assert set(pp_graph(dual).arcs) == oracles.pp_arcs(dual.n, oracles.relation(dual))
        # a 3+1 copy stays a 3+1 copy with the same pith and peel
        assert pp_graph(dual).arcs == pp_graph(order).arcs


def test_depth(eleven):
    assert depth_order(eleven) == ELEVEN_DEPTH
    assert depth_order(chain(6)) == 1
    assert depth_order(THREE_PLUS_ONE) == 2


def test_semiorders_have_depth_one():
    for _, order in orders_up_to(6):
        if not oracles.chain_plus_one(order.n, oracles.relation(order), 3):
            assert depth_order(order) == 1


def test_eleven_spring(eleven):
    springs = find_springs(eleven)
    assert springs
    assert any({e + 1 for e in w.roles} == ELEVEN_SPRING_SET for w in springs)


def test_springs_need_height_four():
    for _, order in orders_up_to(7):
        if height(order) <= 3:
            assert find_springs(order) == []
    assert find_springs(antichain(6)) == []


def test_springs_closed_under_dual():
    for _, order in orders_up_to(7, n_min=6):
        assert len(find_springs(order)) == len(find_springs(order.dual()))


def test_collapse_twins():
    reduced, classes = collapse_twins(antichain(2))
    assert reduced.n == 1 and classes == ((0, 1),)
    order = order_from_ascent(parse_ascent_sequence("0,0,1"))
    reduced, classes = collapse_twins(order)
    assert reduced.n == 2 and (0, 1) in classes
    reduced, classes = collapse_twins(chain(3))
    assert reduced == chain(3)


def test_twins_match_bruteforce_and_expand():
    for _, order in orders_up_to(6):
        reduced, classes = collapse_twins(order)
        assert sorted(classes) == oracles.twin_classes(order.n, oracles.relation(order))
        canon = canonical_representation(reduced)
        fam = expand_twins(canon.family(), classes, order.n)
        assert verify_order_representation(order, fam) is None


def test_verify_representation():
    bad = verify_order_representation(chain(2), IntervalFamily(((0, 2), (1, 3))))
    assert bad is not None and (bad.x, bad.y) == (0, 1)
    with pytest.raises(IndexMismatch):
        verify_order_representation(chain(2), IntervalFamily(((0, 1),)))
