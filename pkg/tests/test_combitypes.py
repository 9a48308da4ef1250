from hypothesis import given, strategies as st

from peakalg.combitypes import (Headed, b_compositions, b_partitions, b_refines, cartan_order,
                                compositions, coarsenings, cycle_transform, is_rpeak,
                                multiplicity_factor, order_index, parse_label, partitions,
                                refines, render_label, rpeak_compositions, rpeak_partitions,
                                standardize)


def test_counts():
    assert [len(compositions(n)) for n in range(1, 8)] == [2 ** (n - 1) for n in range(1, 8)]
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    # B-compositions of n: sum over heads of 2^(n-h-1), plus one for h = n
    assert [len(b_compositions(n)) for n in range(1, 7)] == [2 ** n for n in range(1, 7)]


def test_rpeak_counts():
    # r = 2: peak algebra dimension is the Fibonacci number F_{n+1}
    assert [len(rpeak_compositions(n, 2)) for n in range(1, 10)] == [1, 2, 3, 5, 8, 13, 21, 34, 55]
    for n in range(1, 8):
        for r in range(2, 6):
            assert all(is_rpeak(x, r) for x in rpeak_partitions(n, r))


def test_composition_order():
    assert compositions(3) == ((3,), (1, 2), (2, 1), (1, 1, 1))


def test_refines():
    assert refines((1, 1, 2), (2, 2))
    assert refines((1, 1, 1, 1), (4,))
    assert not refines((3, 1), (2, 2))


def test_b_refines():
    assert b_refines(Headed(0, (1, 1)), Headed(2, ()))
    assert b_refines(Headed(1, (1,)), Headed(2, ()))
    assert not b_refines(Headed(2, ()), Headed(0, (2,)))
    assert not b_refines(Headed(0, (2,)), Headed(1, (1,)))


def test_coarsenings_are_compositions():
    for I in compositions(5):
        for J in coarsenings(I):
            assert sum(J) == 5 and refines(I, J)


def test_order_index_examples():
    assert order_index(4, "A") == ((1, 1, 1, 1), (2, 1, 1), (3, 1), (2, 2), (4,))
    assert [render_label(x) for x in order_index(7, 2)][-4:] == ["6;1", "4;3", "2;5", "0;7"]
    assert cartan_order(4, "A") == tuple(reversed(order_index(4, "A")))


def test_order_extends_refinement():
    for n in range(1, 7):
        order = order_index(n, "A")
        for i, a in enumerate(order):
            for b in order[:i]:
                assert not (refines(a, b) and a != b)


@given(st.integers(1, 7), st.data())
def test_label_round_trip(n, data):
    lab = data.draw(st.sampled_from(b_compositions(n)))
    assert parse_label(render_label(lab)) == lab
    comp = data.draw(st.sampled_from(compositions(n)))
    signed = tuple(x if s else -x for x, s in
                   zip(comp, data.draw(st.lists(st.booleans(), min_size=len(comp),
                                                max_size=len(comp)))))
    assert parse_label(render_label(signed)) == signed


def test_standardize_and_cycles():
    assert standardize((3, 1, 3, 2)) == (3, 1, 4, 2)
    # cycles of (3,1,4,2): 1->3->4->2->1, one cycle with sum 9
    assert cycle_transform((3, 1, 3, 2), 2) == (9,)
    assert cycle_transform((3, 1, 3, 2), 3) == ()


def test_multiplicity_factor():
    assert multiplicity_factor((2, 1, 1, 1)) == 6
    assert multiplicity_factor(()) == 1


def test_b_partitions_count():
    # sum over head h of p(n - h)
    assert [len(b_partitions(n)) for n in range(1, 6)] == [2, 4, 7, 12, 19]
