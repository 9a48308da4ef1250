from math import gcd

from gmpy2 import mpq
from hypothesis import given, strategies as st

from peakalg.exactmath import (Cyclo, cyclo_gen, cyclotomic_polynomial, format_coeff,
                               modular_rank, nullspace, parse_coeff, primitive_root_mod, rank,
                               rref, span_membership, to_modp)

rats = st.builds(mpq, st.integers(-20, 20), st.integers(1, 9))


@st.composite
def cyclo(draw, r=None):
    r = r or draw(st.sampled_from([3, 4, 5, 6, 7, 8, 9, 10, 12]))
    phi = len(cyclotomic_polynomial(r)) - 1
    return Cyclo(r, [draw(rats) for _ in range(phi)])


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(12)) - 1 == 4


def test_root_of_unity_order():
    for r in range(3, 13):
        w = cyclo_gen(r)
        assert w ** r == 1
        assert all(w ** k != 1 for k in range(1, r))


def test_small_orders_are_rational():
    assert cyclo_gen(2) == -1
    assert cyclo_gen(1) == 1


@given(st.data())
def test_field_axioms(data):
    r = data.draw(st.sampled_from([3, 4, 5, 7, 8, 12]))
    a, b, c = (data.draw(cyclo(r)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


def _galois(x, j):
    return x.galois(j) if isinstance(x, Cyclo) else x


@given(st.data())
def test_galois_is_ring_map(data):
    r = data.draw(st.sampled_from([5, 7, 8, 12]))
    a, b = data.draw(cyclo(r)), data.draw(cyclo(r))
    j = data.draw(st.sampled_from([k for k in range(1, r) if gcd(k, r) == 1]))
    assert _galois(a * b, j) == _galois(a, j) * _galois(b, j)
    assert _galois(a + b, j) == _galois(a, j) + _galois(b, j)


@given(st.lists(st.lists(rats, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rref_idempotent_and_nullspace(rows):
    red, piv = rref(rows)
    assert rref(red) == (red, piv)
    for v in nullspace(rows):
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in rows)
    assert rank(rows) + len(nullspace(rows)) == 4


@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=1, max_size=5))
def test_modular_rank_bounds_rational_rank(rows):
    assert modular_rank(rows, 1000003) <= rank([[mpq(x) for x in r] for r in rows])


def test_span_membership():
    rows = [[mpq(1), mpq(0), mpq(1)], [mpq(0), mpq(1), mpq(1)]]
    assert span_membership([mpq(2), mpq(3), mpq(5)], rows) == [2, 3]
    assert span_membership([mpq(0), mpq(0), mpq(1)], rows) is None


def test_modp_embedding_respects_products():
    p = 1000003 if (1000003 - 1) % 3 == 0 else 1000033
    root = primitive_root_mod(3, p)
    w = cyclo_gen(3)
    x, y = w + mpq(1, 2), w * w - 3
    assert to_modp(x * y, p, root) == to_modp(x, p, root) * to_modp(y, p, root) % p


@given(cyclo())
def test_coefficient_text_round_trip(a):
    r = a.order if hasattr(a, "order") else None
    assert parse_coeff(format_coeff(a), r) == a


def test_coefficient_format():
    assert format_coeff(mpq(-1, 8)) == "-1/8"
    assert format_coeff(mpq(3)) == "3"
