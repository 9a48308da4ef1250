import pytest
from hypothesis import given, strategies as st

from peakalg.combitypes import Headed, refines
from peakalg.reptheory import (CartanMatrix, TPoly, conjecture_cartan, loewy, loewy_length,
                               peak_model, q_cartan, quiver, radical, sym_model,
                               typeA_cartan_claim)


def test_tpoly_render_parse():
    p = TPoly({3: 1, 2: 2, 0: 1})
    assert p.render("q") == "q^{3}+2q^{2}+1"
    assert TPoly.parse(p.render("q"), "q") == p
    assert TPoly.parse(".") == TPoly()
    assert p.at_one() == 4 and p.degree() == 3 and not p.is_homogeneous()


def test_radical_dimension_type_A():
    # Sym_n modulo its radical is the algebra of class functions on partitions
    for n in range(1, 6):
        model = sym_model(n)
        from peakalg.combitypes import compositions, partitions
        assert len(radical(model)) == len(compositions(n)) - len(partitions(n))


def test_loewy_layers_cover_radical():
    model = sym_model(5)
    layers = loewy(model)
    assert sum(len(x) for x in layers) >= len(radical(model))
    assert loewy_length(model) >= 1


def test_sym3_cartan():
    C = q_cartan(sym_model(3))
    assert C[((1, 1, 1), (1, 1, 1))] == 1
    assert C[((2, 1), (3,))] == 0
    assert sum(p.at_one() for p in C.entries.values()) == 4


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_typeA_cartan_support_and_degree(n):
    C = q_cartan(sym_model(n))
    for (lam, mu), p in C.entries.items():
        if p:
            assert refines(mu, lam)
            assert p.is_homogeneous() and p.degree() == len(mu) - len(lam)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_typeA_cartan_literal_claim_differs(n):
    # the refinement-indicator matrix has strictly more nonzero entries
    C = q_cartan(sym_model(n))
    claim = typeA_cartan_claim(n)
    nz = sum(bool(p) for p in C.entries.values())
    assert nz < sum(bool(p) for p in claim.entries.values())


def test_sym2_is_semisimple():
    C = q_cartan(sym_model(2))
    assert all(p == (1 if a == b else 0) for (a, b), p in C.entries.items())


def test_value_two_appears_at_six():
    C = q_cartan(sym_model(6))
    assert max(p.at_one() for p in C.entries.values()) == 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_typeA_quiver_adds_two_distinct_parts(n):
    C = q_cartan(sym_model(n))
    for (lam, mu) in quiver(C):
        merged = False
        for i in range(len(lam)):
            for j in range(i + 1, len(lam)):
                if lam[i] != lam[j]:
                    rest = lam[:i] + lam[i + 1:j] + lam[j + 1:] + (lam[i] + lam[j],)
                    merged |= tuple(sorted(rest, reverse=True)) == mu
        assert merged


def test_peak_quiver_example():
    C = q_cartan(peak_model(6, 2))
    arrows = set(quiver(C))
    src = Headed(0, (3, 1, 1, 1))
    assert (src, Headed(0, (5, 1))) in arrows
    assert (src, Headed(4, (1, 1))) in arrows
    assert (src, Headed(0, (3, 3))) not in arrows


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_conjecture_r2_graded(n):
    assert conjecture_cartan(n, 2, graded=True) == q_cartan(peak_model(n, 2))


@pytest.mark.parametrize("n,r", [(4, 3), (5, 3), (5, 4), (6, 5)])
def test_conjecture_other_levels_at_one(n, r):
    assert conjecture_cartan(n, r).at_one() == q_cartan(peak_model(n, r)).at_one()


def test_transpose_and_restrict():
    C = q_cartan(peak_model(5, 2))
    assert C.transpose().transpose() == C
    sub = C.restrict(C.labels[:2])
    assert sub.labels == C.labels[:2]
    assert isinstance(sub, CartanMatrix)


@given(st.integers(1, 6), st.integers(2, 5))
def test_cartan_total_is_dimension(n, r):
    # the quotient by the radical is commutative, so simples are one dimensional
    model = peak_model(n, r)
    C = q_cartan(model)
    assert sum(sum(row) for row in C.at_one()) == model.dim
    assert all(C[(a, a)] == 1 for a in C.labels)
