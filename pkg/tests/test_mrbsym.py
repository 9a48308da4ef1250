import pytest
from gmpy2 import mpq

from peakalg.combitypes import Headed, b_compositions, b_partitions, order_index
from peakalg.mrbsym import (ano_idempotents, bsym_basis, bsym_idempotents, bsym_model,
                            bsym_product, bsym_space, epsilon_bridge, internal_product_mr,
                            project_to_sym, sharp_letter, solve_bsym_zetas, superize)
from peakalg.symcore import S, internal_product, zero


def test_sharp_letter_low_degrees():
    assert sharp_letter(1) == S(1) + S(-1)
    # S#_1 * S#_1 = 2 S#_1, so no idempotent family can sum to S#_n
    assert internal_product(sharp_letter(1), sharp_letter(1)) == sharp_letter(1).scale(2)


def test_superize_is_product_with_sharp():
    f = S(2, 1)
    assert superize(f) == internal_product(f, sharp_letter(3))


def test_bsym_space_dimension():
    for n in range(1, 5):
        assert bsym_space(n).dim == len(b_compositions(n)) == 2 ** n


def test_bsym_coordinates_round_trip():
    space = bsym_space(3)
    f = bsym_basis(Headed(1, (2,))) - bsym_basis(Headed(0, (1, 1, 1))).scale(mpq(1, 2))
    assert space.to_elem(space.coordinates(f)) == f
    assert space.contains(S(-3))
    assert not space.contains(S(1, -2))


@pytest.mark.parametrize("n", [2, 3])
def test_bsym_product_matches_mr_product(n):
    space = bsym_space(n)
    for I in space.labels:
        for J in space.labels:
            direct = space.coordinates(internal_product_mr(bsym_basis(I), bsym_basis(J)))
            assert bsym_product(I, J) == direct


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bsym_idempotents(n):
    E = bsym_idempotents(n, "both")
    assert list(E) == list(order_index(n, "B"))
    total = zero()
    for a, x in E.items():
        total = total + x
        for b, y in E.items():
            assert internal_product(x, y) == (x if a == b else zero())
    assert total == S(n)


def test_bsym_zeta_one():
    zetas, tildes = solve_bsym_zetas(2)
    assert zetas[1] == sharp_letter(1).scale(mpq(1, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bridge(n):
    res = epsilon_bridge(n)
    assert res["projection_dim"] == res["peak_dim"] == res["corner_dim"]
    assert res["projection_equals_peak"]


def test_alternative_families():
    n = 4
    fam = ano_idempotents(n)
    total = zero()
    for lam, e in fam["E_sharp"].items():
        total = total + e
        assert internal_product(e, e) == e.scale(2 ** len(lam))
    assert total == sharp_letter(n)
    for lam, e in fam["E"].items():
        assert internal_product(e, e) == e
    assert all(internal_product(fam["eta"][k], fam["eta"][k]) == fam["eta"][k]
               for k in range(1, n + 1))


def test_bsym_model_labels():
    model = bsym_model(3)
    assert set(model.idempotents) == set(b_partitions(3))
    assert project_to_sym(S(-2, 1)) == S(2, 1)
