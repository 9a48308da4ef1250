"""The splitting formula against brute force in the group algebra."""

import numpy as np
import pytest

from descent_oracle import _group, descent_set, oracle_agreement, oracle_internal_product
from peakalg.combitypes import compositions
from peakalg.symcore import internal_product_basis


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_agreement_small(n):
    pairs, bad = oracle_agreement(n)
    assert pairs == 4 ** (n - 1) and bad == 0


def test_sanity_values():
    assert oracle_internal_product((1, 1), (1, 1)) == {(1, 1): 2}
    assert oracle_internal_product((2,), (1, 1)) == {(1, 1): 1}


def test_other_orientation_disagrees():
    # composing as B_I B_J instead of B_J B_I must be caught
    n = 4
    mult, rep, by_comp = _group(n)
    bad = 0
    for I in compositions(n):
        for J in compositions(n):
            counts = np.bincount(mult[np.ix_(by_comp[I], by_comp[J])].ravel(),
                                 minlength=len(mult))
            d = {L: int(counts[i]) for L, i in rep.items()}
            wrong = {}
            for K in compositions(n):
                k = descent_set(K)
                c = sum((-1) ** bin(L ^ k).count("1") * v for L, v in d.items() if L & k == k)
                if c:
                    wrong[K] = c
            fast = {k: v for k, v in internal_product_basis(I, J).items() if v}
            bad += fast != wrong
    assert bad > 0
