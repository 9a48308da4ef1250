"""Independent check of the internal product in the group algebra of S_n.

B_I is the sum of the permutations whose descent set is contained in
the partial-sum set of I.  Sym_n is anti-isomorphic to the descent
algebra through S^I -> B_I, so S^I * S^J corresponds to B_J B_I, where
permutations compose as functions, (s t)(i) = s(t(i)).  The product is
computed by brute force and expanded back in the B basis by Moebius
inversion over descent sets.  Nothing here uses the splitting formula.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from peakalg.combitypes import compositions

__all__ = ["descent_set", "oracle_internal_product", "oracle_agreement"]


def descent_set(I) -> int:
    """Partial sums of I (excluding n) as a bitmask, bit i-1 for position i."""
    mask, s = 0, 0
    for x in I[:-1]:
        s += x
        mask |= 1 << (s - 1)
    return mask


@lru_cache(maxsize=None)
def _group(n: int):
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mult = np.array([[index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms],
                    dtype=np.int64)
    des = np.array([sum(1 << i for i in range(n - 1) if p[i] > p[i + 1]) for p in perms],
                   dtype=np.int64)
    # one representative permutation for each descent set
    rep = {}
    for i, d in enumerate(des.tolist()):
        rep.setdefault(d, i)
    by_comp = {I: np.nonzero((des & ~descent_set(I)) == 0)[0] for I in compositions(n)}
    return mult, rep, by_comp


def oracle_internal_product(I: tuple, J: tuple) -> dict:
    """S^I * S^J in the S basis, computed in the group algebra."""
    n = sum(I)
    if sum(J) != n:
        raise ValueError("weights differ")
    if n == 0:
        return {(): 1}
    mult, rep, by_comp = _group(n)
    counts = np.bincount(mult[np.ix_(by_comp[J], by_comp[I])].ravel(), minlength=len(mult))
    # the product is constant on descent classes: value d_L on the class L
    d = {L: int(counts[i]) for L, i in rep.items()}
    out = {}
    for K in compositions(n):
        k = descent_set(K)
        c = 0
        for L, v in d.items():
            if L & k == k:
                c += (-1) ** bin(L ^ k).count("1") * v
        if c:
            out[K] = c
    return out


def oracle_agreement(n: int) -> tuple[int, int]:
    """(number of basis pairs, number of disagreements) against the splitting formula."""
    from peakalg.symcore import internal_product_basis

    comps = compositions(n)
    bad = 0
    for I in comps:
        for J in comps:
            fast = {k: v for k, v in internal_product_basis(I, J).items() if v}
            if fast != oracle_internal_product(I, J):
                bad += 1
    return len(comps) ** 2, bad
