"""Internal products computed in a basis of zeta-words.

Let z_1, z_2, ... be the Zassenhaus generators (type A) or the level-r
generators.  Words z^W = z_{w1} z_{w2} ... form a basis of Sym, and in
that basis the splitting formula becomes cheap: every letter z_k is
primitive, except at level r the letters with r | k, whose coproduct is
sum_b z_{br} (x) z_{k-br}.  Products z^U * z^W are obtained by splitting
z^W according to the first letter of U and acting with z_{u1} on the
first block through a small table.  The coproduct rule is checked
against the S-basis coproduct when an engine is built.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from gmpy2 import mpq

from .symcore import (Elem, coproduct, factorization_product, internal_product_basis,
                      one, zassenhaus_zetas, zero)
from .exactmath import is_zero

__all__ = ["ZetaWordEngine", "engine"]


def _acc(out: dict, key, val):
    v = out.get(key, 0) + val
    if is_zero(v):
        out.pop(key, None)
    else:
        out[key] = v


class ZetaWordEngine:
    """Zeta-word calculus up to weight n.

    r=None selects the Zassenhaus generators; an int r selects the
    level-r generators (r >= n gives the Zassenhaus ones again).
    """

    def __init__(self, n: int, r: int | None = None, verify: bool = True):
        from .peakcore import level_zetas

        self.n = n
        self.r = r
        self.zetas = zassenhaus_zetas(n) if r is None else level_zetas(n, r)
        self._split_cache: dict = {}
        self._s_act_cache: dict = {}
        self._g_cache: dict = {}
        self._prod_cache: dict = {}
        self._s_in_zeta = self._sigma_in_zeta()
        if verify:
            self.verify_coproduct()

    # letters ------------------------------------------------------------
    def is_head_letter(self, k: int) -> bool:
        return self.r is not None and k % self.r == 0

    def letter_coproduct(self, k: int) -> list[tuple[tuple, tuple]]:
        if not self.is_head_letter(k):
            return [((k,), ()), ((), (k,))]
        r = self.r
        return [(((b * r,) if b else ()), (((k - b * r),) if k - b * r else ()))
                for b in range(k // r + 1)]

    def verify_coproduct(self):
        """Check Delta(z_k) against the coproduct rule for every letter."""
        for k in range(1, self.n + 1):
            lhs = coproduct(self.zetas[k])
            rhs: dict = defaultdict(lambda: mpq(0))
            for left, right in self.letter_coproduct(k):
                a = self.word_to_s(left)
                b = self.word_to_s(right)
                for I, x in a.terms.items():
                    for J, y in b.terms.items():
                        rhs[(I, J)] += x * y
            rhs = {key: v for key, v in rhs.items() if v}
            if lhs != rhs:
                raise AssertionError(f"coproduct rule fails for letter {k}")

    # change of basis ---------------------------------------------------------
    def word_to_s(self, W) -> Elem:
        out = one()
        for k in W:
            out = out * self.zetas[k]
        return out

    def _sigma_in_zeta(self) -> list[Elem]:
        # evaluate the defining factorisation on formal letters
        N = self.n
        letters = [zero()] + [Elem({(k,): 1}) for k in range(1, N + 1)]
        if self.r is None:
            ser = factorization_product(letters, "descending", N)
        else:
            ser = factorization_product(letters, "head-descending", N, self.r)
        return ser.comps

    def s_to_zeta(self, I) -> dict:
        """S^I expanded in zeta-words."""
        out = one()
        for i in I:
            out = out * self._s_in_zeta[i]
        return dict(out.terms)

    def elem_to_zeta(self, f: Elem) -> dict:
        out: dict = {}
        for I, c in f.terms.items():
            for W, x in self.s_to_zeta(I).items():
                _acc(out, W, c * x)
        return out

    def zeta_to_elem(self, vec: dict) -> Elem:
        out = zero()
        for W, c in vec.items():
            out = out + self.word_to_s(W).scale(c)
        return out

    # coproduct splitting of zeta-words -----------------------------------
    def split(self, W: tuple, u: int) -> list[tuple[tuple, tuple, int]]:
        """Terms (W1, W2, mult) of Delta(z^W) whose left factor has weight u."""
        key = (W, u)
        hit = self._split_cache.get(key)
        if hit is not None:
            return hit
        acc: dict = defaultdict(int)

        def rec(i, left, right, lw, rem):
            if lw > u or lw + rem < u:
                return
            if i == len(W):
                acc[(left, right)] += 1
                return
            k = W[i]
            for a, b in self.letter_coproduct(k):
                rec(i + 1, left + a, right + b, lw + (a[0] if a else 0), rem - k)

        rec(0, (), (), 0, sum(W))
        out = [(a, b, m) for (a, b), m in acc.items()]
        self._split_cache[key] = out
        return out

    # internal products -------------------------------------------------
    def s_act(self, I: tuple, W: tuple) -> dict:
        """S^I * z^W in zeta-words."""
        key = (I, W)
        hit = self._s_act_cache.get(key)
        if hit is not None:
            return hit
        if len(I) == 1:
            out = {W: 1} if I[0] == sum(W) else {}
        else:
            out = {}
            for W1, W2, m in self.split(W, I[0]):
                for V, c in self.s_act(I[1:], W2).items():
                    _acc(out, W1 + V, m * c)
        self._s_act_cache[key] = out
        return out

    def letter_act(self, u: int, B: tuple) -> dict:
        """z_u * z^B for a word B of weight u."""
        key = (u, B)
        hit = self._g_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        for I, c in self.zetas[u].terms.items():
            for V, m in self.s_act(I, B).items():
                _acc(out, V, c * m)
        self._g_cache[key] = out
        return out

    def product(self, U: tuple, W: tuple) -> dict:
        """z^U * z^W in zeta-words (zero unless the weights agree)."""
        key = (U, W)
        hit = self._prod_cache.get(key)
        if hit is not None:
            return hit
        if sum(U) != sum(W):
            out = {}
        elif len(U) == 1:
            out = self.letter_act(U[0], W)
        else:
            out = {}
            for W1, W2, m in self.split(W, U[0]):
                first = self.letter_act(U[0], W1)
                if not first:
                    continue
                rest = self.product(U[1:], W2)
                for A, a in first.items():
                    for B, b in rest.items():
                        _acc(out, A + B, m * a * b)
        self._prod_cache[key] = out
        return out

    def mul(self, x: dict, y: dict) -> dict:
        """Internal product of two zeta-word vectors."""
        out: dict = {}
        for U, a in x.items():
            for W, b in y.items():
                ab = a * b
                for V, c in self.product(U, W).items():
                    _acc(out, V, ab * c)
        return out

    def commutative_image(self, W: tuple) -> dict:
        """Image of z^W in the commutative quotient (partition-keyed)."""
        from .symcore import commutative_image

        return commutative_image(self.word_to_s(W))


@lru_cache(maxsize=None)
def engine(n: int, r: int | None = None) -> ZetaWordEngine:
    """Shared engine instance for weight n and level r."""
    return ZetaWordEngine(n, r)
