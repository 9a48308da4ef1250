"""Executable statements of the structural lemmas behind the idempotent
constructions.  Each check returns a ``LemmaReport`` with the number of
cases examined and the first few failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial

from gmpy2 import mpq

from .combitypes import (Headed, b_compositions, b_partitions, b_refines, compositions,
                         multiplicity_factor, order_index, refines, rpeak_compositions)
from .symcore import (Elem, S, coproduct, internal_product, lambda_elem, one, zassenhaus_zetas,
                      zero, zeta_word)

__all__ = [
    "LemmaReport", "unshuffle_counts", "lemma_s_times_zeta", "lemma_zeta_products",
    "lemma_gamma_primitive", "lemma_level_coproduct", "lemma_t_times_level_zeta",
    "lemma_exchange", "lemma_sigma_sharp", "prop_bsym_products", "chow_conditions",
    "lemma_zeta_projections", "run_all",
]


@dataclass
class LemmaReport:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def fail(self, what):
        if len(self.failures) < 5:
            self.failures.append(str(what))

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "cases": self.cases,
                "failures": self.failures}


def _is_primitive(f: Elem) -> bool:
    expected = {}
    for I, c in f.terms.items():
        expected[(I, ())] = expected.get((I, ()), 0) + c
        expected[((), I)] = expected.get(((), I), 0) + c
    return coproduct(f) == {k: v for k, v in expected.items() if v}


# ---------------------------------------------------------------------------
# type A


def unshuffle_counts(I: tuple, J: tuple) -> dict[tuple, int]:
    """c_{IJ}^K: ways to unshuffle the word J into len(I) subwords with sums
    i_1, ..., i_p whose concatenation is K."""
    p = len(I)
    out: dict = {}

    def rec(pos, blocks, sums):
        if pos == len(J):
            if list(sums) == list(I):
                key = tuple(x for b in blocks for x in b)
                out[key] = out.get(key, 0) + 1
            return
        for b in range(p):
            if sums[b] + J[pos] <= I[b]:
                blocks[b].append(J[pos])
                sums[b] += J[pos]
                rec(pos + 1, blocks, sums)
                sums[b] -= J[pos]
                blocks[b].pop()

    rec(0, [[] for _ in range(p)], [0] * p)
    return out


def lemma_s_times_zeta(n: int) -> LemmaReport:
    """S^I * zeta^J: zero unless J-sorted refines I-sorted, m ζ^I when they are
    equal, and in general the unshuffling counts.  The product is computed
    in the S basis and converted to zeta-words."""
    from .zetaengine import engine

    rep = LemmaReport(f"S^I*zeta^J (n={n})")
    eng = engine(n)
    z = zassenhaus_zetas(n)
    for J in compositions(n):
        zj = zeta_word(z, J)
        for I in compositions(n):
            rep.cases += 1
            got = eng.elem_to_zeta(internal_product(S(*I), zj))
            Is, Js = tuple(sorted(I, reverse=True)), tuple(sorted(J, reverse=True))
            if not refines(Js, Is):
                if got:
                    rep.fail(f"I={I} J={J}: expected 0")
                continue
            if Js == Is and got != {I: multiplicity_factor(I)}:
                rep.fail(f"I={I} J={J}: expected m_I zeta^I")
                continue
            if got != unshuffle_counts(I, J):
                rep.fail(f"I={I} J={J}: unshuffle counts differ")
    return rep


def lemma_zeta_products(n: int) -> LemmaReport:
    """zeta^I * zeta^J = 0 when l(J) < l(I) or when l(J) = l(I) and J is not a
    rearrangement of I; m_I zeta^I when J is a rearrangement of I."""
    from .zetaengine import engine

    rep = LemmaReport(f"zeta^I*zeta^J (n={n})")
    eng = engine(n)
    for I in compositions(n):
        for J in compositions(n):
            if len(J) > len(I):
                continue
            rep.cases += 1
            got = eng.product(I, J)
            if len(J) == len(I) and sorted(I) == sorted(J):
                if got != {I: multiplicity_factor(I)}:
                    rep.fail(f"I={I} J={J}: expected m_I zeta^I")
            elif got:
                rep.fail(f"I={I} J={J}: expected 0")
    return rep


def lemma_gamma_primitive(n: int) -> LemmaReport:
    """Gamma_K = zeta_k * zeta^K is primitive."""
    rep = LemmaReport(f"Gamma_K primitive (n={n})")
    z = zassenhaus_zetas(n)
    for K in compositions(n):
        rep.cases += 1
        if not _is_primitive(internal_product(z[n], zeta_word(z, K))):
            rep.fail(f"K={K}")
    return rep


# ---------------------------------------------------------------------------
# level r


def lemma_level_coproduct(n: int, r: int) -> LemmaReport:
    """zeta^(r)_k primitive when r does not divide k; otherwise
    Delta = sum_i zeta^(r)_{ir} (x) zeta^(r)_{k-ir}."""
    from .zetaengine import ZetaWordEngine

    rep = LemmaReport(f"level coproduct (n={n}, r={r})")
    eng = ZetaWordEngine(n, r, verify=False)
    rep.cases = n
    try:
        eng.verify_coproduct()
    except AssertionError as exc:
        rep.fail(exc)
    return rep


def lemma_t_times_level_zeta(n: int, r: int) -> LemmaReport:
    """T^I * zeta^(r)-word of lambda: zero when I-sorted precedes lambda,
    m_I zeta^(r)-word of I when I-sorted equals lambda (sign-normalised T)."""
    from .peakcore import level_zetas, t_product

    rep = LemmaReport(f"T^I*zeta^lambda (n={n}, r={r})")
    z = level_zetas(n, r)
    order = list(order_index(n, r))
    pos = {lam: i for i, lam in enumerate(order)}
    for I in rpeak_compositions(n, r):
        T = t_product(I, r)
        Id = I.sorted()
        for lam in order:
            if pos[Id] > pos[lam]:
                continue
            rep.cases += 1
            got = internal_product(T, zeta_word(z, lam.word()))
            if Id == lam:
                want = zeta_word(z, I.word()).scale(multiplicity_factor(I.tail))
                if got != want:
                    rep.fail(f"I={I}: expected m_I zeta^I")
            elif got:
                rep.fail(f"I={I} lambda={lam}: expected 0")
    return rep


# ---------------------------------------------------------------------------
# type B


def lemma_exchange(N: int) -> LemmaReport:
    """lambda-bar_1 * E-down(zeta) = E-up(zeta) and lambda-bar_1 * zeta_i = zeta_i."""
    from .mrbsym import _exp_series, solve_bsym_zetas
    from .symcore import Series

    rep = LemmaReport(f"exchange (N={N})")
    zetas, _ = solve_bsym_zetas(N)
    down, up = Series.one(N), Series.one(N)
    for k in range(N, 0, -1):
        down = down * _exp_series(zetas[k], k, N)
    for k in range(1, N + 1):
        up = up * _exp_series(zetas[k], k, N)
    for k in range(1, N + 1):
        rep.cases += 2
        lb = lambda_elem(k, barred=True)
        if internal_product(lb, zetas[k]) != zetas[k]:
            rep.fail(f"lambda-bar * zeta_{k}")
        if internal_product(lb, down[k]) != up[k]:
            rep.fail(f"ordered exponentials at weight {k}")
    return rep


def lemma_sigma_sharp(N: int) -> LemmaReport:
    """sigma_1# * z~_n = 0 and sigma_1# * z_n = 2 z_n."""
    from .mrbsym import sharp_letter, solve_bsym_zetas

    rep = LemmaReport(f"sigma# products (N={N})")
    zetas, tildes = solve_bsym_zetas(N)
    for k in range(1, N + 1):
        rep.cases += 2
        if internal_product(sharp_letter(k), tildes[k]):
            rep.fail(f"sigma# * z~_{k} != 0")
        if internal_product(sharp_letter(k), zetas[k]) != zetas[k].scale(2):
            rep.fail(f"sigma# * z_{k} != 2 z_{k}")
    return rep


def _btilde_zeta(lam: Headed, zetas, tildes) -> Elem:
    out = tildes[lam.head] if lam.head else one()
    for k in lam.tail:
        out = out * zetas[k]
    return out


def prop_bsym_products(n: int) -> LemmaReport:
    """S~^I * z~_{l0} z_{l1}...: zero unless lambda refines I-sorted;
    2^p prod m_j! z~_{i0} z_{i1}... when lambda equals I-sorted."""
    from .mrbsym import bsym_basis, solve_bsym_zetas

    rep = LemmaReport(f"S~^I * zeta-products (n={n})")
    zetas, tildes = solve_bsym_zetas(n)
    words = {lam: _btilde_zeta(lam, zetas, tildes) for lam in b_partitions(n)}
    for I in b_compositions(n):
        SI = bsym_basis(I)
        Id = I.sorted()
        for lam, w in words.items():
            eq, fine = lam == Id, b_refines(lam, Id)
            if fine and not eq:
                continue
            rep.cases += 1
            got = internal_product(SI, w)
            if eq:
                c = 2 ** len(I.tail) * multiplicity_factor(I.tail)
                if got != _btilde_zeta(I, zetas, tildes).scale(c):
                    rep.fail(f"I={I}: leading term")
            elif got:
                rep.fail(f"I={I} lambda={lam}: expected 0")
    return rep


def _mr_words(n: int):
    for I in compositions(n):
        for signs in range(1 << len(I)):
            yield tuple(-x if signs >> k & 1 else x for k, x in enumerate(I))


def chow_conditions(N: int = 3, samples: int = 12, seed: int = 2) -> LemmaReport:
    """Theta = sigma_1# * (.) satisfies Theta(sigma_1) = sigma_1#,
    Theta(sigma_1#) = (sigma_1#)^2 and Theta(FG) = mu'[Theta(F) (x) Delta(G)]
    (the last one on seeded random F, G of weight <= N)."""
    from .mrbsym import chow_theta, mu_prime_theta, sigma_sharp_series

    rep = LemmaReport(f"Chow conditions (N={N})")
    sq = sigma_sharp_series(2 * N) * sigma_sharp_series(2 * N)
    for k in range(1, 2 * N + 1):
        rep.cases += 2
        if chow_theta(S(k)) != sigma_sharp_series(k)[k]:
            rep.fail(f"Theta(S_{k})")
        if chow_theta(sigma_sharp_series(k)[k]) != sq[k]:
            rep.fail(f"Theta(S#_{k})")
    rng = random.Random(seed)
    pool = {k: list(_mr_words(k)) for k in range(1, N + 1)}
    for _ in range(samples):
        F, G = zero(), zero()
        for target in (0, 1):
            k = rng.randint(1, N)
            elem = Elem({w: mpq(rng.randint(-3, 3), rng.randint(1, 3))
                         for w in rng.sample(pool[k], min(3, len(pool[k])))})
            if target == 0:
                F = elem
            else:
                G = elem
        rep.cases += 1
        if chow_theta(F * G) != mu_prime_theta(F, G):
            rep.fail(f"Theta(FG) with F={F}, G={G}")
    return rep


def lemma_zeta_projections(N: int) -> LemmaReport:
    """Projection to Sym (erase bars): z_n -> zeta^(2)_n for odd n, 0 for even n;
    z~_n -> 0 for odd n, zeta^(2)_n for even n."""
    from .mrbsym import project_to_sym, solve_bsym_zetas
    from .peakcore import level_zetas

    rep = LemmaReport(f"zeta projections (N={N})")
    zetas, tildes = solve_bsym_zetas(N)
    z2 = level_zetas(N, 2)
    for k in range(1, N + 1):
        rep.cases += 2
        odd = k % 2 == 1
        if project_to_sym(zetas[k]) != (z2[k] if odd else zero()):
            rep.fail(f"projection of z_{k}")
        if project_to_sym(tildes[k]) != (zero() if odd else z2[k]):
            rep.fail(f"projection of z~_{k}")
    return rep


def run_all(max_n: int = 6) -> list[LemmaReport]:
    """The full lemma battery at the sizes used by the acceptance run."""
    a = min(max_n, 6)
    b = min(max_n, 5)
    out = [lemma_s_times_zeta(k) for k in range(1, a + 1)]
    out += [lemma_zeta_products(k) for k in range(1, a + 1)]
    out += [lemma_gamma_primitive(k) for k in range(1, b + 1)]
    out += [lemma_level_coproduct(a, r) for r in range(2, a + 1)]
    out += [lemma_t_times_level_zeta(k, r) for r in (2, 3, 4) for k in range(1, a + 1)]
    out += [lemma_exchange(b), lemma_sigma_sharp(b)]
    out += [prop_bsym_products(k) for k in range(1, b + 1)]
    out += [chow_conditions(min(3, max_n)), lemma_zeta_projections(a)]
    return out
