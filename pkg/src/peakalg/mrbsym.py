"""Two-alphabet noncommutative symmetric functions and the type B descent algebra.

MR is the free product of two copies of Sym, on letters S_k (alphabet A)
and S_{k-bar} (alphabet A-bar, stored as negative parts).  Its weight-n
internal product algebra contains BSym_n, embedded with basis

    S~^(i0; i1..ip) = S_{i0}(A) * (S^{i1..ip})#,

where F# = F * sigma_1# and sigma_1# = lambda-bar_1 * sigma_1 is the
superisation of sigma_1.  Structure constants of BSym are also
available directly in S~ coordinates through the map Theta = sigma_1# * (.)
which acts on S~ words by a closed formula.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

from gmpy2 import mpq

from .combitypes import (Headed, b_compositions, multiplicity_factor, order_index,
                         partitions, rpeak_partitions)
from .exactmath import SparseEchelon, is_zero
from .symcore import (Elem, S, Series, coproduct, commutative_image, internal_product,
                      lambda_elem, one, sigma_series, solve_factorization, zero)

__all__ = [
    "swap_alphabets", "bar_antimorphism", "internal_product_mr", "sharp_letter",
    "superize", "project_to_sym", "sigma_sharp_series", "bsym_basis", "BSymSpace",
    "bsym_space", "solve_bsym_zetas", "bsym_idempotents", "chow_theta",
    "theta_btilde", "mu_prime_theta", "bsym_product", "bsym_model", "ano_idempotents",
    "epsilon_bridge", "projection_matches_peak",
]


# ---------------------------------------------------------------------------
# elementary maps


def swap_alphabets(f: Elem) -> Elem:
    """Exchange A and A-bar (toggle every bar, keep the order of letters)."""
    return f.map_labels(lambda w: tuple(-x for x in w))


def bar_antimorphism(f: Elem) -> Elem:
    """Involutive antiautomorphism: reverse each word and toggle bars."""
    return f.map_labels(lambda w: tuple(-x for x in reversed(w)))


def project_to_sym(f: Elem) -> Elem:
    """Identify A-bar with A (erase bars)."""
    return f.map_labels(lambda w: tuple(abs(x) for x in w))


def internal_product_mr(f: Elem, g: Elem) -> Elem:
    """Internal product of homogeneous MR elements of equal weight."""
    wf, wg = f.weights(), g.weights()
    if f and g and (len(wf) != 1 or wf != wg):
        raise ValueError("internal product needs homogeneous elements of equal weight")
    return internal_product(f, g)


@lru_cache(maxsize=None)
def sharp_letter(n: int) -> Elem:
    """S_n# = sum_{a+b=n} Lambda-bar_a S_b."""
    out = zero()
    for a in range(n + 1):
        la = lambda_elem(a, barred=True) if a else one()
        sb = S(n - a) if n - a else one()
        out = out + la * sb
    return out


def sharp_word(I: Sequence[int]) -> Elem:
    out = one()
    for i in I:
        out = out * sharp_letter(i)
    return out


def sigma_sharp_series(N: int) -> Series:
    return Series([one()] + [sharp_letter(n) for n in range(1, N + 1)], N)


def superize(F: Elem) -> Elem:
    """F# = F * sigma_1#, computed on each homogeneous component."""
    out = zero()
    for n in sorted(F.weights()):
        comp = F.component(n)
        out = out + (internal_product(comp, sharp_letter(n)) if n else comp)
    return out


# ---------------------------------------------------------------------------
# the embedded BSym


@lru_cache(maxsize=None)
def bsym_basis(K: Headed) -> Elem:
    """S~^K = S_{k0} S#_{k1} ... S#_{kp}."""
    K = Headed(K[0], tuple(K[1]))
    head = S(K.head) if K.head else one()
    return head * sharp_word(K.tail)


class BSymSpace:
    """BSym_n inside MR_n with coordinates on the S~ basis."""

    def __init__(self, n: int):
        self.n = n
        self.labels = list(b_compositions(n))
        self._ech = SparseEchelon(track=True)
        for K in self.labels:
            if not self._ech.add(bsym_basis(K).terms):
                raise AssertionError(f"S~ basis is dependent at {K}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def coordinates(self, f: Elem) -> dict:
        """Coordinates of f on the S~ basis; raises if f is not in BSym_n."""
        coords = self._ech.express(f.component(self.n).terms)
        if coords is None or f.component(self.n) != f:
            raise ValueError("element does not lie in BSym_n")
        return {self.labels[i]: c for i, c in coords.items()}

    def contains(self, f: Elem) -> bool:
        try:
            self.coordinates(f)
            return True
        except ValueError:
            return False

    def to_elem(self, vec: dict) -> Elem:
        out = zero()
        for K, c in vec.items():
            out = out + bsym_basis(K).scale(c)
        return out


@lru_cache(maxsize=None)
def bsym_space(n: int) -> BSymSpace:
    return BSymSpace(n)


# ---------------------------------------------------------------------------
# primitive generators and idempotents


@lru_cache(maxsize=None)
def _bsym_zetas(N: int):
    zetas = solve_factorization(sigma_sharp_series(N), "symmetric", N)
    down = Series.one(N)
    for k in range(N, 0, -1):
        down = down * _exp_series(zetas[k], k, N)
    tildes = solve_factorization(sigma_series(N), "grouplike-head", N, known=down)
    return tuple(zetas), tuple(tildes)


def _exp_series(x: Elem, k: int, N: int) -> Series:
    comps = [zero() for _ in range(N + 1)]
    comps[0] = one()
    p = one()
    for j in range(1, N // k + 1):
        p = p * x
        comps[j * k] = p.scale(mpq(1, factorial(j)))
    return Series(comps, N)


def solve_bsym_zetas(N: int) -> tuple[list[Elem], list[Elem]]:
    """([0, z_1..z_N], [0, z~_1..z~_N]) with

    sigma_1# = (e^{z_1} e^{z_2} ...)(... e^{z_2} e^{z_1})   and
    sigma_1  = (1 + z~_1 + z~_2 + ...)(... e^{z_2} e^{z_1}).
    """
    if N < 1:
        raise ValueError("N must be positive")
    z, t = _bsym_zetas(N)
    return list(z), list(t)


def bsym_closed_idempotent(lam: Headed, zetas, tildes) -> Elem:
    out = tildes[lam.head] if lam.head else one()
    for k in lam.tail:
        out = out * zetas[k]
    return out.scale(mpq(1, multiplicity_factor(lam.tail)))


def bsym_idempotents(n: int, route: str = "both") -> dict[Headed, Elem]:
    """Idempotents e_lambda of BSym_n indexed by B-partitions (MR elements).

    closed:    z~_{lambda0} z_{lambda1} ... z_{lambdak} / prod m_j!
    recursion: (1 / (2^k prod m_j!)) S~^lambda * (S_n - sum_{mu < lambda} e_mu)
    """
    if n < 1:
        raise ValueError("n must be positive")
    order = order_index(n, "B")
    closed = recursion = None
    if route in ("closed", "both"):
        z, t = solve_bsym_zetas(n)
        closed = {lam: bsym_closed_idempotent(lam, z, t) for lam in order}
    if route in ("recursion", "both"):
        recursion = {}
        remainder = S(n)
        for lam in order:
            scale = mpq(1, 2 ** len(lam.tail) * multiplicity_factor(lam.tail))
            e = internal_product(bsym_basis(lam), remainder).scale(scale)
            recursion[lam] = e
            remainder = remainder - e
    if closed is None and recursion is None:
        raise ValueError(f"unknown route {route!r}")
    if route == "both":
        for lam in order:
            if closed[lam] != recursion[lam]:
                raise AssertionError(f"BSym idempotent routes disagree at {lam}")
    return closed if closed is not None else recursion


# ---------------------------------------------------------------------------
# Theta = sigma_1# * (.)


def chow_theta(F: Elem) -> Elem:
    """Left internal product by sigma_1#, componentwise."""
    out = zero()
    for n in sorted(F.weights()):
        comp = F.component(n)
        out = out + (internal_product(sharp_letter(n), comp) if n else comp)
    return out


def mu_prime_theta(F: Elem, G: Elem) -> Elem:
    """mu'[Theta(F) (x) Delta(G)] with mu'(A (x) B (x) C) = (lambda-bar_1 * B) A C."""
    tf = chow_theta(F)
    out = zero()
    for (B, C), c in coproduct(G).items():
        wb = sum(abs(x) for x in B)
        lb = lambda_elem(wb, barred=True) if wb else one()
        left = internal_product(lb, Elem({B: c})) if wb else Elem({B: c})
        out = out + left * tf * Elem({C: 1})
    return out


def _splits(k: int):
    return [(a, k - a) for a in range(k + 1)]


@lru_cache(maxsize=None)
def theta_btilde(K: Headed) -> dict:
    """Theta(S~^K) on the S~ basis; all terms have head 0.

    Theta(S~^(k0; k1..kp)) = sum over a_j + b_j = k_j of
        S#_{a_p} ... S#_{a_1} S#_{k0} S#_{b_1} ... S#_{b_p}.
    """
    out: dict = {}

    def rec(j, left, right):
        if j == len(K.tail):
            word = tuple(x for x in left[::-1] + ((K.head,) if K.head else ()) + right if x)
            key = Headed(0, word)
            out[key] = out.get(key, 0) + 1
            return
        for a, b in _splits(K.tail[j]):
            rec(j + 1, left + (a,), right + (b,))

    rec(0, (), ())
    return {k: mpq(v) for k, v in out.items() if v}


def _matrices(rows: Sequence[int], cols: Sequence[int]):
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        if all(c == 0 for c in cols):
            yield ()
        return
    from .symcore import _bounded_splits

    for row in _bounded_splits(rows[0], list(cols)):
        rest = tuple(c - a for c, a in zip(cols, row))
        for tail in _matrices(rows[1:], rest):
            yield (row,) + tail


@lru_cache(maxsize=None)
def bsym_product(I: Headed, J: Headed) -> dict:
    """S~^I * S~^J on the S~ basis."""
    rows = (I.head,) + tuple(I.tail)
    cols = (J.head,) + tuple(J.tail)
    out: dict = {}
    for mat in _matrices(rows, cols):
        first = mat[0]
        partial = {Headed(first[0], tuple(x for x in first[1:] if x)): mpq(1)}
        for row in mat[1:]:
            block = Headed(row[0], tuple(x for x in row[1:] if x))
            th = theta_btilde(block)
            nxt: dict = {}
            for P, c in partial.items():
                for Q, d in th.items():
                    key = Headed(P.head, P.tail + Q.tail)
                    nxt[key] = nxt.get(key, 0) + c * d
            partial = nxt
        for K, c in partial.items():
            v = out.get(K, 0) + c
            if is_zero(v):
                out.pop(K, None)
            else:
                out[K] = v
    return out


def bsym_model(n: int):
    """BSym_n as an algebra model on the S~ basis, with its idempotents."""
    from .reptheory import AlgebraModel

    space = bsym_space(n)
    idem = {lam: space.coordinates(e) for lam, e in bsym_idempotents(n, "closed").items()}

    def comm(K: Headed) -> dict:
        return commutative_image(bsym_basis(K), signed=True)

    return AlgebraModel(f"BSym_{n}", list(space.labels), bsym_product, comm, idem, n, "B")


# ---------------------------------------------------------------------------
# alternative idempotents built from log(sigma_1#)


def _phi_sharp(N: int) -> list[Elem]:
    """[0, Phi#_1, ..., Phi#_N] with log sigma_1# = sum Phi#_n / n."""
    lg = sigma_sharp_series(N).log()
    return [zero()] + [lg[k].scale(k) for k in range(1, N + 1)]


def _phi_word(phis, I) -> Elem:
    out = one()
    for i in I:
        out = out * phis[i]
    return out


def ano_idempotents(n: int, project: bool = False) -> dict:
    """Idempotent families built from Phi# = n [log sigma_1#]_n.

    Returns a dict with
      "E":       lambda -> (1/l!) sum_{I rearranging lambda} Phi#^I / (2^l i_1...i_l),
                 orthogonal idempotents of MR_n summing to [exp(phi#/2)]_n
      "E_sharp": lambda -> 2^l E_lambda = sum Phi#^I / (l! i_1...i_l),
                 pairwise orthogonal, summing to S_n#, E_sharp * E_sharp = 2^l E_sharp
      "eta":     [eta_0..eta_n] with eta = sigma_1 (sigma_1#)^(-1/2)
      "E_peak":  (0;lambda-bar) style labels (even head, odd tail) ->
                 eta_{lambda0} (1/l!) sum projected Phi#^J / (2^l j_1...j_l),
                 a complete orthogonal system of the level-2 peak algebra
    The normalisation follows from exp(phi#/2) being idempotent.
    """
    from .combitypes import rearrangements

    phis = _phi_sharp(n)
    E, E_sharp = {}, {}
    for lam in partitions(n):
        l = len(lam)
        acc = zero()
        for I in rearrangements(lam):
            denom = 1
            for i in I:
                denom *= i
            acc = acc + _phi_word(phis, I).scale(mpq(1, denom))
        E_sharp[lam] = acc.scale(mpq(1, factorial(l)))
        E[lam] = acc.scale(mpq(1, factorial(l) * 2 ** l))
    eta_series = sigma_series(n) * sigma_sharp_series(n).inverse_sqrt()
    eta = [eta_series[k] for k in range(n + 1)]
    peak = {}
    proj_phis = [project_to_sym(p) for p in phis]
    for lam in rpeak_partitions(n, 2):
        l = len(lam.tail)
        acc = zero()
        for J in rearrangements(lam.tail):
            denom = 1
            for j in J:
                denom *= j
            acc = acc + _phi_word(proj_phis, J).scale(mpq(1, denom))
        head = project_to_sym(eta[lam.head]) if lam.head else one()
        peak[lam] = (head * acc).scale(mpq(1, factorial(l) * 2 ** l))
    return {"E": E, "E_sharp": E_sharp, "eta": eta, "E_peak": peak}


# ---------------------------------------------------------------------------
# the level-2 bridge


def epsilon_bridge(n: int) -> dict:
    """Compare BSym_n with the level-2 peak algebra.

    Returns dimensions of the projection of BSym_n to Sym_n, of the
    peak algebra, and of the corner eps * BSym_n * eps where eps is the
    sum of the BSym idempotents labelled by 2-peak partitions.
    """
    model = bsym_model(n)
    eps: dict = {}
    for lam in rpeak_partitions(n, 2):
        for K, c in model.idempotents[lam].items():
            v = eps.get(K, 0) + c
            if is_zero(v):
                eps.pop(K, None)
            else:
                eps[K] = v
    corner = SparseEchelon()
    for K in model.labels:
        corner.add(model.mul(model.mul(eps, {K: mpq(1)}), eps))
    proj = SparseEchelon()
    for K in model.labels:
        proj.add(project_to_sym(bsym_basis(K)).terms)
    from .combitypes import rpeak_compositions

    return {"n": n, "peak_dim": len(rpeak_compositions(n, 2)), "projection_dim": len(proj),
            "corner_dim": len(corner), "projection_equals_peak": projection_matches_peak(n)}


def projection_matches_peak(n: int) -> bool:
    """The image of BSym_n in Sym_n equals the level-2 peak algebra."""
    from .zetaengine import engine
    from .combitypes import rpeak_compositions

    eng = engine(n, 2)
    allowed = {x.word() for x in rpeak_compositions(n, 2)}
    span = SparseEchelon()
    for K in b_compositions(n):
        vec = eng.elem_to_zeta(project_to_sym(bsym_basis(K)))
        if any(W not in allowed for W in vec):
            return False
        span.add(vec)
    return len(span) == len(allowed)
