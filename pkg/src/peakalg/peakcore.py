"""Higher order peak algebras and their primitive generators.

For a level r >= 1 the peak algebra P^(r)_n is the subalgebra of Sym_n
(under the internal product) spanned by the elements S_{i0} theta(S^J)
with r | i0, where theta = theta_w is the internal product with
sigma_1((1 - w) A) for a primitive r-th root of unity w.  Its dimension
is the number of r-peak compositions of n (head a multiple of r, tail
parts not divisible by r).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .combitypes import (Headed, compositions, multiplicity_factor, order_index,
                         rpeak_compositions)
from .exactmath import cyclo_gen
from .symcore import (Elem, S, Series, internal_product, lambda_elem, one, ribbon,
                      sigma_series, solve_factorization, zero, zeta_word)

__all__ = [
    "theta_kernel", "theta", "theta_word", "level_zetas", "t_element", "t_word",
    "t_sign", "t_product",
    "peak_idempotents", "solve_Y", "rpeak_generator",
]


@lru_cache(maxsize=None)
def theta_kernel(m: int, r: int, power: int = 1) -> Elem:
    """K_m = sum_{i+j=m} (-w)^i Lambda_i S_j, the degree-m part of sigma_1((1-w)A).

    ``power`` replaces w by w^power (another primitive root when coprime to r).
    """
    w = cyclo_gen(r) ** power if power != 1 else cyclo_gen(r)
    out = zero()
    for i in range(m + 1):
        lam = lambda_elem(i) if i else one()
        sj = S(m - i) if m - i else one()
        out = out + (lam * sj).scale((-w) ** i)
    return out


def theta_word(J: Sequence[int], r: int, power: int = 1) -> Elem:
    """theta(S^J) = K_{j1} ... K_{jl} (theta is an algebra morphism)."""
    out = one()
    for j in J:
        out = out * theta_kernel(j, r, power)
    return out


def theta(f: Elem, r: int, power: int = 1) -> Elem:
    """theta(f) = f * K_n on each homogeneous component."""
    out = zero()
    for n in sorted(f.weights()):
        out = out + internal_product(f.component(n), theta_kernel(n, r, power))
    return out


def rpeak_generator(label: Headed, r: int, power: int = 1) -> Elem:
    """S_{i0} theta(S^J) for a B-composition (i0; J)."""
    head = S(label.head) if label.head else one()
    return head * theta_word(label.tail, r, power)


@lru_cache(maxsize=None)
def _level_zetas(N: int, r: int) -> tuple:
    return tuple(solve_factorization(sigma_series(N), "head-descending", N, r))


def level_zetas(N: int, r: int) -> list[Elem]:
    """[0, zeta^(r)_1, ..., zeta^(r)_N] with
    sigma_1 = (1 + sum_p zeta^(r)_{pr}) * ... e^{zeta^(r)_2} e^{zeta^(r)_1}
    (the exponential product over indices not divisible by r).
    """
    if r < 1:
        raise ValueError("r must be positive")
    return list(_level_zetas(N, r))


def t_word(m: int, r: int) -> tuple[int, ...]:
    """Ribbon shape of T_m: (m) if r | m, else (r, ..., r, j) with m = ir + j."""
    if m % r == 0:
        return (m,)
    i, j = divmod(m, r)
    return (r,) * i + (j,)


def t_element(m: int, r: int) -> Elem:
    return ribbon(*t_word(m, r))


def t_sign(m: int, r: int) -> int:
    """Sign of S_m in the expansion of T_m, namely (-1)^i for m = ir + j."""
    return 1 if m % r == 0 else (-1) ** (m // r)


def t_product(label: Headed, r: int, normalized: bool = True) -> Elem:
    """T^lambda = T_{lambda0} T_{lambda1} ...

    With ``normalized`` each factor is multiplied by its sign so that
    T^lambda is S^lambda plus words of greater length; the
    recursion for the idempotents needs this normalisation.
    """
    out = t_element(label.head, r) if label.head else one()
    sign = 1
    for t in label.tail:
        out = out * t_element(t, r)
        sign *= t_sign(t, r)
    return out.scale(sign) if normalized else out


def peak_idempotents(n: int, r: int, route: str = "both") -> dict[Headed, Elem]:
    """Orthogonal idempotents e^(r)_lambda indexed by r-peak partitions of n.

    Closed route: zeta^(r)_{lambda0} zeta^(r)^{lambda-bar} / m_{lambda-bar}.
    Recursion: (1/m) T^lambda * (S_n - sum_{mu < lambda} e_mu), with the
    sign-normalised T^lambda of ``t_product``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    order = order_index(n, r)
    closed = recursion = None
    if route in ("closed", "both"):
        z = level_zetas(n, r)
        closed = {lam: zeta_word(z, lam.word()).scale(mpq(1, multiplicity_factor(lam.tail)))
                  for lam in order}
    if route in ("recursion", "both"):
        recursion = {}
        remainder = S(n)
        for lam in order:
            e = internal_product(t_product(lam, r), remainder)
            e = e.scale(mpq(1, multiplicity_factor(lam.tail)))
            recursion[lam] = e
            remainder = remainder - e
    if closed is None and recursion is None:
        raise ValueError(f"unknown route {route!r}")
    if route == "both":
        for lam in order:
            if closed[lam] != recursion[lam]:
                raise AssertionError(f"idempotent routes disagree at {lam}")
    return closed if closed is not None else recursion


@lru_cache(maxsize=None)
def _solve_Y(N: int, r: int) -> tuple:
    return tuple(solve_factorization(sigma_series(N), "ascending-head-descending", N, r))


def solve_Y(N: int, r: int) -> list[Elem]:
    """[0, Y_1, ..., Y_N] with sigma_1 = (e^{Y_r} e^{Y_2r} ...)(... e^{Y_2} e^{Y_1}),
    the exponential products running over multiples of r and over the
    remaining indices respectively.
    """
    return list(_solve_Y(N, r))
