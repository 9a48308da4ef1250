"""Noncommutative symmetric functions in the complete basis.

Elements are finite linear combinations of words S^I = S_{i1}...S_{il}.
The same container serves the Mantaci-Reutenauer algebra: a negative
part -k stands for the barred letter S_{k-bar}.  Coefficients are exact
rationals or cyclotomic numbers.

Besides the algebra structure this module provides the coproduct, the
internal (descent algebra) product via the splitting formula, truncated
power series calculus and the factorisation solver used to define the
various families of primitive generators.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq

from .combitypes import coarsenings, compositions, partitions, multiplicity_factor
from .exactmath import Cyclo, Rational, format_coeff, is_zero

__all__ = [
    "Elem", "SymElem", "MrElem", "S", "one", "zero", "coproduct",
    "internal_product", "internal_product_basis", "ribbon", "ribbon_expansion",
    "lambda_elem", "commutative_image", "Series", "sigma_series",
    "solve_factorization", "zassenhaus_zetas", "typeA_idempotents",
    "idempotent_basis", "gamma", "homogeneous_weight",
]

_SCALARS = (int, Rational, Cyclo)


class Elem:
    """Linear combination of words in the letters S_k (k > 0) and S_{k-bar} (k < 0)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms: dict = {}
        if terms:
            for k, c in terms.items():
                if not is_zero(c):
                    self.terms[tuple(k)] = c if isinstance(c, (Rational, Cyclo)) else mpq(c)

    @classmethod
    def _raw(cls, terms: dict) -> "Elem":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    # container protocol ----------------------------------------------
    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, label) -> object:
        return self.terms.get(tuple(label), mpq(0))

    def copy(self) -> "Elem":
        return Elem._raw(dict(self.terms))

    # linear structure ---------------------------------------------------
    def __add__(self, other: "Elem") -> "Elem":
        if not isinstance(other, Elem):
            if is_zero(other):
                return self
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if is_zero(v):
                out.pop(k, None)
            else:
                out[k] = v
        return Elem._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Elem":
        return Elem._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Elem") -> "Elem":
        return self + (-other)

    def scale(self, c) -> "Elem":
        if is_zero(c):
            return Elem._raw({})
        return Elem._raw({k: v * c for k, v in self.terms.items() if not is_zero(v * c)})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, Elem):
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                v = out.get(k, 0) + c1 * c2
                if is_zero(v):
                    out.pop(k, None)
                else:
                    out[k] = v
        return Elem._raw(out)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(1 / mpq(c) if not isinstance(c, Cyclo) else c.inverse())

    def __pow__(self, k: int) -> "Elem":
        out = one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.terms == other.terms
        if is_zero(other) if isinstance(other, _SCALARS) else False:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # structure ------------------------------------------------------------
    def weights(self) -> set[int]:
        return {sum(abs(x) for x in k) for k in self.terms}

    def component(self, n: int) -> "Elem":
        return Elem._raw({k: c for k, c in self.terms.items() if sum(abs(x) for x in k) == n})

    def map_labels(self, fn: Callable[[tuple], tuple]) -> "Elem":
        out: dict = {}
        for k, c in self.terms.items():
            nk = fn(k)
            out[nk] = out.get(nk, 0) + c
        return Elem({k: c for k, c in out.items()})

    def support(self) -> list[tuple]:
        return sorted(self.terms, key=lambda k: (len(k), [abs(x) for x in k], k))

    def __repr__(self):
        return f"Elem({self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        from .combitypes import render_composition

        out = []
        for k in self.support():
            out.append(f"({format_coeff(self.terms[k])})*S[{render_composition(k)}]")
        return " + ".join(out)


SymElem = Elem
MrElem = Elem


def S(*parts: int) -> Elem:
    """The word S^I; negative parts are barred letters."""
    if any(p == 0 for p in parts):
        raise ValueError("parts must be nonzero")
    return Elem._raw({tuple(parts): mpq(1)})


def one() -> Elem:
    return Elem._raw({(): mpq(1)})


def zero() -> Elem:
    return Elem._raw({})


def homogeneous_weight(f: Elem) -> int:
    ws = f.weights()
    if len(ws) != 1:
        raise ValueError("element is not homogeneous")
    return ws.pop()


# ---------------------------------------------------------------------------
# coproduct


def _letter_coproduct(x: int) -> list[tuple[tuple, tuple]]:
    k, s = abs(x), (1 if x > 0 else -1)
    out = []
    for a in range(k + 1):
        left = (s * a,) if a else ()
        right = (s * (k - a),) if k - a else ()
        out.append((left, right))
    return out


def coproduct(f: Elem) -> dict[tuple[tuple, tuple], object]:
    """Coproduct with S_n and S_{n-bar} both group-like generators."""
    out: dict = defaultdict(lambda: mpq(0))
    for word, c in f.terms.items():
        partial = {((), ()): 1}
        for x in word:
            nxt: dict = defaultdict(int)
            for (l, r), m in partial.items():
                for a, b in _letter_coproduct(x):
                    nxt[(l + a, r + b)] += m
            partial = nxt
        for key, m in partial.items():
            out[key] += c * m
    return {k: v for k, v in out.items() if not is_zero(v)}


# ---------------------------------------------------------------------------
# internal product


def _bounded_splits(total: int, caps: Sequence[int]):
    """Tuples a with 0 <= a_k <= caps_k and sum a == total."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest_cap = sum(caps[1:])
    for a in range(max(0, total - rest_cap), min(caps[0], total) + 1):
        for tail in _bounded_splits(total - a, caps[1:]):
            yield (a,) + tail


@lru_cache(maxsize=None)
def internal_product_basis(I: tuple, J: tuple) -> dict:
    """S^I * S^J as {word: int}.

    Uses the splitting formula: the first letter of I takes a piece of
    each letter of J (keeping its bar), the rest of I acts on what is
    left.  A barred letter of I flips the bars of its block.
    """
    if sum(abs(x) for x in I) != sum(abs(x) for x in J):
        return {}
    if not I:
        return {(): 1}
    first = I[0]
    caps = [abs(j) for j in J]
    out: dict = defaultdict(int)
    for split in _bounded_splits(abs(first), caps):
        block = tuple((a if j > 0 else -a) for a, j in zip(split, J) if a)
        if first < 0:
            block = tuple(-x for x in block)
        rem = tuple((abs(j) - a) * (1 if j > 0 else -1) for a, j in zip(split, J) if abs(j) - a)
        if len(I) == 1:
            out[block] += 1
            continue
        for word, m in internal_product_basis(I[1:], rem).items():
            out[block + word] += m
    return {k: v for k, v in out.items() if v}


def internal_product(f: Elem, g: Elem) -> Elem:
    """Bilinear extension of the internal product to arbitrary elements."""
    out: dict = {}
    for I, a in f.terms.items():
        wI = sum(abs(x) for x in I)
        for J, b in g.terms.items():
            if sum(abs(x) for x in J) != wI:
                continue
            ab = a * b
            for K, m in internal_product_basis(I, J).items():
                v = out.get(K, 0) + ab * m
                if is_zero(v):
                    out.pop(K, None)
                else:
                    out[K] = v
    return Elem._raw(out)


# ---------------------------------------------------------------------------
# other bases


def ribbon_expansion(I: Sequence[int]) -> dict[tuple, int]:
    """R_I = sum over coarsenings J of I of (-1)^(l(I)-l(J)) S^J."""
    I = tuple(I)
    return {J: (-1) ** (len(I) - len(J)) for J in coarsenings(I)}


def ribbon(*parts: int) -> Elem:
    return Elem(ribbon_expansion(parts))


@lru_cache(maxsize=None)
def _lambda_terms(n: int) -> tuple:
    return tuple((K, (-1) ** (n - len(K))) for K in compositions(n))


def lambda_elem(n: int, barred: bool = False) -> Elem:
    """Elementary function Lambda_n = sum_K (-1)^(n-l(K)) S^K (barred letters if asked)."""
    sgn = -1 if barred else 1
    return Elem._raw({tuple(sgn * k for k in K): mpq(c) for K, c in _lambda_terms(n)})


def commutative_image(f: Elem, signed: bool = False) -> dict:
    """Image in the commutative quotient, keyed by sorted multisets of parts.

    Plain words map to partitions.  With ``signed`` (two alphabets) every
    word maps to a pair (unbarred parts, barred parts), both sorted
    decreasingly.
    """
    out: dict = {}
    for word, c in f.terms.items():
        if signed:
            key = (tuple(sorted((x for x in word if x > 0), reverse=True)),
                   tuple(sorted((-x for x in word if x < 0), reverse=True)))
        else:
            key = tuple(sorted(word, reverse=True))
        v = out.get(key, 0) + c
        if is_zero(v):
            out.pop(key, None)
        else:
            out[key] = v
    return out


# ---------------------------------------------------------------------------
# truncated power series, as lists of homogeneous components


class Series:
    """Graded series truncated above degree N; comps[n] is the degree-n part."""

    __slots__ = ("comps", "N")

    def __init__(self, comps: Sequence[Elem], N: int):
        self.N = N
        self.comps = [c if c is not None else zero() for c in comps[: N + 1]]
        self.comps += [zero() for _ in range(N + 1 - len(self.comps))]

    def __getitem__(self, n: int) -> Elem:
        return self.comps[n]

    def __add__(self, other: "Series") -> "Series":
        return Series([a + b for a, b in zip(self.comps, other.comps)], min(self.N, other.N))

    def __sub__(self, other: "Series") -> "Series":
        return Series([a - b for a, b in zip(self.comps, other.comps)], min(self.N, other.N))

    def scale(self, c) -> "Series":
        return Series([a.scale(c) for a in self.comps], self.N)

    def __mul__(self, other: "Series") -> "Series":
        N = min(self.N, other.N)
        out = [zero() for _ in range(N + 1)]
        for i, a in enumerate(self.comps[: N + 1]):
            if not a:
                continue
            for j in range(N + 1 - i):
                b = other.comps[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(out, N)

    def powers(self, kmax: int) -> list["Series"]:
        out = [Series.one(self.N)]
        for _ in range(kmax):
            out.append(out[-1] * self)
        return out

    @staticmethod
    def one(N: int) -> "Series":
        return Series([one()], N)

    @staticmethod
    def from_elem(f: Elem, N: int) -> "Series":
        comps = [zero() for _ in range(N + 1)]
        for word, c in f.terms.items():
            w = sum(abs(x) for x in word)
            if w <= N:
                comps[w] = comps[w] + Elem._raw({word: c})
        return Series(comps, N)

    def to_elem(self) -> Elem:
        out = zero()
        for c in self.comps:
            out = out + c
        return out

    def _check_no_constant(self):
        if self.comps[0]:
            raise ValueError("series must have zero constant term")

    def exp(self) -> "Series":
        self._check_no_constant()
        acc = Series.one(self.N)
        term = Series.one(self.N)
        for k in range(1, self.N + 1):
            term = (term * self).scale(mpq(1, k))
            acc = acc + term
        return acc

    def log1p(self) -> "Series":
        """log(1 + self)."""
        self._check_no_constant()
        acc = Series([], self.N)
        term = Series.one(self.N)
        for k in range(1, self.N + 1):
            term = term * self
            acc = acc + term.scale(mpq((-1) ** (k + 1), k))
        return acc

    def binomial_power(self, alpha) -> "Series":
        """(1 + self)^alpha as a binomial series."""
        self._check_no_constant()
        acc = Series.one(self.N)
        term = Series.one(self.N)
        coef = mpq(1)
        for k in range(1, self.N + 1):
            coef = coef * (mpq(alpha) - (k - 1)) / k
            term = term * self
            acc = acc + term.scale(coef)
        return acc

    def log(self) -> "Series":
        return (self - Series.one(self.N)).log1p()

    def inverse(self) -> "Series":
        return (self - Series.one(self.N)).binomial_power(-1)

    def inverse_sqrt(self) -> "Series":
        return (self - Series.one(self.N)).binomial_power(mpq(-1, 2))


def sigma_series(N: int, barred: bool = False) -> Series:
    """sigma_1 = sum_n S_n (or the barred version)."""
    sgn = -1 if barred else 1
    return Series([one()] + [S(sgn * n) for n in range(1, N + 1)], N)


def _exp_homogeneous(x: Elem, k: int, N: int) -> Series:
    comps = [zero() for _ in range(N + 1)]
    comps[0] = one()
    if x and k:
        p = one()
        for j in range(1, N // k + 1):
            p = p * x
            comps[j * k] = p.scale(mpq(1, factorial(j)))
    return Series(comps, N)


def _truncated_product(factors: Iterable[Series], N: int) -> Series:
    acc = Series.one(N)
    for f in factors:
        acc = acc * f
    return acc


PATTERNS = ("descending", "head-descending", "ascending-head-descending", "symmetric",
            "grouplike-head")


def factorization_product(xs: Sequence[Elem], pattern: str, N: int, r: int | None = None,
                          known: Series | None = None) -> Series:
    """Evaluate a factorisation pattern on homogeneous unknowns xs[1..N].

    descending:                  e^{x_N} ... e^{x_2} e^{x_1}
    head-descending:             (1 + sum_p x_{pr}) * descending product over r not dividing i
    ascending-head-descending:   e^{x_r} e^{x_2r} ... * descending product over r not dividing i
    symmetric:                   (e^{x_1} e^{x_2} ...)(... e^{x_2} e^{x_1})
    grouplike-head:              (1 + sum_m x_m) * known
    """
    def expo(k):
        return _exp_homogeneous(xs[k], k, N)

    if pattern == "descending":
        return _truncated_product((expo(k) for k in range(N, 0, -1)), N)
    if pattern == "head-descending":
        head = Series([one()] + [xs[k] if k % r == 0 else zero() for k in range(1, N + 1)], N)
        tail = _truncated_product((expo(k) for k in range(N, 0, -1) if k % r), N)
        return head * tail
    if pattern == "ascending-head-descending":
        head = _truncated_product((expo(k) for k in range(1, N + 1) if k % r == 0), N)
        tail = _truncated_product((expo(k) for k in range(N, 0, -1) if k % r), N)
        return head * tail
    if pattern == "symmetric":
        up = _truncated_product((expo(k) for k in range(1, N + 1)), N)
        down = _truncated_product((expo(k) for k in range(N, 0, -1)), N)
        return up * down
    if pattern == "grouplike-head":
        head = Series([one()] + [xs[k] for k in range(1, N + 1)], N)
        return head * known
    raise ValueError(f"unknown factorisation pattern {pattern!r}")


def solve_factorization(target: Series, pattern: str, N: int, r: int | None = None,
                        known: Series | None = None) -> list[Elem]:
    """Solve target = pattern(x_1, x_2, ...) degree by degree.

    At degree n the unknown x_n enters linearly with coefficient 2 in
    the symmetric pattern and 1 otherwise, so x_n is the degree-n
    defect of the product computed with x_n = 0, divided by that
    coefficient.  Returns [0, x_1, ..., x_N].
    """
    if pattern not in PATTERNS:
        raise ValueError(f"unknown factorisation pattern {pattern!r}")
    if pattern in ("head-descending", "ascending-head-descending") and not r:
        raise ValueError("this pattern needs the level r")
    if pattern == "grouplike-head" and known is None:
        raise ValueError("grouplike-head needs the known right factor")
    lead = 2 if pattern == "symmetric" else 1
    xs = [zero() for _ in range(N + 1)]
    for n in range(1, N + 1):
        trial = factorization_product(xs, pattern, n, r, known)
        defect = target[n] - trial[n]
        xs[n] = defect.scale(mpq(1, lead))
    return xs


# ---------------------------------------------------------------------------
# type A primitive generators and idempotents


@lru_cache(maxsize=None)
def _zassenhaus(N: int) -> tuple:
    return tuple(solve_factorization(sigma_series(N), "descending", N))


def zassenhaus_zetas(N: int) -> list[Elem]:
    """[0, zeta_1, ..., zeta_N] with sigma_1 = ... e^{zeta_2} e^{zeta_1}."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    # reuse the largest table computed so far
    return list(_zassenhaus(N))


def zeta_word(zetas: Sequence[Elem], word: Sequence[int]) -> Elem:
    out = one()
    for k in word:
        out = out * zetas[k]
    return out


def typeA_idempotents(n: int, route: str = "both") -> dict[tuple, Elem]:
    """Orthogonal idempotents e_lambda of Sym_n indexed by partitions.

    route "closed" uses zeta^lambda / m_lambda, route "recursion" uses
    e_lambda = (1/m_lambda) S^lambda * (S_n - sum_{mu < lambda} e_mu)
    in the canonical partition order; "both" computes both and checks
    they agree.
    """
    from .combitypes import order_index

    if n < 1:
        raise ValueError("n must be positive")
    order = order_index(n, "A")
    closed = recursion = None
    if route in ("closed", "both"):
        z = zassenhaus_zetas(n)
        closed = {lam: zeta_word(z, lam).scale(mpq(1, multiplicity_factor(lam))) for lam in order}
    if route in ("recursion", "both"):
        recursion = {}
        remainder = S(n)
        for lam in order:
            e = internal_product(S(*lam), remainder).scale(mpq(1, multiplicity_factor(lam)))
            recursion[lam] = e
            remainder = remainder - e
    if route == "both":
        for lam in order:
            if closed[lam] != recursion[lam]:
                raise AssertionError(f"idempotent routes disagree at {lam}")
        return closed
    if closed is None and recursion is None:
        raise ValueError(f"unknown route {route!r}")
    return closed if closed is not None else recursion


def idempotent_basis(n: int) -> dict[tuple, Elem]:
    """e_I = zeta^I / m_I for all compositions I of n."""
    z = zassenhaus_zetas(n)
    return {I: zeta_word(z, I).scale(mpq(1, multiplicity_factor(I))) for I in compositions(n)}


def gamma(K: Sequence[int]) -> Elem:
    """Gamma_K = sum over rearrangements J of K of e_J."""
    from .combitypes import rearrangements

    n = sum(K)
    basis = idempotent_basis(n)
    out = zero()
    for J in rearrangements(K):
        out = out + basis[J]
    return out
