"""Exact arithmetic: rationals, cyclotomic fields and linear algebra.

Rationals are ``gmpy2.mpq`` values.  Elements of the cyclotomic field
Q(w), w a primitive r-th root of unity, are stored as coefficient vectors
in the power basis 1, w, ..., w^(phi(r)-1) reduced modulo the cyclotomic
polynomial.  For r = 1, 2 the field is Q itself and plain rationals are
used throughout.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from gmpy2 import mpq

Rational = type(mpq(0))

__all__ = [
    "Rational", "QQ", "Cyclo", "cyclotomic_polynomial", "cyclo_reduce",
    "cyclo_gen", "field_inverse", "field_name", "rref", "rank",
    "span_membership", "intersection", "nullspace", "SparseEchelon",
    "modular_rank", "to_modp", "primitive_root_mod", "format_coeff",
    "parse_coeff", "is_zero",
]


def QQ(num, den=1) -> Rational:
    """Build an exact rational from ints, strings or other rationals."""
    if isinstance(num, str):
        return mpq(num)
    return mpq(num, den) if den != 1 else mpq(num)


# ---------------------------------------------------------------------------
# polynomials over Q, coefficient lists low degree first


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [mpq(x) for x in a]
    b = _trim([mpq(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [mpq(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
    return _trim(q), a


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [mpq(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the r-th cyclotomic polynomial."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    num = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _reduction_table(r: int) -> tuple[tuple[Rational, ...], ...]:
    # row k holds w^k written in the power basis, for 0 <= k <= 2 phi - 2
    phi_poly = cyclotomic_polynomial(r)
    phi = len(phi_poly) - 1
    rows = []
    cur = [mpq(0)] * phi
    cur[0] = mpq(1)
    for _ in range(max(2 * phi - 1, 1)):
        rows.append(tuple(cur))
        top = cur[-1]
        nxt = [mpq(0)] + cur[:-1]
        if top:
            for i in range(phi):
                nxt[i] -= top * phi_poly[i]
        cur = nxt
    return tuple(rows)


def cyclo_reduce(poly: Sequence, r: int):
    """Reduce a polynomial in w modulo the r-th cyclotomic polynomial.

    Returns a rational when the result lies in Q, otherwise a ``Cyclo``.
    """
    phi = len(cyclotomic_polynomial(r)) - 1
    _, rem = _poly_divmod(list(poly) or [0], cyclotomic_polynomial(r))
    rem = rem + [mpq(0)] * (phi - len(rem))
    return Cyclo._make(r, tuple(rem))


class Cyclo:
    """Element of Q(w) for a primitive r-th root of unity w (phi(r) >= 2)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        phi = len(cyclotomic_polynomial(order)) - 1
        cs = [mpq(c) for c in coeffs]
        if len(cs) > phi:
            red = cyclo_reduce(cs, order)
            cs = list(red.coeffs) if isinstance(red, Cyclo) else [red] + [mpq(0)] * (phi - 1)
        self.order = order
        self.coeffs = tuple(cs + [mpq(0)] * (phi - len(cs)))

    @staticmethod
    def _make(order, coeffs):
        if len(coeffs) <= 1 or not any(coeffs[1:]):
            return coeffs[0] if coeffs else mpq(0)
        obj = object.__new__(Cyclo)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    # arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise ValueError("mixing different cyclotomic fields")
            return other.coeffs
        if isinstance(other, (int, Rational)):
            return (mpq(other),) + (mpq(0),) * (len(self.coeffs) - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._make(self.order, tuple(a + b for a, b in zip(self.coeffs, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._make(self.order, tuple(a - b for a, b in zip(self.coeffs, o)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._make(self.order, tuple(b - a for a, b in zip(self.coeffs, o)))

    def __neg__(self):
        return Cyclo._make(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return mpq(0)
            return Cyclo._make(self.order, tuple(a * other for a in self.coeffs))
        if not isinstance(other, Cyclo):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("mixing different cyclotomic fields")
        table = _reduction_table(self.order)
        phi = len(self.coeffs)
        acc = [mpq(0)] * phi
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                ab = a * b
                row = table[i + j]
                for k in range(phi):
                    if row[k]:
                        acc[k] += ab * row[k]
        return Cyclo._make(self.order, tuple(acc))

    __rmul__ = __mul__

    def inverse(self):
        return field_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return Cyclo._make(self.order, tuple(a / other for a in self.coeffs))
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self * field_inverse(other)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        return field_inverse(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return field_inverse(self) ** (-k)
        result = mpq(1)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def galois(self, k: int):
        """Image under the automorphism w -> w^k (k coprime to the order)."""
        poly = [mpq(0)] * (k * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * k] += c
        return cyclo_reduce(poly, self.order)

    def __repr__(self):
        return f"Cyclo({self.order}, {format_coeff(self)!r})"

    def __str__(self):
        return format_coeff(self)


def cyclo_gen(r: int):
    """The generator w of Q(w); a rational when r <= 2."""
    if r == 1:
        return mpq(1)
    if r == 2:
        return mpq(-1)
    return Cyclo._make(r, (mpq(0), mpq(1)) + (mpq(0),) * (len(cyclotomic_polynomial(r)) - 3))


def field_name(r: int | None) -> str:
    return "QQ" if r is None or r <= 2 else f"QQ(zeta_{r})"


def field_inverse(x):
    """Multiplicative inverse in Q or Q(w); raises ZeroDivisionError on zero."""
    if isinstance(x, (int, Rational)):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(x)
    # extended Euclid in Q[w]: find s with s*a = 1 mod Phi_r
    r = x.order
    a, b = _trim(list(x.coeffs)), [mpq(c) for c in cyclotomic_polynomial(r)]
    s0, s1 = [mpq(1)], []
    while b:
        q, rem = _poly_divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # a is a nonzero constant now
    c = a[0]
    return cyclo_reduce([s / c for s in s0], r)


def is_zero(x) -> bool:
    return not x


# ---------------------------------------------------------------------------
# coefficient text format


def _fmt_rat(c) -> str:
    c = mpq(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_coeff(c, var: str = "q") -> str:
    """Render a field element, e.g. ``-1/8`` or ``1/2 + q^2``."""
    if not isinstance(c, Cyclo):
        return _fmt_rat(c)
    parts = []
    for k, a in enumerate(c.coeffs):
        if not a:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            s = _fmt_rat(a)
        elif a == 1:
            s = mono
        elif a == -1:
            s = "-" + mono
        else:
            s = f"{_fmt_rat(a)}*{mono}"
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def parse_coeff(text: str, r: int | None = None, var: str = "q"):
    """Inverse of ``format_coeff``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty coefficient")
    terms = []
    buf = ""
    for i, ch in enumerate(text):
        if ch in "+-" and i > 0 and text[i - 1] not in "^*/":
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    poly: dict[int, Rational] = {}
    for t in terms:
        t = t.lstrip("+")
        if var in t:
            coef_txt, _, mono = t.partition(var)
            coef_txt = coef_txt.rstrip("*")
            k = int(mono[1:]) if mono.startswith("^") else 1
            if coef_txt == "":
                coef = mpq(1)
            elif coef_txt == "-":
                coef = mpq(-1)
            else:
                coef = mpq(coef_txt)
        else:
            k, coef = 0, mpq(t)
        poly[k] = poly.get(k, mpq(0)) + coef
    if set(poly) == {0} or r is None or r <= 2:
        if r is not None and r <= 2:
            w = cyclo_gen(r)
            return sum((c * w ** k for k, c in poly.items()), mpq(0))
        if set(poly) != {0}:
            raise ValueError(f"coefficient {text!r} needs a cyclotomic field")
        return poly[0]
    dense = [mpq(0)] * (max(poly) + 1)
    for k, c in poly.items():
        dense[k] = c
    return cyclo_reduce(dense, r)


# ---------------------------------------------------------------------------
# dense linear algebra over Q or Q(w)


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        sel = None
        for i in range(prow, len(m)):
            if not is_zero(m[i][col]):
                sel = i
                break
        if sel is None:
            continue
        m[prow], m[sel] = m[sel], m[prow]
        inv = field_inverse(m[prow][col])
        m[prow] = [x * inv if not is_zero(x) else x for x in m[prow]]
        piv = m[prow]
        for i in range(len(m)):
            if i != prow:
                f = m[i][col]
                if not is_zero(f):
                    m[i] = [a - f * b if not is_zero(b) else a for a, b in zip(m[i], piv)]
        pivots.append(col)
        prow += 1
        if prow == len(m):
            break
    return m[:prow], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def span_membership(vec: Sequence, rows: Sequence[Sequence]):
    """Coefficients c with sum c_i rows_i == vec, or None if vec is not in the span."""
    if not rows:
        return [] if all(is_zero(x) for x in vec) else None
    # solve transpose system by reducing [rows^T | vec]
    n = len(rows)
    aug = [[rows[i][j] for i in range(n)] + [vec[j]] for j in range(len(vec))]
    red, piv = rref(aug)
    if n in piv:
        return None
    sol = [mpq(0)] * n
    for row, p in zip(red, piv):
        sol[p] = row[n]
    return sol


def nullspace(rows: Sequence[Sequence]) -> list[list]:
    """Basis of {x : rows @ x == 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [mpq(0)] * ncols
        v[f] = mpq(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def intersection(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Basis of the intersection of the row spaces of a and b."""
    if not a or not b:
        return []
    # x a = y b  <=>  (x, -y) in left kernel of [a; b]
    stacked = [list(r) for r in a] + [[-x for x in r] for r in b]
    cols = list(map(list, zip(*stacked)))
    ker = nullspace(cols)
    out = []
    for k in ker:
        v = [mpq(0)] * len(a[0])
        for coef, row in zip(k[: len(a)], a):
            if not is_zero(coef):
                v = [x + coef * y for x, y in zip(v, row)]
        out.append(v)
    red, _ = rref(out)
    return red


# ---------------------------------------------------------------------------
# sparse incremental echelon form over dict vectors


class SparseEchelon:
    """Incrementally grown echelon basis of dict-vectors.

    ``add`` reduces a vector against the stored rows and keeps the
    remainder (normalised at its smallest key under ``key``) if nonzero.
    With ``track=True`` every stored row remembers its expression in
    terms of the vectors passed to ``add``, so ``express`` can recover
    coordinates in that generating set.
    """

    def __init__(self, key=None, track: bool = False):
        self.key = key
        self.track = track
        self.rows: list[tuple[object, dict, dict | None]] = []
        self._count = 0

    def __len__(self):
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict | None):
        v = dict(vec)
        for piv, row, rc in self.rows:
            c = v.get(piv)
            if c is None:
                continue
            for k, x in row.items():
                nv = v.get(k, 0) - c * x
                if is_zero(nv):
                    v.pop(k, None)
                else:
                    v[k] = nv
            if combo is not None:
                for k, x in rc.items():
                    nv = combo.get(k, 0) - c * x
                    if is_zero(nv):
                        combo.pop(k, None)
                    else:
                        combo[k] = nv
        return v, combo

    def reduce(self, vec: dict) -> dict:
        return self._reduce(vec, None)[0]

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        idx = self._count
        self._count += 1
        combo = {idx: mpq(1)} if self.track else None
        v, combo = self._reduce(vec, combo)
        if not v:
            return False
        piv = min(v, key=self.key) if self.key else min(v)
        inv = field_inverse(v[piv])
        row = {k: x * inv for k, x in v.items()}
        if combo is not None:
            combo = {k: x * inv for k, x in combo.items()}
        self.rows.append((piv, row, combo))
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def express(self, vec: dict) -> dict | None:
        """Coordinates of vec in the added vectors (tracking mode), or None."""
        if not self.track:
            raise ValueError("express() needs track=True")
        combo: dict = {}
        v = dict(vec)
        for piv, row, rc in self.rows:
            c = v.get(piv)
            if c is None:
                continue
            for k, x in row.items():
                nv = v.get(k, 0) - c * x
                if is_zero(nv):
                    v.pop(k, None)
                else:
                    v[k] = nv
            for k, x in rc.items():
                nv = combo.get(k, 0) + c * x
                if is_zero(nv):
                    combo.pop(k, None)
                else:
                    combo[k] = nv
        return None if v else combo

    def basis(self) -> list[dict]:
        return [row for _, row, _ in self.rows]


# ---------------------------------------------------------------------------
# modular rank, used as a certified lower bound for ranks over Q(w)


def primitive_root_mod(r: int, p: int, which: int = 1) -> int:
    """A primitive r-th root of unity modulo the prime p (requires r | p-1).

    ``which`` selects the power of a fixed primitive root, so different
    values give different embeddings of Q(w) into F_p.
    """
    if (p - 1) % r:
        raise ValueError("r must divide p - 1")
    for g in range(2, p):
        # g generates F_p^* when g^((p-1)/l) != 1 for all prime l | p-1
        m, ok, f = p - 1, True, 2
        while f * f <= m:
            if m % f == 0:
                if pow(g, (p - 1) // f, p) == 1:
                    ok = False
                    break
                while m % f == 0:
                    m //= f
            f += 1
        if ok and m > 1 and pow(g, (p - 1) // m, p) == 1:
            ok = False
        if ok:
            return pow(g, (p - 1) // r * which, p)
    raise ValueError("no primitive root found")


def to_modp(x, p: int, root: int) -> int:
    """Image of a field element under w -> root in F_p."""
    if isinstance(x, Cyclo):
        acc = 0
        for k, c in enumerate(x.coeffs):
            if c:
                acc += to_modp(c, p, root) * pow(root, k, p)
        return acc % p
    x = mpq(x)
    den = int(x.denominator)
    if den % p == 0:
        raise ZeroDivisionError("denominator divisible by the chosen prime")
    return int(x.numerator) * pow(den, -1, p) % p


def modular_rank(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over F_p (p < 2^31)."""
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    rk = 0
    for col in range(ncols):
        nz = np.nonzero(a[rk:, col])[0]
        if nz.size == 0:
            continue
        sel = rk + nz[0]
        if sel != rk:
            a[[rk, sel]] = a[[sel, rk]]
        inv = pow(int(a[rk, col]), -1, p)
        a[rk] = a[rk] * inv % p
        f = a[:, col].copy()
        f[rk] = 0
        nzr = np.nonzero(f)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(f[nzr], a[rk]) % p) % p
        rk += 1
        if rk == nrows:
            break
    return rk
