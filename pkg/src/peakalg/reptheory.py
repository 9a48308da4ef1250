"""Radicals, Loewy layers, q-Cartan matrices and quivers.

An algebra model is a finite dimensional algebra given by labelled basis
vectors, a product on basis elements returning sparse vectors, and a
commutative image used to find the radical.  Cartan entries are
graded by the radical filtration of the projective modules
P_mu = A * e_mu:

    c_{lambda mu}(t) = sum_k (dim e_lambda J^k e_mu - dim e_lambda J^(k+1) e_mu) t^k
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

from .combitypes import (Headed, cartan_order, compositions, cycle_transform, multiplicity_factor,
                         order_index, rearrangements, render_label, rpeak_compositions)
from .exactmath import SparseEchelon, is_zero

__all__ = [
    "TPoly", "AlgebraModel", "CartanMatrix", "sym_model", "peak_model", "radical",
    "loewy", "q_cartan", "quiver", "conjecture_cartan", "cartan_restriction_check",
    "typeA_cartan_claim", "loewy_length",
]


# ---------------------------------------------------------------------------
# polynomials in the Loewy variable


class TPoly:
    """Polynomial with integer coefficients in the layer variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | Sequence[int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {int(k): int(v) for k, v in coeffs.items() if v}

    @staticmethod
    def monomial(k: int, c: int = 1) -> "TPoly":
        return TPoly({k: c})

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TPoly(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly(other)
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def is_homogeneous(self) -> bool:
        return len(self.coeffs) <= 1

    def render(self, var: str = "q", braces: bool = True) -> str:
        """Text form used by the golden tables, e.g. ``q^{3}+2q^{2}``; zero is ``.``."""
        if not self.coeffs:
            return "."
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{{{k}}}" if braces else f"{var}^{k}"
            coef = "" if (c == 1 and mono) else ("-" if (c == -1 and mono) else str(c))
            parts.append(coef + mono)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    @staticmethod
    def parse(text: str, var: str = "q") -> "TPoly":
        text = text.replace(" ", "").replace("\\!", "")
        if text == ".":
            return TPoly()
        out: dict = defaultdict(int)
        for term in text.replace("-", "+-").split("+"):
            if not term:
                continue
            if var in term:
                coef, _, power = term.partition(var)
                c = -1 if coef == "-" else (int(coef) if coef else 1)
                k = int(power.strip("^{}")) if power else 1
            else:
                c, k = int(term), 0
            out[k] += c
        return TPoly(out)

    def __repr__(self):
        return f"TPoly({self.render('t', braces=False)!r})"

    __str__ = lambda self: self.render("t", braces=False)


# ---------------------------------------------------------------------------
# algebra models


def _acc(out: dict, key, val):
    v = out.get(key, 0) + val
    if is_zero(v):
        out.pop(key, None)
    else:
        out[key] = v


@dataclass
class AlgebraModel:
    """Finite dimensional algebra with a labelled basis.

    ``product(a, b)`` returns the product of basis elements as a sparse
    vector over ``labels``; ``comm_image(a)`` returns the commutative
    image of a basis element; ``idempotents`` maps partition labels to
    sparse vectors, listed in the canonical order.
    """

    name: str
    labels: list
    product: Callable[[object, object], dict]
    comm_image: Callable[[object], dict]
    idempotents: dict
    n: int = 0
    kind: str | int = "A"
    _rad: list | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                cab = ca * cb
                for k, v in self.product(a, b).items():
                    _acc(out, k, cab * v)
        return out

    def check_closure(self) -> bool:
        labels = set(self.labels)
        return all(k in labels for a in self.labels for b in self.labels
                   for k in self.product(a, b))

    def radical(self) -> list[dict]:
        if self._rad is None:
            self._rad = radical(self)
        return self._rad


def sym_model(n: int) -> AlgebraModel:
    """The descent algebra Sym_n in the basis of Zassenhaus words."""
    from .zetaengine import engine

    eng = engine(n, None)
    idem = {lam: {lam: mpq(1, multiplicity_factor(lam))} for lam in order_index(n, "A")}
    return AlgebraModel(f"Sym_{n}", list(compositions(n)), eng.product,
                        eng.commutative_image, idem, n, "A")


def peak_model(n: int, r: int) -> AlgebraModel:
    """The level-r peak algebra in weight n, in the basis of level-r zeta-words
    indexed by r-peak compositions; labels are ``Headed`` pairs."""
    from .zetaengine import engine

    eng = engine(n, r)

    def product(a: Headed, b: Headed) -> dict:
        return {_headed(W, r): c for W, c in eng.product(a.word(), b.word()).items()}

    def comm(a: Headed) -> dict:
        return eng.commutative_image(a.word())

    idem = {lam: {lam: mpq(1, multiplicity_factor(lam.tail))} for lam in order_index(n, r)}
    return AlgebraModel(f"P^({r})_{n}", list(rpeak_compositions(n, r)), product, comm, idem, n, r)


def _headed(W: tuple, r: int):
    if W and W[0] % r == 0:
        return Headed(W[0], W[1:])
    return Headed(0, W)


# ---------------------------------------------------------------------------
# radical and Loewy layers


def radical(model: AlgebraModel) -> list[dict]:
    """Basis of the kernel of the commutative image inside the model.

    Each kernel vector is a basis element minus its expression through
    earlier basis elements with independent images, so it is sparse
    when many basis elements share an image.
    """
    ech = SparseEchelon(track=True)
    added: list = []
    out = []
    for lab in model.labels:
        img = model.comm_image(lab)
        coords = ech.express(img)
        if coords is None:
            ech.add(img)
            added.append(lab)
            continue
        vec = {lab: mpq(1)}
        for idx, c in coords.items():
            _acc(vec, added[idx], -c)
        out.append(vec)
        # keep the add-counter aligned with `added`
    return out


def _span(vectors: Iterable[dict]) -> list[dict]:
    ech = SparseEchelon()
    for v in vectors:
        if v:
            ech.add(v)
    return ech.basis()


def loewy(model: AlgebraModel, rad: list[dict] | None = None) -> list[list[dict]]:
    """Bases of J^0 = A, J^1 = rad, J^2, ... down to (excluding) 0."""
    rad = model.radical() if rad is None else rad
    layers = [[{lab: mpq(1)} for lab in model.labels]]
    cur = _span(rad)
    while cur:
        layers.append(cur)
        cur = _span(model.mul(x, j) for x in cur for j in rad)
    return layers


def loewy_length(model: AlgebraModel) -> int:
    """Number of nonzero radical powers J^0, J^1, ..."""
    return len(loewy(model))


# ---------------------------------------------------------------------------
# Cartan matrices


class CartanMatrix:
    """Matrix of layer polynomials; rows are simple modules, columns projectives."""

    def __init__(self, labels: Sequence, entries: dict, name: str = ""):
        self.labels = list(labels)
        self.entries = {(a, b): entries.get((a, b), TPoly()) for a in self.labels for b in self.labels}
        self.name = name

    def __getitem__(self, key) -> TPoly:
        return self.entries[key]

    def __eq__(self, other):
        return (isinstance(other, CartanMatrix) and self.labels == other.labels
                and self.entries == other.entries)

    def rows(self) -> list[list[TPoly]]:
        return [[self.entries[(a, b)] for b in self.labels] for a in self.labels]

    def transpose(self) -> "CartanMatrix":
        return CartanMatrix(self.labels, {(b, a): v for (a, b), v in self.entries.items()}, self.name)

    def relabel(self, mapping: Callable) -> "CartanMatrix":
        return CartanMatrix([mapping(x) for x in self.labels],
                            {(mapping(a), mapping(b)): v for (a, b), v in self.entries.items()},
                            self.name)

    def restrict(self, labels: Sequence) -> "CartanMatrix":
        labels = [x for x in self.labels if x in set(labels)]
        return CartanMatrix(labels, {(a, b): self.entries[(a, b)] for a in labels for b in labels},
                            self.name)

    def at_one(self) -> list[list[int]]:
        return [[p.at_one() for p in row] for row in self.rows()]

    def max_degree(self) -> int:
        return max((p.degree() for p in self.entries.values()), default=-1)

    def to_text(self, var: str = "q") -> str:
        lines = ["labels " + " ".join(render_label(x) for x in self.labels)]
        for row in self.rows():
            lines.append(" ".join(p.render(var) for p in row))
        return "\n".join(lines) + "\n"

    def to_latex(self, var: str = "q") -> str:
        cols = "c" * len(self.labels)
        body = " \\\\\n".join(" & ".join(p.render(var) for p in row) for row in self.rows())
        return f"\\left(\\begin{{array}}{{{cols}}}\n{body}\n\\end{{array}}\\right)\n"

    def to_json(self) -> dict:
        return {"name": self.name, "labels": [render_label(x) for x in self.labels],
                "rows": [[p.render("t", braces=False) for p in row] for row in self.rows()]}

    def __str__(self):
        return self.to_text("t")


def _projective_layers(model: AlgebraModel, e_mu: dict, rad: list[dict]) -> list[list[dict]]:
    """Bases of J^k * e_mu for k = 0, 1, ... (nonzero ones)."""
    layers = []
    cur = _span(model.mul({lab: mpq(1)}, e_mu) for lab in model.labels)
    while cur:
        layers.append(cur)
        cur = _span(model.mul(j, v) for v in cur for j in rad)
    return layers


def q_cartan(model: AlgebraModel, idempotents: dict | None = None,
             labels: Sequence | None = None) -> CartanMatrix:
    """q-Cartan matrix; rows and columns in ``labels`` (default ``cartan_order``)."""
    idem = model.idempotents if idempotents is None else idempotents
    order = list(idem)
    rad = model.radical()
    entries = {}
    for mu in order:
        layers = _projective_layers(model, idem[mu], rad)
        for lam in order:
            dims = [len(_span(model.mul(idem[lam], v) for v in layer)) for layer in layers]
            dims.append(0)
            poly = {k: dims[k] - dims[k + 1] for k in range(len(layers))}
            entries[(lam, mu)] = TPoly(poly)
    if labels is None:
        labels = cartan_order(model.n, model.kind)
    return CartanMatrix(labels, entries, model.name)


def quiver(C: CartanMatrix) -> dict[tuple, int]:
    """Arrows mu -> lambda with multiplicity the linear coefficient of C[lambda, mu]."""
    out = {}
    for (lam, mu), p in C.entries.items():
        if lam != mu and p[1]:
            out[(mu, lam)] = p[1]
    return out


def typeA_cartan_claim(n: int) -> CartanMatrix:
    """Matrix whose (lambda, mu) entry is t^(l(lambda)-l(mu)) when lambda refines mu, else 0."""
    from .combitypes import refines

    order = order_index(n, "A")
    entries = {}
    for lam in order:
        for mu in order:
            if refines(lam, mu):
                entries[(lam, mu)] = TPoly.monomial(len(lam) - len(mu))
    return CartanMatrix(cartan_order(n, "A"), entries, f"claim_{n}")


@lru_cache(maxsize=None)
def _conjecture(n: int, r: int, graded: bool) -> CartanMatrix:
    order = order_index(n, r)
    counts: dict = defaultdict(lambda: defaultdict(int))
    for mu in order:
        for word in rearrangements(mu.tail):
            nu_bar = cycle_transform(word, r)
            nu = Headed(n - sum(nu_bar), nu_bar)
            k = (len(mu.tail) - len(nu_bar)) // 2 if graded else 0
            counts[(nu, mu)][k] += 1
    entries = {key: TPoly(dict(v)) for key, v in counts.items()}
    return CartanMatrix(cartan_order(n, r), entries, f"conjecture_{n}_{r}")


def conjecture_cartan(n: int, r: int, graded: bool = False) -> CartanMatrix:
    """Combinatorial Cartan matrix from cycle sums of standardised rearrangements.

    With ``graded`` (meaningful for r = 2) the entry records the layer
    (l(mu-bar) - l(nu-bar)) / 2 of each contribution.
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    return _conjecture(n, r, graded)


def cartan_restriction_check(n: int) -> bool:
    """The level-2 peak algebra's q-Cartan matrix equals the hyperoctahedral one
    restricted to 2-peak partitions (even head, odd tail parts)."""
    from .mrbsym import bsym_model

    big = q_cartan(bsym_model(n))
    small = q_cartan(peak_model(n, 2))
    restricted = big.restrict(small.labels)
    if restricted.labels != small.labels or restricted.entries != small.entries:
        raise AssertionError(f"Cartan restriction fails at n={n}")
    return True
