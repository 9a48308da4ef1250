"""Reference data shipped with the package.

* ``C_<n>_<r>.txt``: q-Cartan matrices of the level-r peak algebras, in
  matrix notation (dots for zeros, powers of q).
* ``expansions.tex``: displayed expansions of zeta elements and of S_n,
  as LaTeX, parsed here into coefficient dictionaries over monomials.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

from gmpy2 import mpq

from .combitypes import Headed, parse_label
from .reptheory import CartanMatrix, TPoly

__all__ = [
    "GOLDEN_CELLS", "golden_cells", "load_golden", "parse_golden", "load_expansions",
    "parse_expansion", "expansion_keys", "compare_cartan", "check_expansion",
]

GOLDEN_CELLS = tuple((n, r) for r in range(2, 9) for n in range(r, 10 if r == 2 else 9))


def golden_cells(max_n: int | None = None, rs=None) -> list[tuple[int, int]]:
    return [(n, r) for n, r in GOLDEN_CELLS
            if (max_n is None or n <= max_n) and (rs is None or r in rs)]


def _data_text(name: str) -> str:
    return resources.files("peakalg").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def parse_golden(text: str, name: str = "") -> CartanMatrix:
    """Parse the ``labels ...`` line followed by one row of entries per label."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not rows or rows[0][0] != "labels":
        raise ValueError("golden table must start with a labels line")
    # labels are "head;tail" tokens, where an empty tail leaves "4;"
    labels = [parse_label(tok) for tok in rows[0][1:]]
    body = rows[1:]
    if len(body) != len(labels) or any(len(row) != len(labels) for row in body):
        raise ValueError(f"golden table {name!r} is not square")
    entries = {(a, b): TPoly.parse(tok) for a, row in zip(labels, body)
               for b, tok in zip(labels, row)}
    return CartanMatrix(labels, entries, name)


@lru_cache(maxsize=None)
def load_golden(n: int, r: int) -> CartanMatrix:
    return parse_golden(_data_text(f"C_{n}_{r}.txt"), f"C_{n}^({r})")


def compare_cartan(computed: CartanMatrix, golden: CartanMatrix) -> dict:
    """Compare two matrices; reports the orientation that matched and the first difference."""
    out = {"match": computed == golden, "orientation": None, "first_diff": None}
    if out["match"]:
        out["orientation"] = "rows=simples"
        return out
    if computed.transpose() == golden:
        out["orientation"] = "transposed"
        return out
    if computed.labels != golden.labels:
        out["first_diff"] = {"labels": [str(x) for x in computed.labels],
                             "expected_labels": [str(x) for x in golden.labels]}
        return out
    for a in golden.labels:
        for b in golden.labels:
            if computed[(a, b)] != golden[(a, b)]:
                out["first_diff"] = {"row": str(a), "col": str(b),
                                     "computed": computed[(a, b)].render(),
                                     "expected": golden[(a, b)].render()}
                return out
    return out


# ---------------------------------------------------------------------------
# LaTeX expansions
#
# A monomial is a tuple of letters (symbol, index) with symbol one of
#   "S"      S_n, or a part of S^{IJK}
#   "Ssharp" S^sharp_n, or a part of S^{IJK sharp}
#   "zeta"   zeta_n, zeta_n^{(r)}
#   "ztilde" tilde zeta_n

_NOISE = re.compile(r"\\(?:quad|qquad|notag|left|right)\b|\\\\|\\[\s,;!]|&")
_TOKEN = re.compile(r"""
    (?P<sign>[+-])
  | \\frac\s*(?:\{(?P<fn>\d+)\}|(?P<fn1>\d))\s*(?:\{(?P<fd>\d+)\}|(?P<fd1>\d))
  | (?P<int>\d+)
  | (?P<tz>\\tilde\s*\\zeta)
  | (?P<z>\\zeta)
  | (?P<S>S)
  | (?P<sub>_\s*(?:\{\s*(?P<subv>\d+)\s*\}|(?P<subd>\d)))
  | (?P<sup>\^\s*(?:\{(?P<supv>[^}]*)\}|(?P<supd>\d)|(?P<supsharp>\\sharp)))
  | (?P<end>[.,;])
""", re.VERBOSE)


def _tokens(text: str):
    text = _NOISE.sub(" ", text)
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse LaTeX near {text[pos:pos + 20]!r}")
        yield m
        pos = m.end()


class _Factor:
    def __init__(self, kind: str):
        self.kind = kind
        self.index: int | None = None
        self.parts: tuple | None = None
        self.sharp = False
        self.power = 1

    def letters(self) -> tuple:
        if self.kind == "S":
            sym = "Ssharp" if self.sharp else "S"
            parts = self.parts if self.parts is not None else (self.index,)
            if None in parts:
                raise ValueError("S without index")
            return tuple((sym, p) for p in parts) * self.power
        if self.index is None:
            raise ValueError(f"{self.kind} without index")
        return ((self.kind, self.index),) * self.power


def parse_expansion(text: str) -> dict[tuple, mpq]:
    """Parse a signed sum of coefficient * product-of-letters into {monomial: coefficient}.

    Accepts S_n, S_{n}, S^{211}, S^\\sharp_n, S_n^\\sharp, S^{11\\sharp},
    \\zeta_k, \\zeta_k^p, \\zeta_k^{(r)}, \\tilde\\zeta_k, \\frac ab, \\frac{a}{b},
    integer coefficients, and a subscript digit written without the
    underscore directly after \\zeta (``\\zeta1``).
    """
    out: dict = {}
    sign, coeff, factors = 1, None, []

    def flush():
        nonlocal sign, coeff, factors
        if not factors and coeff is None:
            return
        mono = tuple(letter for f in factors for letter in f.letters())
        c = sign * (coeff if coeff is not None else mpq(1))
        out[mono] = out.get(mono, mpq(0)) + c
        if not out[mono]:
            del out[mono]
        sign, coeff, factors = 1, None, []

    text = re.sub(r"\\zeta(\d)", r"\\zeta_\1", text)
    for m in _tokens(text):
        kind = m.lastgroup
        if m.group("sign"):
            flush()
            sign = -1 if m.group("sign") == "-" else 1
        elif m.group("fn") or m.group("fn1"):
            num = int(m.group("fn") or m.group("fn1"))
            den = int(m.group("fd") or m.group("fd1"))
            coeff = (coeff or mpq(1)) * mpq(num, den)
        elif m.group("int"):
            if factors:
                raise ValueError("stray integer after a factor")
            coeff = (coeff or mpq(1)) * int(m.group("int"))
        elif m.group("tz"):
            factors.append(_Factor("ztilde"))
        elif m.group("z"):
            factors.append(_Factor("zeta"))
        elif m.group("S"):
            factors.append(_Factor("S"))
        elif m.group("sub"):
            factors[-1].index = int(m.group("subv") or m.group("subd"))
        elif m.group("sup"):
            f = factors[-1]
            if m.group("supsharp"):
                f.sharp = True
            elif m.group("supd"):
                f.power = int(m.group("supd"))
            else:
                body = m.group("supv").replace(" ", "")
                if body.startswith("(") and body.endswith(")"):
                    continue  # level marker zeta^{(r)}
                if body.endswith("\\sharp"):
                    f.sharp = True
                    body = body[: -len("\\sharp")]
                if f.kind == "S":
                    f.parts = tuple(int(ch) for ch in body)
                else:
                    f.power = int(body)
        elif kind == "end":
            continue
    flush()
    return out


@lru_cache(maxsize=None)
def load_expansions() -> dict[str, str]:
    """Map key (e.g. ``A.zeta.4``) to its LaTeX body."""
    out: dict[str, str] = {}
    key = None
    for line in _data_text("expansions.tex").splitlines():
        if line.startswith("#"):
            continue
        m = re.fullmatch(r"\[([\w.]+)\]", line.strip())
        if m:
            key = m.group(1)
            out[key] = ""
        elif key is not None:
            out[key] += line + "\n"
    return out


def expansion_keys() -> list[str]:
    return list(load_expansions())


def _computed_expansion(key: str) -> dict[tuple, mpq]:
    """Our expansion of the object named by key, as {monomial: coefficient}."""
    from .mrbsym import bsym_space, solve_bsym_zetas
    from .peakcore import level_zetas
    from .symcore import zassenhaus_zetas
    from .zetaengine import engine

    family, obj, k = key.split(".")
    k = int(k)
    if family == "A" and obj == "zeta":
        return {tuple(("S", p) for p in I): c for I, c in zassenhaus_zetas(k)[k].terms.items()}
    if family == "A" and obj == "S":
        return {tuple(("zeta", w) for w in W): c for W, c in engine(k).s_to_zeta((k,)).items()}
    if family.startswith("level") and obj == "zeta":
        r = int(family[len("level"):])
        return {tuple(("S", p) for p in I): c for I, c in level_zetas(k, r)[k].terms.items()}
    if family == "B" and obj in ("zeta", "ztilde"):
        zetas, tildes = solve_bsym_zetas(k)
        elem = (zetas if obj == "zeta" else tildes)[k]
        out = {}
        for K, c in bsym_space(k).coordinates(elem).items():
            out[(("S", K.head),) * bool(K.head) + tuple(("Ssharp", p) for p in K.tail)] = c
        return out
    raise KeyError(f"no monomial-level comparison for {key}")


def _evaluate(mono_dict: dict, k: int):
    """Evaluate a {monomial: coeff} dictionary in the Mantaci-Reutenauer algebra."""
    from .mrbsym import sharp_letter, solve_bsym_zetas
    from .symcore import S, one, zero

    zetas, tildes = solve_bsym_zetas(k)
    letter = {"S": S, "Ssharp": sharp_letter,
              "zeta": lambda i: zetas[i], "ztilde": lambda i: tildes[i]}
    out = zero()
    for mono, c in mono_dict.items():
        term = one()
        for sym, i in mono:
            term = term * letter[sym](i)
        out = out + term.scale(c)
    return out


def check_expansion(key: str) -> dict:
    """Compare a displayed expansion with ours.

    Keys with a monomial basis on our side (zeta elements, S_n in
    zeta-words) are compared term for term; the BSym identities for
    S_n and S_n^sharp in zeta and tilde-zeta are compared as elements.
    """
    from .mrbsym import sharp_letter
    from .symcore import S

    expected = parse_expansion(load_expansions()[key])
    family, obj, k = key.split(".")
    if family == "B" and obj in ("S", "Ssharp"):
        lhs = S(int(k)) if obj == "S" else sharp_letter(int(k))
        ok = _evaluate(expected, int(k)) == lhs
        return {"key": key, "mode": "value", "match": ok, "terms": len(expected)}
    computed = _computed_expansion(key)
    diff = sorted(({"monomial": _render_mono(m), "expected": str(expected.get(m, 0)),
                    "computed": str(computed.get(m, 0))}
                   for m in set(expected) | set(computed)
                   if expected.get(m, 0) != computed.get(m, 0)),
                  key=lambda d: d["monomial"])
    return {"key": key, "mode": "terms", "match": not diff, "terms": len(expected),
            "first_diff": diff[0] if diff else None}


def _render_mono(mono: tuple) -> str:
    names = {"S": "S", "Ssharp": "S#", "zeta": "z", "ztilde": "z~"}
    return "".join(f"{names[s]}{i}" for s, i in mono)
