"""Compositions, partitions and their headed variants.

A composition is a tuple of positive ints.  Signed compositions (labels
of the hyperoctahedral descent algebra) use negative ints for barred
parts.  Headed labels ``Headed(head, tail)`` cover both B-compositions
(head >= 0, any tail) and r-peak compositions (head a multiple of r,
tail parts not divisible by r).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Headed", "compositions", "partitions", "rearrangements", "multiplicity_factor",
    "refines", "b_refines", "coarsenings", "b_compositions", "b_partitions",
    "rpeak_compositions", "rpeak_partitions", "is_rpeak", "partition_key",
    "order_index", "table_key", "cartan_order", "standardize", "cycle_transform", "render_label",
    "parse_label", "render_composition", "parse_composition",
]


class Headed(NamedTuple):
    head: int
    tail: tuple

    @property
    def weight(self) -> int:
        return self.head + sum(self.tail)

    def word(self) -> tuple:
        """The plain composition obtained by dropping a zero head."""
        return ((self.head,) if self.head else ()) + tuple(self.tail)

    def sorted(self) -> "Headed":
        return Headed(self.head, tuple(sorted(self.tail, reverse=True)))

    def __str__(self):
        return render_label(self)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All compositions of n, sorted by length then lexicographically."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    for mask in range(1 << (n - 1)):
        parts, cur = [], 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(tuple(parts))
    out.sort(key=lambda c: (len(c), c))
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n as decreasing tuples."""
    if n == 0:
        return ((),)
    largest = n if largest is None else min(largest, n)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def rearrangements(parts: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct orderings of a multiset, lexicographically sorted."""
    return sorted(set(permutations(parts)))


def multiplicity_factor(parts: Sequence[int]) -> int:
    """Product of factorials of part multiplicities (m_lambda)."""
    return prod(factorial(m) for m in Counter(parts).values())


def refines(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True if the parts of lam can be grouped into blocks summing to the parts of mu."""
    if sum(lam) != sum(mu):
        raise ValueError("refinement needs partitions of equal weight")
    lam = sorted(lam, reverse=True)
    mu = sorted(mu, reverse=True)

    def place(i: int, bins: list[int]) -> bool:
        if i == len(lam):
            return all(b == 0 for b in bins)
        seen = set()
        for j, room in enumerate(bins):
            if room >= lam[i] and room not in seen:
                seen.add(room)
                bins[j] -= lam[i]
                if place(i + 1, bins):
                    bins[j] += lam[i]
                    return True
                bins[j] += lam[i]
        return False

    return place(0, list(mu))


def b_refines(lam: Headed, mu: Headed) -> bool:
    """True if the B-partition lam is finer than mu: the tail of lam can be split
    into blocks, one topping up the head lam0 to mu0 and one for each tail part of mu."""
    if lam.weight != mu.weight:
        raise ValueError("refinement needs B-partitions of equal weight")
    if lam.head > mu.head:
        return False
    parts = sorted(lam.tail, reverse=True)
    bins = [mu.head - lam.head] + list(mu.tail)

    def place(i: int) -> bool:
        if i == len(parts):
            return all(b == 0 for b in bins)
        seen = set()
        for j, room in enumerate(bins):
            if room >= parts[i] and (j == 0 or room not in seen):
                if j:
                    seen.add(room)
                bins[j] -= parts[i]
                ok = place(i + 1)
                bins[j] += parts[i]
                if ok:
                    return True
        return False

    return place(0)


def coarsenings(comp: Sequence[int]) -> list[tuple[int, ...]]:
    """Compositions obtained by adding up consecutive blocks of comp."""
    comp = tuple(comp)
    if not comp:
        return [()]
    out = []
    for mask in range(1 << (len(comp) - 1)):
        parts, cur = [], comp[0]
        for i in range(1, len(comp)):
            if mask >> (i - 1) & 1:
                parts.append(cur)
                cur = comp[i]
            else:
                cur += comp[i]
        parts.append(cur)
        out.append(tuple(parts))
    return out


@lru_cache(maxsize=None)
def b_compositions(n: int) -> tuple[Headed, ...]:
    return tuple(Headed(h, c) for h in range(n + 1) for c in compositions(n - h))


@lru_cache(maxsize=None)
def b_partitions(n: int) -> tuple[Headed, ...]:
    return tuple(Headed(h, p) for h in range(n + 1) for p in partitions(n - h))


def is_rpeak(label: Headed, r: int) -> bool:
    return label.head % r == 0 and all(t % r for t in label.tail)


@lru_cache(maxsize=None)
def rpeak_compositions(n: int, r: int) -> tuple[Headed, ...]:
    return tuple(x for x in b_compositions(n) if is_rpeak(x, r))


@lru_cache(maxsize=None)
def rpeak_partitions(n: int, r: int) -> tuple[Headed, ...]:
    return tuple(x for x in b_partitions(n) if is_rpeak(x, r))


def partition_key(label) -> tuple:
    """Sort key: decreasing length, then reverse lexicographic on the printed tuple.

    For headed labels the head counts towards the length only when it
    is nonzero and is printed first; ties left by the printed tuple
    (e.g. ``0;1,1`` against ``1;1``) go to the smaller head first.
    """
    if isinstance(label, Headed):
        printed = label.word()
        return (-len(printed), printed[::-1], label.head)
    return (-len(label), tuple(label)[::-1], 0)


@lru_cache(maxsize=None)
def order_index(n: int, kind: str | int) -> tuple:
    """Partitions of n in the canonical order used for idempotents and Cartan matrices.

    kind is ``"A"`` (partitions), ``"B"`` (B-partitions) or an int r
    (r-peak partitions).
    """
    if kind == "A":
        labels = partitions(n)
    elif kind == "B":
        labels = b_partitions(n)
    elif isinstance(kind, int) and kind >= 1:
        labels = rpeak_partitions(n, kind)
    else:
        raise ValueError(f"unknown partition kind {kind!r}")
    return tuple(sorted(labels, key=partition_key))


def table_key(label) -> tuple:
    """Sort key of the q-Cartan tables: decreasing length, then reverse
    lexicographic on all parts (head included) sorted decreasingly.

    It agrees with ``partition_key`` on plain partitions; for r-peak
    partitions it differs, e.g. 2;5 comes before 4;3.
    """
    if isinstance(label, Headed):
        merged = tuple(sorted(label.word(), reverse=True))
        return (-len(merged), merged[::-1], label.head)
    return partition_key(label)


@lru_cache(maxsize=None)
def cartan_order(n: int, kind: str | int) -> tuple:
    """Row/column order of q-Cartan matrices: the reverse of the table order
    (for "A" and "B" the reverse of ``order_index``)."""
    if isinstance(kind, int):
        return tuple(sorted(order_index(n, kind), key=table_key, reverse=True))
    return tuple(reversed(order_index(n, kind)))


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Standard permutation of a word: ties numbered left to right."""
    idx = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank_, i in enumerate(idx, start=1):
        out[i] = rank_
    return tuple(out)


def cycle_transform(word: Sequence[int], r: int) -> tuple[int, ...]:
    """Sum the word's values along the cycles of its standard permutation.

    Cycle sums divisible by r are discarded; the rest are returned as a
    decreasing tuple.
    """
    tau = standardize(word)
    seen = [False] * len(word)
    sums = []
    for start in range(len(word)):
        if seen[start]:
            continue
        total, i = 0, start
        while not seen[i]:
            seen[i] = True
            total += word[i]
            i = tau[i] - 1
        if total % r:
            sums.append(total)
    return tuple(sorted(sums, reverse=True))


# ---------------------------------------------------------------------------
# text rendering of labels


def _part(x: int) -> str:
    return f"{-x}'" if x < 0 else str(x)


def render_composition(comp: Sequence[int]) -> str:
    """``(3, 1, 1) -> "3.1.1"``; barred (negative) parts get a trailing quote."""
    return ".".join(_part(x) for x in comp) if comp else "()"


def parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("()", ""):
        return ()
    out = []
    for tok in text.split("."):
        tok = tok.strip()
        out.append(-int(tok[:-1]) if tok.endswith("'") else int(tok))
    return tuple(out)


def render_label(label) -> str:
    if isinstance(label, Headed):
        return f"{label.head};" + ",".join(str(x) for x in label.tail)
    return render_composition(label)


def parse_label(text: str):
    text = text.strip()
    if ";" in text:
        head, _, tail = text.partition(";")
        return Headed(int(head), tuple(int(t) for t in tail.split(",") if t.strip()))
    return parse_composition(text)


def iter_words(n: int, alphabet: int) -> Iterator[tuple[int, ...]]:
    """Words of length n over 1..alphabet (used by small brute-force checks)."""
    if n == 0:
        yield ()
        return
    for w in iter_words(n - 1, alphabet):
        for a in range(1, alphabet + 1):
            yield w + (a,)
