"""Concrete models of the level-r peak algebras.

The peak algebra P^(r)_n is defined as the span over Q(w) of the
elements S_{i0} theta(S^J), i0 + |J| = n.  Representation theory runs in
the rational basis of level-r zeta-words indexed by r-peak compositions,
so before using it we check that the two spans coincide:

* containment: every generator, written in zeta-words, only involves
  r-peak words;
* equality of dimension: the generators have full rank.  Over F_p with
  p = 1 (mod r) the rank can only drop, so a full modular rank certifies
  the rank over Q(w).  Small weights are also checked by exact
  elimination over Q(w) in the S basis, where every r-peak zeta-word
  must lie in the generator span.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .combitypes import Headed, b_compositions, rpeak_compositions
from .exactmath import SparseEchelon, is_zero, modular_rank, primitive_root_mod, to_modp
from .peakcore import level_zetas, rpeak_generator, theta_kernel
from .reptheory import AlgebraModel, peak_model
from .symcore import zeta_word

__all__ = ["PeakAlgebraModel", "PeakAlgebraError", "build_peak_algebra", "generator_zeta_coordinates",
           "EXACT_LIMIT", "MODULAR_PRIMES"]

# largest weight for the exact elimination over Q(w) in the S basis
EXACT_LIMIT = 5
# candidate primes; the first one with p = 1 (mod r) is used
MODULAR_PRIMES = (1000003, 1000033, 1000037, 1000039, 1000081, 1000099, 1000117,
                  1000121, 1000133, 1000151, 1000159, 1000171, 1000183, 1000187,
                  1000193, 1000199, 1000211, 1000213, 1000231, 1000249, 1000253,
                  1000273, 1000289, 1000291, 1000303, 1000313, 1000333, 1000357,
                  1000381, 1000393, 1000397, 1000403, 1000409, 1000423, 1000427,
                  1000429, 1000453, 1000457, 1000507, 1000537, 1000541)


class PeakAlgebraError(AssertionError):
    pass


def _concat(x: dict, y: dict) -> dict:
    out: dict = {}
    for U, a in x.items():
        for W, b in y.items():
            key = U + W
            v = out.get(key, 0) + a * b
            if is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v
    return out


def generator_zeta_coordinates(n: int, r: int, power: int = 1) -> dict[Headed, dict]:
    """S_{i0} theta(S^J) in level-r zeta-words, for every B-composition (i0; J) of n.

    Products in Sym are concatenations of zeta-words, so only S_i and
    the kernels K_j need converting.
    """
    from .zetaengine import engine

    eng = engine(n, r)
    kern = {j: eng.elem_to_zeta(theta_kernel(j, r, power)) for j in range(1, n + 1)}
    out = {}
    for K in b_compositions(n):
        vec = eng.s_to_zeta((K.head,)) if K.head else {(): 1}
        for j in K.tail:
            vec = _concat(vec, kern[j])
        out[K] = vec
    return out


def _prime_for(r: int) -> int:
    for p in MODULAR_PRIMES:
        if (p - 1) % r == 0:
            return p
    raise ValueError(f"no prime = 1 mod {r} in the candidate list")


@dataclass
class PeakAlgebraModel:
    """P^(r)_n with its verification record.

    ``algebra`` is the rational zeta-word model used for representation
    theory; ``checks`` records which verifications ran and their outcome.
    """

    n: int
    r: int
    labels: list
    algebra: AlgebraModel
    checks: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.labels)


def _check_containment(gens: dict, r: int) -> bool:
    for vec in gens.values():
        for W in vec:
            if not _is_rpeak_word(W, r):
                return False
    return True


def _is_rpeak_word(W: tuple, r: int) -> bool:
    start = 1 if W and W[0] % r == 0 else 0
    return all(w % r for w in W[start:])


def _modular_check(gens: dict, labels: list, r: int) -> int:
    # coefficients already carry the chosen power of w, so a single embedding suffices
    p = _prime_for(r)
    root = primitive_root_mod(r, p)
    index = {lab.word(): i for i, lab in enumerate(labels)}
    matrix = []
    for vec in gens.values():
        row = [0] * len(labels)
        for W, c in vec.items():
            row[index[W]] = to_modp(c, p, root)
        matrix.append(row)
    return modular_rank(matrix, p)


def _exact_check(n: int, r: int, labels: list, power: int) -> bool:
    """Every r-peak zeta-word lies in the span of the generators (S basis, over Q(w))."""
    ech = SparseEchelon()
    for K in b_compositions(n):
        ech.add(rpeak_generator(K, r, power).terms)
    if len(ech) != len(labels):
        return False
    z = level_zetas(n, r)
    return all(ech.contains(zeta_word(z, lab.word()).terms) for lab in labels)


@lru_cache(maxsize=None)
def build_peak_algebra(n: int, r: int, power: int = 1, exact_limit: int = EXACT_LIMIT,
                       closure: bool = True) -> PeakAlgebraModel:
    """Build P^(r)_n and verify that the zeta-word basis spans the theta-generated space.

    ``power`` selects the primitive root w^power.  Raises PeakAlgebraError
    when containment, dimension or closure fails.
    """
    if n < 1 or r < 2:
        raise ValueError("need n >= 1 and r >= 2")
    labels = list(rpeak_compositions(n, r))
    gens = generator_zeta_coordinates(n, r, power)
    checks = {"containment": _check_containment(gens, r)}
    if not checks["containment"]:
        raise PeakAlgebraError(f"generators leave the r-peak zeta-words (n={n}, r={r})")
    checks["modular_rank"] = _modular_check(gens, labels, r)
    if checks["modular_rank"] != len(labels):
        raise PeakAlgebraError(f"generator rank {checks['modular_rank']} != {len(labels)}")
    if n <= exact_limit:
        checks["exact"] = _exact_check(n, r, labels, power)
        if not checks["exact"]:
            raise PeakAlgebraError(f"exact span comparison failed (n={n}, r={r})")
    algebra = peak_model(n, r)
    if closure:
        checks["closure"] = algebra.check_closure()
        if not checks["closure"]:
            raise PeakAlgebraError(f"zeta-word basis not closed (n={n}, r={r})")
    return PeakAlgebraModel(n, r, labels, algebra, checks)
