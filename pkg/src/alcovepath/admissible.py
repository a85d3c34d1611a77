"""Admissible subsets of a lambda-chain, their weights, keys and foldings.

Subsets are strictly increasing tuples of 0-based chain positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .chains import AffineReflection, LambdaChain, NotSpecialForm, affine_reflect
from .rootsys import Root, Weight, WeylElement

Positions = tuple[int, ...]


class AdmissibilityViolated(ValueError):
    pass


@dataclass(frozen=True)
class FoldedChain:
    pairs: tuple[tuple[Root, Root], ...]
    gamma_inf: Weight


@dataclass(frozen=True)
class SigmaSequence:
    indices: tuple[int, ...]
    sigma: tuple[tuple[int, int], ...]
    final_sign: int
    levels: tuple[int, ...]
    l_inf: int

    @property
    def M(self) -> int:
        return max(self.levels + (self.l_inf,))


@dataclass(frozen=True)
class AdmissibleSubset:
    chain: LambdaChain
    positions: Positions

    @cached_property
    def w(self) -> WeylElement:
        return weyl_of(self.chain, self.positions)

    @cached_property
    def mu(self) -> Weight:
        return weight_of(self.chain, self.positions)

    @cached_property
    def keys(self) -> tuple[WeylElement, WeylElement]:
        return keys_of(self.chain, self.positions)


def _normalize(J: Iterable[int]) -> Positions:
    J = tuple(sorted(J))
    if len(set(J)) != len(J):
        raise ValueError(f"repeated positions in {J}")
    return J


def weyl_of(chain: LambdaChain, J: Sequence[int]) -> WeylElement:
    """``w(J) = r_{j1} ... r_{js}``."""
    w = chain.rs.identity
    for j in J:
        w = w * chain.reflections[j]
    return w


def is_admissible(chain: LambdaChain, J: Iterable[int]) -> bool:
    J = _normalize(J)
    if any(not 0 <= j < len(chain) for j in J):
        return False
    rs = chain.rs
    w = rs.identity
    for j in J:
        if not rs.is_cover(w, chain.roots[j]):
            return False
        w = w * chain.reflections[j]
    return True


def enumerate_admissible(chain: LambdaChain) -> list[AdmissibleSubset]:
    """All admissible subsets in lexicographic order of their position tuples."""
    return [AdmissibleSubset(chain, J) for J in admissible_positions(chain)]


@lru_cache(maxsize=256)
def admissible_positions(chain: LambdaChain) -> tuple[Positions, ...]:
    rs = chain.rs
    n = len(chain)
    out: list[Positions] = []

    def grow(prefix: Positions, w: WeylElement) -> None:
        out.append(prefix)
        start = prefix[-1] + 1 if prefix else 0
        for j in range(start, n):
            if rs.is_cover(w, chain.roots[j]):
                grow(prefix + (j,), w * chain.reflections[j])

    grow((), rs.identity)
    return tuple(out)


def weight_of(chain: LambdaChain, J: Sequence[int]) -> Weight:
    """``mu(J) = -r^_{j1} ... r^_{js}(-lam)``."""
    x = tuple(-v for v in chain.lam)
    for j in reversed(J):
        x = affine_reflect(chain.rs, x, chain.affine_reflection(j))
    return tuple(-v for v in x)


def keys_of(chain: LambdaChain, J: Sequence[int]) -> tuple[WeylElement, WeylElement]:
    """Initial and final keys; the initial key uses only the head positions."""
    q = chain.head_len
    if q is None:
        raise NotSpecialForm("keys need a chain in special form")
    return weyl_of(chain, [j for j in J if j < q]), weyl_of(chain, J)


@lru_cache(maxsize=1 << 16)
def fold(chain: LambdaChain, J: Positions) -> FoldedChain:
    """Apply the folding operators for the positions of ``J`` to ``((b1,b1),...,(bn,bn), rho)``."""
    rs = chain.rs
    gam = list(chain.roots)
    gam2 = list(chain.roots)
    inf = rs.rho
    for j in reversed(J):
        t = gam[j]
        gam2[j] = -gam2[j]
        for i in range(j + 1, len(gam)):
            gam[i] = rs.reflect_root(gam[i], t)
            gam2[i] = rs.reflect_root(gam2[i], t)
        inf = rs.reflect_weight(inf, t)
    return FoldedChain(tuple(zip(gam, gam2)), inf)


def sigma_and_levels(chain: LambdaChain, J: Positions, p: int, check: bool = True) -> SigmaSequence:
    """Signs of the ``+-alpha_p`` entries of the folding and the levels read off the
    half-integer scan (values are tracked doubled, so the scan stays in integers)."""
    return _sigma(chain, tuple(J), p, check)


@lru_cache(maxsize=1 << 17)
def _sigma(chain: LambdaChain, J: Positions, p: int, check: bool) -> SigmaSequence:
    rs = chain.rs
    f = fold(chain, J)
    target = rs.simple_root(p).index
    indices = tuple(i for i, (g, _) in enumerate(f.pairs) if g.index == target)
    sigma = tuple((f.pairs[i][0].sign, f.pairs[i][1].sign) for i in indices)
    final = 1 if f.gamma_inf[p] > 0 else -1
    if check:
        after_rise = True
        for j, s in enumerate(sigma):
            if s == (-1, 1):
                raise AdmissibilityViolated(f"sign pair {s} at position {indices[j]} (p={p})")
            if after_rise and s[0] != 1:
                raise AdmissibilityViolated(f"sign pair {s} follows a rise at position {indices[j]} (p={p})")
            after_rise = s == (1, 1)
        if after_rise and final != 1:
            raise AdmissibilityViolated(f"final sign {final} follows a rise (p={p})")
    levels, l_inf = levels_from_signs(sigma, final)
    return SigmaSequence(indices, sigma, final, levels, l_inf)


def levels_from_signs(sigma: Sequence[tuple[int, int]], final: int) -> tuple[tuple[int, ...], int]:
    """Scan ``-1/2, +-1/2, ...``: the level of each pair is the running value after its
    first sign; the last value, after ``final``, is ``l_inf``."""
    twice = -1
    levels = []
    for a, b in sigma:
        twice += a
        levels.append(twice // 2)
        twice += b
    twice += final
    return tuple(levels), twice // 2
