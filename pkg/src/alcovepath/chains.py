"""Lambda-chains of roots: construction, validation, reversal and segment moves."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .rootsys import NonDominant, Root, RootSystem, Weight, WeylElement, is_dominant

DEFAULT_BUDGET = 200_000


class NotSpecialForm(ValueError):
    pass


class InvalidWindow(ValueError):
    pass


class InvalidChain(ValueError):
    pass


class NotConnected(RuntimeError):
    def __init__(self, explored: int, budget: int):
        super().__init__(f"no move sequence found after exploring {explored} chains (budget {budget})")
        self.explored = explored
        self.budget = budget


@dataclass(frozen=True)
class LambdaChain:
    rs: RootSystem
    lam: Weight
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(b.index for b in self.roots)

    @cached_property
    def levels0(self) -> tuple[int, ...]:
        seen: dict[int, int] = {}
        out = []
        for b in self.roots:
            out.append(seen.get(b.index, 0))
            seen[b.index] = out[-1] + 1
        return tuple(out)

    @cached_property
    def head_len(self) -> int | None:
        """Number of first occurrences if they all precede the repeats, else None."""
        q = sum(1 for x in self.levels0 if x == 0)
        if all(x == 0 for x in self.levels0[:q]):
            return q
        return None

    @property
    def is_special(self) -> bool:
        return self.head_len is not None

    @cached_property
    def reflections(self) -> tuple[WeylElement, ...]:
        return tuple(self.rs.reflection(b) for b in self.roots)

    def affine_reflection(self, i: int) -> AffineReflection:
        """``r^_i = s_{beta_i, -l_i}``."""
        return AffineReflection(self.roots[i], -self.levels0[i])

    def with_roots(self, roots: Sequence[Root]) -> LambdaChain:
        return LambdaChain(self.rs, self.lam, tuple(roots))


@dataclass(frozen=True)
class AffineReflection:
    root: Root
    level: int


@dataclass(frozen=True)
class YbWindow:
    """Consecutive positions ``offset .. offset+q-1`` holding a rank-two positive system
    in reflection order ``alpha, s_alpha(beta), ..., beta``."""

    offset: int
    q: int
    alpha: Root
    beta: Root

    @property
    def positions(self) -> range:
        return range(self.offset, self.offset + self.q)


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def affine_reflect(rs: RootSystem, mu: Sequence[int], ar: AffineReflection) -> Weight:
    """``s_{alpha,k}(mu) = mu - (<mu, alpha^vee> - k) alpha``."""
    t = rs.pairing(mu, ar.root) - ar.level
    rw = rs.root_weight(ar.root)
    return tuple(x - t * y for x, y in zip(mu, rw))


def lex_lambda_chain(rs: RootSystem, lam: Sequence[int], order: Sequence[int] | None = None) -> LambdaChain:
    """The lambda-chain obtained by sorting pairs ``(alpha, k)`` by ``(k, c_1, ..., c_r) / <lam, alpha^vee>``.

    ``order`` lists the simple indices from smallest to largest (default ``0 < 1 < ...``).
    """
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong length for {rs.name}")
    if not is_dominant(lam):
        raise NonDominant(f"{lam} is not dominant")
    order = list(range(rs.rank)) if order is None else list(order)
    if sorted(order) != list(range(rs.rank)):
        raise ValueError(f"{order} is not an ordering of the simple roots")
    keyed = []
    for idx, cv in enumerate(rs.positive_coroots):
        d = rs.pairing(lam, Root(idx))
        for k in range(d):
            vec = (Fraction(k, d),) + tuple(Fraction(cv[i], d) for i in order)
            keyed.append((vec, idx))
    keyed.sort()
    for (v1, a), (v2, b) in zip(keyed, keyed[1:]):
        if v1 == v2:
            raise AssertionError(f"sort vector collision between roots {a} and {b}: {v1}")
    return LambdaChain(rs, lam, tuple(Root(idx) for _, idx in keyed))


def validate_lambda_chain(rs: RootSystem, seq: Sequence[Root], lam: Sequence[int]) -> Validation:
    """Check the occurrence-count condition and the coroot-triple interleaving condition."""
    lam = tuple(lam)
    counts = [0] * rs.n_pos
    for b in seq:
        if b.sign < 0:
            return Validation(False, f"negative root {rs.root_coords(b)} in chain")
        counts[b.index] += 1
    for idx in range(rs.n_pos):
        want = rs.pairing(lam, Root(idx))
        if counts[idx] != want:
            return Validation(
                False,
                f"R1: root {rs.positive_roots[idx]} occurs {counts[idx]} times, expected {want}",
            )
    for a, b, c in rs.coroot_sum_triples():
        sub = [x.index for x in seq if x.index in (a, b, c)]
        good = len(sub) % 2 == 0 and all(
            sub[2 * i] in (a, b) and sub[2 * i + 1] == c for i in range(len(sub) // 2)
        )
        if not good:
            names = [rs.positive_roots[x] for x in (a, b, c)]
            return Validation(False, f"R2: triple {names} subsequence is not a concatenation of pairs")
    return Validation(True)


def check_chain(chain: LambdaChain) -> LambdaChain:
    v = validate_lambda_chain(chain.rs, chain.roots, chain.lam)
    if not v:
        raise InvalidChain(v.reason)
    return chain


def reverse_chain(chain: LambdaChain) -> LambdaChain:
    """Keep the head, replace the tail by ``w_o^lam`` applied to the reversed tail."""
    q = chain.head_len
    if q is None:
        raise NotSpecialForm("chain is not in special form")
    rs = chain.rs
    wl = rs.stab_longest(chain.lam)
    tail = [rs.act_on_root(wl, b) for b in reversed(chain.roots[q:])]
    return chain.with_roots(chain.roots[:q] + tuple(tail))


def dihedral_order(rs: RootSystem, alpha: Root, beta: Root, q: int) -> list[Root] | None:
    """The sequence ``alpha, s_alpha(beta), s_alpha s_beta(alpha), ..., beta`` if ``alpha, beta``
    are the simple roots of a rank-two positive system with exactly ``q`` roots."""
    seq = []
    for k in range(q):
        x = alpha if k % 2 == 0 else beta
        # k letters alternating s_alpha s_beta ..., rightmost applied first
        letters = [alpha if j % 2 == 0 else beta for j in range(k)]
        for g in reversed(letters):
            x = rs.reflect_root(x, g)
        if x.sign < 0:
            return None
        seq.append(x)
    if seq[-1] != beta or len(set(seq)) != q:
        return None
    members = set(seq)
    for g in (alpha, beta):
        for x in seq:
            if abs(rs.reflect_root(x, g)) not in members:
                return None
    return seq


def window_at(chain: LambdaChain, offset: int, q: int) -> YbWindow | None:
    seg = chain.roots[offset : offset + q]
    if len(seg) != q or len(set(seg)) != q:
        return None
    order = dihedral_order(chain.rs, seg[0], seg[-1], q)
    if order is None or tuple(order) != seg:
        return None
    return YbWindow(offset, q, seg[0], seg[-1])


def find_yb_windows(chain: LambdaChain, start: int = 0) -> list[YbWindow]:
    """All rank-two windows lying entirely at positions ``>= start``."""
    out = []
    for t in range(start, len(chain)):
        for q in (2, 3, 4, 6):
            w = window_at(chain, t, q)
            if w is not None:
                out.append(w)
    return out


def _reverse_segment(roots: tuple[Root, ...], w: YbWindow) -> tuple[Root, ...]:
    t, q = w.offset, w.q
    return roots[:t] + tuple(reversed(roots[t : t + q])) + roots[t + q :]


def apply_segment_reversal(chain: LambdaChain, w: YbWindow, check: bool = True) -> LambdaChain:
    if window_at(chain, w.offset, w.q) != w:
        raise InvalidWindow(f"{w} is not a window of this chain")
    out = chain.with_roots(_reverse_segment(chain.roots, w))
    if check:
        v = validate_lambda_chain(chain.rs, out.roots, chain.lam)
        if not v:
            raise InvalidWindow(f"reversal of {w} breaks the chain: {v.reason}")
    return out


def connect_chains(
    source: LambdaChain,
    target: LambdaChain,
    *,
    head_disjoint: bool = False,
    budget: int = DEFAULT_BUDGET,
    reverse_scan: bool = False,
) -> list[YbWindow]:
    """Breadth-first search for segment reversals turning ``source`` into ``target``.

    With ``head_disjoint`` only windows after the head of ``source`` are used, so
    every intermediate chain shares its head.  ``reverse_scan`` explores windows
    right-to-left, which usually yields a different shortest path.
    """
    if source.lam != target.lam or source.rs != target.rs:
        raise ValueError("chains belong to different weights or root systems")
    start = 0
    if head_disjoint:
        if source.head_len is None:
            raise NotSpecialForm("head-disjoint search needs a special-form chain")
        start = source.head_len
        if source.roots[:start] != target.roots[:start]:
            raise NotConnected(0, budget)
    goal = target.roots
    parent: dict[tuple[Root, ...], tuple[tuple[Root, ...], YbWindow] | None] = {source.roots: None}
    queue = deque([source.roots])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            moves = []
            node = cur
            while parent[node] is not None:
                prev, w = parent[node]
                moves.append(w)
                node = prev
            return moves[::-1]
        wins = find_yb_windows(source.with_roots(cur), start)
        if reverse_scan:
            wins.reverse()
        for w in wins:
            nxt = _reverse_segment(cur, w)
            if nxt not in parent:
                if len(parent) >= budget:
                    raise NotConnected(len(parent), budget)
                parent[nxt] = (cur, w)
                queue.append(nxt)
    raise NotConnected(len(parent), budget)


def replay_moves(chain: LambdaChain, moves: Sequence[YbWindow], check: bool = False) -> list[LambdaChain]:
    """Chains visited when applying ``moves`` in order (including the start)."""
    out = [chain]
    for w in moves:
        chain = apply_segment_reversal(chain, w, check=check)
        out.append(chain)
    return out


def reachable_chains(chain: LambdaChain, budget: int = DEFAULT_BUDGET) -> list[LambdaChain]:
    """All chains obtained from ``chain`` by segment reversals, in breadth-first order."""
    seen = {chain.roots}
    order = [chain.roots]
    queue = deque([chain.roots])
    while queue:
        cur = queue.popleft()
        for w in find_yb_windows(chain.with_roots(cur)):
            nxt = _reverse_segment(cur, w)
            if nxt not in seen:
                if len(seen) >= budget:
                    raise NotConnected(len(seen), budget)
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return [chain.with_roots(r) for r in order]
