"""Yang-Baxter moves: the bijection between admissible subsets of two lambda-chains
that differ by reversing one rank-two window."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .admissible import Positions, admissible_positions, is_admissible, weyl_of
from .chains import LambdaChain, YbWindow, apply_segment_reversal, connect_chains, dihedral_order
from .rootsys import Root, RootSystem, WeylElement


class PatternMismatch(ValueError):
    pass


class NotComparable(ValueError):
    pass


class UniquenessViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class DihedralContext:
    """Rank-two reflection subgroup with simple roots ``alpha``, ``beta`` and reflection
    ordering ``order[0] = alpha, ..., order[q-1] = beta``."""

    rs: RootSystem
    alpha: Root
    beta: Root
    q: int

    @classmethod
    def from_window(cls, rs: RootSystem, window: YbWindow) -> DihedralContext:
        return cls(rs, window.alpha, window.beta, window.q)

    @cached_property
    def order(self) -> tuple[Root, ...]:
        seq = dihedral_order(self.rs, self.alpha, self.beta, self.q)
        if seq is None:
            raise ValueError(f"{self.alpha}, {self.beta} do not span a rank-two system with q={self.q}")
        return tuple(seq)

    @cached_property
    def s_alpha(self) -> WeylElement:
        return self.rs.reflection(self.alpha)

    @cached_property
    def s_beta(self) -> WeylElement:
        return self.rs.reflection(self.beta)

    @cached_property
    def elements(self) -> tuple[WeylElement, ...]:
        out = {self.rs.identity}
        for first in (self.s_alpha, self.s_beta):
            other = self.s_beta if first is self.s_alpha else self.s_alpha
            v = self.rs.identity
            for k in range(self.q):
                v = v * (first if k % 2 == 0 else other)
                out.add(v)
        if len(out) != 2 * self.q:
            raise ValueError(f"dihedral group has {len(out)} elements, expected {2 * self.q}")
        return tuple(out)

    def length(self, v: WeylElement) -> int:
        """Length in the dihedral group: number of its positive roots sent negative."""
        return sum(1 for g in self.order if self.rs.act_on_root(v, g).sign < 0)

    def has_descent(self, v: WeylElement, delta: Root) -> bool:
        return self.rs.act_on_root(v, delta).sign < 0

    def word(self, v: WeylElement) -> tuple[str, ...]:
        """Alternating normal form of ``v`` in letters ``'a'`` and ``'b'``."""
        ell = self.length(v)
        if ell == 0:
            return ()
        last = "a" if self.has_descent(v, self.alpha) else "b"
        letters = []
        cur = last
        for _ in range(ell):
            letters.append(cur)
            cur = "b" if cur == "a" else "a"
        return tuple(reversed(letters))


def dihedral_coset_split(w: WeylElement, ctx: DihedralContext) -> tuple[WeylElement, WeylElement, int]:
    """``w = floor(w) * wbar`` with ``floor(w)`` of minimal length in ``w Wbar``."""
    rs = ctx.rs
    floor_w = min((w * v for v in ctx.elements), key=rs.length)
    wbar = rs.inverse(floor_w) * w
    return floor_w, wbar, ctx.length(wbar)


def dihedral_chain_subset(ubar: WeylElement, wbar: WeylElement, ctx: DihedralContext) -> tuple[tuple[int, ...], str]:
    """Local 1-based positions of the unique increasing chain from ``ubar`` to ``wbar``
    with labels taken in reflection order, together with the case label."""
    q = ctx.q
    a, b = ctx.length(ubar), ctx.length(wbar)
    if a == b:
        if ubar != wbar:
            raise NotComparable("distinct dihedral elements of equal length")
        return (), "0"
    if a > b:
        raise NotComparable(f"length {a} exceeds {b}")
    u_up_a = not ctx.has_descent(ubar, ctx.alpha)  # ubar in W_alpha
    u_up_b = not ctx.has_descent(ubar, ctx.beta)
    w_up_a = not ctx.has_descent(wbar, ctx.alpha)
    w_up_b = not ctx.has_descent(wbar, ctx.beta)
    if b - a == 1:
        if u_up_a and not w_up_a:
            return (1,), "1.1"
        if not u_up_b and w_up_a:
            return (q - a,), "1.2"
        if u_up_b and not w_up_b:
            return (q,), "1.3"
        if not u_up_a and w_up_b:
            return (a + 1,), "1.4"
    elif a == 0 and b == q:
        return tuple(range(1, q + 1)), "3"
    else:
        if u_up_a and w_up_b:
            return (1,) + tuple(range(a + 2, b + 1)), "2.1"
        if not u_up_b and not w_up_b:
            return (1,) + tuple(range(a + 2, b)) + (q,), "2.2"
        if u_up_b and w_up_a:
            return tuple(range(a + 1, b)) + (q,), "2.3"
        if not u_up_a and not w_up_a:
            return tuple(range(a + 1, b + 1)), "2.4"
    raise NotComparable(f"no case applies for lengths ({a}, {b})")


def _table_rows(q: int, a: int, b: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rows = []
    if a == b:
        rows.append(((), ()))
    if b == a + 1 and 0 <= a <= q - 1:
        rows.append(((1,), (q,)))
    if b == a + 1 and 0 < a < q - 1:
        rows.append(((q - a,), (a + 1,)))
    if 0 <= a and a + 2 <= b < q:
        rows.append(((1,) + tuple(range(a + 2, b + 1)), tuple(range(a + 1, b)) + (q,)))
    if 0 < a and a + 2 <= b <= q:
        rows.append(((1,) + tuple(range(a + 2, b)) + (q,), tuple(range(a + 1, b + 1))))
    if a == 0 and b == q:
        rows.append((tuple(range(1, q + 1)), tuple(range(1, q + 1))))
    return rows


def yb_local_involution(q: int, a: int, b: int, S: Sequence[int]) -> tuple[int, ...]:
    """The involution exchanging the reflection-order chain with the reversed-order chain."""
    S = tuple(sorted(S))
    partners = set()
    for left, right in _table_rows(q, a, b):
        if S == left:
            partners.add(right)
        if S == right:
            partners.add(left)
    if len(partners) != 1:
        raise PatternMismatch(f"{S} matches {len(partners)} table rows for q={q}, a={a}, b={b}")
    return partners.pop()


@dataclass(frozen=True)
class MoveRecord:
    before: Positions
    inside: tuple[int, ...]
    case: str
    a: int
    b: int
    result: Positions


def _split(J: Sequence[int], window: YbWindow) -> tuple[Positions, tuple[int, ...], Positions]:
    t, q = window.offset, window.q
    before = tuple(j for j in J if j < t)
    inside = tuple(j - t + 1 for j in J if t <= j < t + q)
    after = tuple(j for j in J if j >= t + q)
    return before, inside, after


def yb_move_detail(chain: LambdaChain, window: YbWindow, J: Sequence[int]) -> MoveRecord:
    J = tuple(J)
    rs = chain.rs
    ctx = DihedralContext.from_window(rs, window)
    before, inside, after = _split(J, window)
    u = weyl_of(chain, before)
    w = weyl_of(chain, before + tuple(window.offset + i - 1 for i in inside))
    fu, ubar, a = dihedral_coset_split(u, ctx)
    fw, wbar, b = dihedral_coset_split(w, ctx)
    if fu != fw:
        raise PatternMismatch("u and w lie in different cosets of the dihedral subgroup")
    expected, case = dihedral_chain_subset(ubar, wbar, ctx)
    if expected != inside:
        raise PatternMismatch(f"window part {inside} differs from chain subset {expected} (case {case})")
    new_inside = yb_local_involution(window.q, a, b, inside)
    result = before + tuple(window.offset + i - 1 for i in new_inside) + after
    return MoveRecord(before, inside, case, a, b, result)


def yb_move(chain: LambdaChain, window: YbWindow, J: Sequence[int]) -> Positions:
    """Image of ``J`` in the chain obtained by reversing ``window``."""
    return yb_move_detail(chain, window, J).result


def yb_move_search(chain: LambdaChain, window: YbWindow, J: Sequence[int]) -> Positions:
    """Brute-force image: the unique subset of the reversed window giving the same ``w``."""
    J = tuple(J)
    reversed_chain = apply_segment_reversal(chain, window, check=False)
    before, inside, after = _split(J, window)
    w = weyl_of(chain, before + tuple(window.offset + i - 1 for i in inside))
    found = []
    slots = list(window.positions)
    for k in range(window.q + 1):
        for T in combinations(slots, k):
            K = before + T + after
            if weyl_of(reversed_chain, before + T) == w and is_admissible(reversed_chain, K):
                found.append(K)
    if len(found) != 1:
        raise UniquenessViolation(f"{len(found)} candidates for {J} in window {window}")
    return found[0]


def move_map(chain: LambdaChain, window: YbWindow) -> dict[Positions, Positions]:
    return {J: yb_move(chain, window, J) for J in admissible_positions(chain)}


def composed_bijection(
    source: LambdaChain,
    target: LambdaChain,
    moves: Sequence[YbWindow] | None = None,
    **search,
) -> dict[Positions, Positions]:
    """Composite of Yang-Baxter moves along a path of segment reversals."""
    if moves is None:
        moves = connect_chains(source, target, **search)
    mapping = {J: J for J in admissible_positions(source)}
    chain = source
    for window in moves:
        step = move_map(chain, window)
        mapping = {J: step[K] for J, K in mapping.items()}
        chain = apply_segment_reversal(chain, window, check=False)
    if chain.roots != target.roots:
        raise ValueError("moves do not lead to the target chain")
    return mapping


def reflection_permutation(ctx: DihedralContext, i: int) -> list[int]:
    """Signed 1-based images of ``beta_1..beta_q`` under ``s_{beta_i}``."""
    order = ctx.order
    out = []
    for g in order:
        img = ctx.rs.reflect_root(g, order[i - 1])
        out.append(img.sign * (order.index(abs(img)) + 1))
    return out


def reflection_permutation_formula(q: int, i: int) -> list[int]:
    out = []
    for j in range(1, q + 1):
        if 2 * i <= q + 1:
            out.append(-(2 * i - j) if j < 2 * i else q + 2 * i - j)
        else:
            out.append(-(2 * i - j) if j >= 2 * i - q else 2 * i - q - j)
    return out
