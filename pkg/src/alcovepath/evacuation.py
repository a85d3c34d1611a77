"""Chain reversal of admissible subsets and the evacuation involution ``J -> J*``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .admissible import Positions, admissible_positions, keys_of, weight_of
from .chains import LambdaChain, NotSpecialForm, YbWindow, apply_segment_reversal, connect_chains, reverse_chain
from .crystal import lower, raise_
from .rootsys import WeylElement
from .ybmoves import yb_move


class NoChain(RuntimeError):
    pass


class MultipleChains(RuntimeError):
    pass


class ConflictingAssignment(RuntimeError):
    pass


def _head(chain: LambdaChain) -> int:
    q = chain.head_len
    if q is None:
        raise NotSpecialForm("chain is not in special form")
    return q


def unique_increasing_head_chain(chain: LambdaChain, target: WeylElement) -> Positions:
    """The unique head subset whose reflections give a saturated chain from 1 to ``target``."""
    rs = chain.rs
    q = _head(chain)
    goal = rs.length(target)
    found: list[Positions] = []

    def grow(prefix: Positions, w: WeylElement) -> None:
        if rs.length(w) == goal:
            if w == target:
                found.append(prefix)
            return
        start = prefix[-1] + 1 if prefix else 0
        for j in range(start, q):
            if rs.is_cover(w, chain.roots[j]):
                v = w * chain.reflections[j]
                if rs.bruhat_leq(v, target):
                    grow(prefix + (j,), v)

    grow((), rs.identity)
    if not found:
        raise NoChain(f"no increasing head chain reaches the target of length {goal}")
    if len(found) > 1:
        raise MultipleChains(f"{len(found)} head chains reach the target: {found}")
    return found[0]


def reverse_subset(chain: LambdaChain, J: Sequence[int], rev: LambdaChain | None = None) -> Positions:
    """``J^rev`` as a subset of positions of ``reverse_chain(chain)``."""
    rs = chain.rs
    q = _head(chain)
    J = tuple(J)
    _, k1 = keys_of(chain, J)
    head = unique_increasing_head_chain(rev or reverse_chain(chain), rs.coset_min(rs.longest_element * k1, chain.lam))
    last = len(chain) - 1
    tail = sorted(q + (last - g) for g in J if g >= q)
    return head + tuple(tail)


def evacuation_moves(chain: LambdaChain, **search) -> list[YbWindow]:
    """Head-disjoint segment reversals leading from the reversed chain back to ``chain``."""
    return connect_chains(reverse_chain(chain), chain, head_disjoint=True, **search)


@dataclass(frozen=True)
class EvacuationReport:
    chain: LambdaChain
    J: Positions
    J_rev: Positions
    reversed_chain: LambdaChain
    moves: tuple[YbWindow, ...]
    trail: tuple[Positions, ...]
    J_star: Positions
    checks: dict[str, bool]


def evacuate(chain: LambdaChain, J: Sequence[int], moves: Sequence[YbWindow] | None = None) -> Positions:
    return evacuation_report(chain, J, moves).J_star


def evacuation_report(
    chain: LambdaChain, J: Sequence[int], moves: Sequence[YbWindow] | None = None
) -> EvacuationReport:
    rs = chain.rs
    J = tuple(J)
    rev = reverse_chain(chain)
    if moves is None:
        moves = evacuation_moves(chain)
    j_rev = reverse_subset(chain, J, rev)
    trail = [j_rev]
    cur_chain, cur = rev, j_rev
    for w in moves:
        cur = yb_move(cur_chain, w, cur)
        cur_chain = apply_segment_reversal(cur_chain, w, check=False)
        trail.append(cur)
    if cur_chain.roots != chain.roots:
        raise ValueError("moves do not lead back to the original chain")
    w0 = rs.longest_element
    k0, k1 = keys_of(chain, J)
    s0, s1 = keys_of(chain, cur)
    checks = {
        "weight": weight_of(chain, cur) == w0(weight_of(chain, J)),
        "initial_key": s0 == rs.coset_min(w0 * k1, chain.lam),
        "final_key": s1 == rs.coset_min(w0 * k0, chain.lam),
    }
    return EvacuationReport(chain, J, j_rev, rev, tuple(moves), tuple(trail), cur, checks)


def evacuation_map(chain: LambdaChain, moves: Sequence[YbWindow] | None = None) -> dict[Positions, Positions]:
    if moves is None:
        moves = evacuation_moves(chain)
    return {J: evacuate(chain, J, moves) for J in admissible_positions(chain)}


def evacuate_via_crystal(chain: LambdaChain) -> dict[Positions, Positions]:
    """The map determined by ``eta(empty) = J_min`` and ``eta(F_p J) = E_{p*}(eta J)``."""
    q = _head(chain)
    rs = chain.rs
    eta: dict[Positions, Positions] = {(): tuple(range(q))}
    queue = deque([()])
    while queue:
        J = queue.popleft()
        for p in range(rs.rank):
            K = lower(chain, J, p)
            if K is None:
                continue
            img = raise_(chain, eta[J], rs.star(p))
            if img is None:
                raise ConflictingAssignment(f"E_{rs.star(p)} undefined on the image of {J}")
            if K in eta:
                if eta[K] != img:
                    raise ConflictingAssignment(f"{K} assigned both {eta[K]} and {img}")
            else:
                eta[K] = img
                queue.append(K)
    return eta
