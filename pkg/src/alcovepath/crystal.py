"""Root operators on admissible subsets and the resulting crystal graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .admissible import Positions, admissible_positions, sigma_and_levels, weight_of
from .chains import LambdaChain
from .rootsys import Weight


class InternalInvariant(RuntimeError):
    pass


class IsoFailure(RuntimeError):
    pass


def lower(chain: LambdaChain, J: Sequence[int], p: int) -> Positions | None:
    """``F_p(J)``, or None where it is undefined (``M(J,p) = 0``)."""
    J = tuple(J)
    sig = sigma_and_levels(chain, J, p)
    M = sig.M
    if M <= 0:
        return None
    idx = sig.indices
    hits = [c for c, lv in enumerate(sig.levels) if lv == M]
    if hits:
        c = hits[0]
        if c == 0:
            raise InternalInvariant(f"F_{p}: no predecessor for m={idx[0]} in {J}")
        m, k = idx[c], idx[c - 1]
    else:
        if not idx:
            raise InternalInvariant(f"F_{p}: M={M} attained only at infinity but I(J,p) is empty")
        m, k = None, idx[-1]
    out = set(J)
    if m is not None:
        if m not in out:
            raise InternalInvariant(f"F_{p}: m={m} not in {J}")
        out.discard(m)
    if k in out:
        raise InternalInvariant(f"F_{p}: k={k} already in {J}")
    out.add(k)
    return tuple(sorted(out))


def raise_(chain: LambdaChain, J: Sequence[int], p: int) -> Positions | None:
    """``E_p(J)``, or None where it is undefined (``M(J,p) <= <mu(J), alpha_p^vee>``)."""
    J = tuple(J)
    sig = sigma_and_levels(chain, J, p)
    M = sig.M
    if M <= sig.l_inf:
        return None
    idx = sig.indices
    hits = [c for c, lv in enumerate(sig.levels) if lv == M]
    if not hits:
        raise InternalInvariant(f"E_{p}: level {M} not attained inside I(J,p) for {J}")
    c = hits[-1]
    k = idx[c]
    m = idx[c + 1] if c + 1 < len(idx) else None
    out = set(J)
    if k not in out:
        raise InternalInvariant(f"E_{p}: k={k} not in {J}")
    out.discard(k)
    if m is not None:
        if m in out:
            raise InternalInvariant(f"E_{p}: m={m} already in {J}")
        out.add(m)
    return tuple(sorted(out))


def string_lengths(chain: LambdaChain, J: Sequence[int], p: int) -> tuple[int, int]:
    """Number of consecutive defined ``E_p`` and ``F_p`` applications starting at ``J``."""
    up = down = 0
    cur = tuple(J)
    while (cur := raise_(chain, cur, p)) is not None:
        up += 1
    cur = tuple(J)
    while (cur := lower(chain, cur, p)) is not None:
        down += 1
    return up, down


def weyl_action(chain: LambdaChain, J: Sequence[int], p: int) -> Positions:
    """``s_p(J) = F_p^k(J)`` with ``k = <mu(J), alpha_p^vee>``; negative ``k`` means ``E_p^{-k}``."""
    J = tuple(J)
    k = weight_of(chain, J)[p]
    op = lower if k >= 0 else raise_
    cur: Positions | None = J
    for _ in range(abs(k)):
        cur = op(chain, cur, p)
        if cur is None:
            raise InternalInvariant(f"s_{p}: string through {J} too short for exponent {k}")
    return cur


@dataclass
class CrystalGraph:
    chain: LambdaChain
    nodes: list[Positions]
    edges: list[tuple[Positions, int, Positions]]
    weights: dict[Positions, Weight] = field(default_factory=dict)

    @property
    def source(self) -> Positions:
        return ()

    def sources(self) -> list[Positions]:
        targets = {t for _, _, t in self.edges}
        return [J for J in self.nodes if J not in targets]

    def sinks(self) -> list[Positions]:
        heads = {s for s, _, _ in self.edges}
        return [J for J in self.nodes if J not in heads]

    def successors(self, J: Positions) -> dict[int, Positions]:
        return {p: t for s, p, t in self.edges if s == J}

    def reachable(self, start: Positions) -> set[Positions]:
        adj: dict[Positions, list[Positions]] = {}
        for s, _, t in self.edges:
            adj.setdefault(s, []).append(t)
        seen = {start}
        queue = deque([start])
        while queue:
            for t in adj.get(queue.popleft(), ()):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen

    def to_json(self) -> dict:
        rs = self.chain.rs
        return {
            "type": rs.name,
            "lambda": list(self.chain.lam),
            "head_len": self.chain.head_len,
            "nodes": [{"positions": list(J), "weight": list(self.weights[J])} for J in self.nodes],
            "edges": [{"source": list(s), "color": p + 1, "target": list(t)} for s, p, t in self.edges],
        }

    def to_dot(self) -> str:
        ids = {J: f"n{i}" for i, J in enumerate(self.nodes)}
        lines = ["digraph crystal {"]
        for J in self.nodes:
            label = "{" + ",".join(str(j + 1) for j in J) + "} " + str(tuple(self.weights[J]))
            lines.append(f'  {ids[J]} [label="{label}"];')
        for s, p, t in self.edges:
            lines.append(f'  {ids[s]} -> {ids[t]} [label="{p + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(chain: LambdaChain) -> CrystalGraph:
    nodes = list(admissible_positions(chain))
    edges = []
    for J in nodes:
        for p in range(chain.rs.rank):
            t = lower(chain, J, p)
            if t is not None:
                edges.append((J, p, t))
    return CrystalGraph(chain, nodes, edges, {J: weight_of(chain, J) for J in nodes})


def raising_path(chain: LambdaChain, J: Sequence[int]) -> list[int]:
    """Colours used when raising ``J`` to the source, always by the smallest defined colour."""
    cur = tuple(J)
    path = []
    while cur:
        for p in range(chain.rs.rank):
            nxt = raise_(chain, cur, p)
            if nxt is not None:
                path.append(p)
                cur = nxt
                break
        else:
            raise IsoFailure(f"{cur} has no defined raising operator but is not the source")
    return path


def canonical_iso(a: LambdaChain, b: LambdaChain) -> dict[Positions, Positions]:
    """The unique colour-preserving isomorphism between the crystals of two lambda-chains."""
    if a.lam != b.lam:
        raise ValueError("chains for different weights")
    out = {}
    for J in admissible_positions(a):
        cur: Positions | None = ()
        for p in reversed(raising_path(a, J)):
            cur = lower(b, cur, p)
            if cur is None:
                raise IsoFailure(f"lowering path of {J} is undefined in the target chain")
        out[J] = cur
    if len(set(out.values())) != len(out):
        raise IsoFailure("canonical map is not injective")
    return out
