"""Finite irreducible root systems and their Weyl groups.

Weights are integer tuples in the basis of fundamental weights.  Roots are
referenced by their index in the positive-root table together with a sign.
Weyl group elements are integer matrices acting on fundamental-weight
coordinates (column ``j`` is the image of the ``j``-th fundamental weight).

Simple roots, colours and reflections are indexed from 0 throughout the
library; user-facing formats convert to 1-based labels.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Weight = tuple[int, ...]

SUPPORTED = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "G": lambda r: r == 2,
    "F": lambda r: r == 4,
}
MAX_RANK = 8


class UnsupportedType(ValueError):
    pass


class NonDominant(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Root:
    """A root ``sign * beta_index`` where ``beta_index`` points into the positive-root table."""

    index: int
    sign: int = 1

    def __neg__(self) -> Root:
        return Root(self.index, -self.sign)

    def __abs__(self) -> Root:
        return Root(self.index, 1)

    @property
    def positive(self) -> bool:
        return self.sign > 0


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]

    def __mul__(self, other: WeylElement) -> WeylElement:
        a, b = self.matrix, other.matrix
        n = len(a)
        cols = list(zip(*b))
        return WeylElement(
            tuple(tuple(sum(a[i][k] * col[k] for k in range(n)) for col in cols) for i in range(n))
        )

    def __call__(self, weight: Sequence[int]) -> Weight:
        return tuple(sum(row[k] * weight[k] for k in range(len(row))) for row in self.matrix)

    @property
    def is_identity(self) -> bool:
        return all(
            v == (1 if i == j else 0) for i, row in enumerate(self.matrix) for j, v in enumerate(row)
        )


def cartan_matrix(type_label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``a[i][j] = <alpha_j, alpha_i^vee>`` in Bourbaki numbering."""
    r = rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if type_label in "ABC":
        for i in range(r - 2):
            link(i, i + 1)
        if r >= 2:
            if type_label == "A":
                link(r - 2, r - 1)
            elif type_label == "B":
                # alpha_r short
                link(r - 2, r - 1, -1, -2)
            else:
                link(r - 2, r - 1, -2, -1)
    elif type_label == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif type_label == "G":
        # alpha_1 short
        link(0, 1, -3, -1)
    elif type_label == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    return tuple(tuple(row) for row in a)


def parse_descriptor(text: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
    if not m:
        raise UnsupportedType(f"cannot parse root system descriptor {text!r}")
    return m.group(1).upper(), int(m.group(2))


class RootSystem:
    """Positive roots, coroots and Weyl group arithmetic for one irreducible type."""

    def __init__(self, type_label: str, rank: int):
        type_label = type_label.upper()
        check = SUPPORTED.get(type_label)
        if check is None or not check(rank) or rank > MAX_RANK:
            raise UnsupportedType(f"unsupported root system {type_label}{rank}")
        self.type_label = type_label
        self.rank = rank
        self.cartan = cartan_matrix(type_label, rank)
        self.positive_roots, self.positive_coroots = self._enumerate_roots()
        r = rank
        # root in fundamental-weight coordinates: sum_k c_k * column k of the Cartan matrix
        self.root_weights: tuple[Weight, ...] = tuple(
            tuple(sum(self.cartan[i][k] * c[k] for k in range(r)) for i in range(r))
            for c in self.positive_roots
        )
        self._lookup: dict[Weight, Root] = {}
        for idx, wt in enumerate(self.root_weights):
            self._lookup[wt] = Root(idx)
            self._lookup[tuple(-x for x in wt)] = Root(idx, -1)
        self._length_cache: dict[WeylElement, int] = {}
        self._leq_cache: dict[tuple[WeylElement, WeylElement], bool] = {}
        self._reflection_table = [
            [self._lookup[self.reflect_weight(self.root_weights[b], Root(a))] for b in range(self.n_pos)]
            for a in range(self.n_pos)
        ]

    @classmethod
    def from_descriptor(cls, text: str) -> RootSystem:
        return cls(*parse_descriptor(text))

    def __repr__(self) -> str:
        return f"RootSystem('{self.name}')"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and (self.type_label, self.rank) == (other.type_label, other.rank)

    def __hash__(self) -> int:
        return hash((self.type_label, self.rank))

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def _enumerate_roots(self) -> tuple[tuple[Weight, ...], tuple[Weight, ...]]:
        r, a = self.rank, self.cartan
        unit = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
        seen: dict[Weight, Weight] = {u: u for u in unit}
        queue = deque(unit)
        while queue:
            root = queue.popleft()
            coroot = seen[root]
            for j in range(r):
                pj = sum(a[j][k] * root[k] for k in range(r))  # <root, alpha_j^vee>
                qj = sum(a[k][j] * coroot[k] for k in range(r))  # <alpha_j, coroot>
                new_root = tuple(root[k] - (pj if k == j else 0) for k in range(r))
                if all(x >= 0 for x in new_root) and any(new_root) and new_root not in seen:
                    seen[new_root] = tuple(coroot[k] - (qj if k == j else 0) for k in range(r))
                    queue.append(new_root)
        order = sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))
        return tuple(order), tuple(seen[c] for c in order)

    # -- basic data -----------------------------------------------------------

    @property
    def n_pos(self) -> int:
        return len(self.positive_roots)

    def simple_root(self, i: int) -> Root:
        return self._lookup[tuple(self.cartan[k][i] for k in range(self.rank))]

    def simple_index(self, root: Root) -> int | None:
        """Index ``i`` with ``|root| = alpha_i``, or None."""
        c = self.positive_roots[root.index]
        if sum(c) == 1:
            return c.index(1)
        return None

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @cached_property
    def coxeter_number(self) -> int:
        return max(sum(c) for c in self.positive_coroots) + 1

    def root_weight(self, root: Root) -> Weight:
        wt = self.root_weights[root.index]
        return wt if root.sign > 0 else tuple(-x for x in wt)

    def root_coords(self, root: Root) -> Weight:
        c = self.positive_roots[root.index]
        return c if root.sign > 0 else tuple(-x for x in c)

    def root_from_coords(self, coords: Sequence[int]) -> Root:
        coords = tuple(coords)
        sign = -1 if any(x < 0 for x in coords) else 1
        key = coords if sign > 0 else tuple(-x for x in coords)
        try:
            return Root(self.positive_roots.index(key), sign)
        except ValueError:
            raise ValueError(f"{coords} is not a root of {self.name}") from None

    def root_from_weight(self, weight: Sequence[int]) -> Root:
        return self._lookup[tuple(weight)]

    def is_root_weight(self, weight: Sequence[int]) -> bool:
        return tuple(weight) in self._lookup

    def pairing(self, weight: Sequence[int], root: Root) -> int:
        """``<weight, root^vee>``."""
        cv = self.positive_coroots[root.index]
        return root.sign * sum(c * x for c, x in zip(cv, weight))

    def coroot_sum_triples(self) -> list[tuple[int, int, int]]:
        """Index triples ``(a, b, c)``, ``a < b``, of positive roots with ``c^vee = a^vee + b^vee``."""
        cor = {cv: i for i, cv in enumerate(self.positive_coroots)}
        out = []
        for a in range(self.n_pos):
            for b in range(a + 1, self.n_pos):
                s = tuple(x + y for x, y in zip(self.positive_coroots[a], self.positive_coroots[b]))
                if s in cor:
                    out.append((a, b, cor[s]))
        return out

    # -- reflections ----------------------------------------------------------

    def reflect_weight(self, weight: Sequence[int], root: Root) -> Weight:
        k = self.pairing(weight, root)
        rw = self.root_weight(root)
        return tuple(x - k * y for x, y in zip(weight, rw))

    def reflect_root(self, root: Root, by: Root) -> Root:
        """``s_by(root)``."""
        img = self._reflection_table[by.index][root.index]
        return img if root.sign > 0 else -img

    def reflection(self, root: Root) -> WeylElement:
        rw = self.root_weights[root.index]
        cv = self.positive_coroots[root.index]
        r = self.rank
        return WeylElement(
            tuple(tuple((1 if i == j else 0) - rw[i] * cv[j] for j in range(r)) for i in range(r))
        )

    def simple_reflection(self, i: int) -> WeylElement:
        return self.reflection(self.simple_root(i))

    @cached_property
    def identity(self) -> WeylElement:
        r = self.rank
        return WeylElement(tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r)))

    def weyl_from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"simple index {i} out of range for {self.name}")
            w = w * self.simple_reflection(i)
        return w

    def act_on_root(self, w: WeylElement, root: Root) -> Root:
        return self._lookup[w(self.root_weight(root))]

    # -- lengths and words ----------------------------------------------------

    def length(self, w: WeylElement) -> int:
        n = self._length_cache.get(w)
        if n is None:
            n = sum(1 for wt in self.root_weights if self._lookup[w(wt)].sign < 0)
            self._length_cache[w] = n
        return n

    def is_right_descent(self, w: WeylElement, i: int) -> bool:
        return self._lookup[w(self.root_weights[self.simple_root(i).index])].sign < 0

    def right_descents(self, w: WeylElement) -> list[int]:
        return [i for i in range(self.rank) if self.is_right_descent(w, i)]

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Lexicographically smallest reduced word ``(i1, ..., il)`` with ``w = s_i1 ... s_il``."""
        word = []
        ell = self.length(w)
        while ell:
            for i in range(self.rank):
                v = self.simple_reflection(i) * w
                if self.length(v) < ell:
                    word.append(i)
                    w, ell = v, ell - 1
                    break
        return tuple(word)

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.weyl_from_word(reversed(self.reduced_word(w)))

    @cached_property
    def longest_element(self) -> WeylElement:
        return self._parabolic_longest(range(self.rank))

    def _parabolic_longest(self, gens: Iterable[int]) -> WeylElement:
        gens = list(gens)
        w = self.identity
        grown = True
        while grown:
            grown = False
            for i in gens:
                if not self.is_right_descent(w, i):
                    w = w * self.simple_reflection(i)
                    grown = True
        return w

    def elements(self) -> list[WeylElement]:
        """All of W, breadth-first from the identity (so sorted by length)."""
        seen = {self.identity}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    v = w * self.simple_reflection(i)
                    if v not in seen and self.length(v) > self.length(w):
                        seen.add(v)
                        nxt.append(v)
            order.extend(nxt)
            frontier = nxt
        return order

    def star(self, p: int) -> int:
        """``p*`` with ``alpha_{p*} = -w_o(alpha_p)``."""
        img = self.act_on_root(self.longest_element, self.simple_root(p))
        idx = self.simple_index(img)
        assert idx is not None and img.sign < 0
        return idx

    # -- Bruhat order ---------------------------------------------------------

    def bruhat_covers(self, w: WeylElement) -> list[tuple[Root, WeylElement]]:
        """Elements covering ``w``: pairs ``(beta, w s_beta)`` with length one more."""
        ell = self.length(w)
        out = []
        for b in range(self.n_pos):
            v = w * self.reflection(Root(b))
            if self.length(v) == ell + 1:
                out.append((Root(b), v))
        return out

    def is_cover(self, w: WeylElement, root: Root) -> bool:
        return self.length(w * self.reflection(root)) == self.length(w) + 1

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        key = (u, w)
        hit = self._leq_cache.get(key)
        if hit is not None:
            return hit
        lu, lw = self.length(u), self.length(w)
        if lu > lw:
            res = False
        elif lw == 0:
            res = u == w
        else:
            i = self.right_descents(w)[0]
            s = self.simple_reflection(i)
            ws = w * s
            res = self.bruhat_leq(u * s, ws) if self.is_right_descent(u, i) else self.bruhat_leq(u, ws)
        self._leq_cache[key] = res
        return res

    # -- cosets of stabilizers -------------------------------------------------

    def _stabilizer_gens(self, lam: Sequence[int]) -> list[int]:
        if any(x < 0 for x in lam):
            raise NonDominant(f"{tuple(lam)} is not dominant")
        return [i for i, x in enumerate(lam) if x == 0]

    def stab_longest(self, lam: Sequence[int]) -> WeylElement:
        return self._parabolic_longest(self._stabilizer_gens(lam))

    def coset_min(self, w: WeylElement, lam: Sequence[int]) -> WeylElement:
        gens = self._stabilizer_gens(lam)
        moved = True
        while moved:
            moved = False
            for i in gens:
                if self.is_right_descent(w, i):
                    w = w * self.simple_reflection(i)
                    moved = True
        return w

    def coset_max(self, w: WeylElement, lam: Sequence[int]) -> WeylElement:
        gens = self._stabilizer_gens(lam)
        moved = True
        while moved:
            moved = False
            for i in gens:
                if not self.is_right_descent(w, i):
                    w = w * self.simple_reflection(i)
                    moved = True
        return w


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def iter_dominant(rank: int, bound: int) -> Iterator[Weight]:
    """All dominant weights with coordinates in ``0..bound``."""
    from itertools import product

    yield from product(range(bound + 1), repeat=rank)
