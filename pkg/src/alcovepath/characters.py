"""Characters and Demazure characters, with independent oracles.

Includes the Weyl dimension formula, the Demazure operator recursion, and the
``R``-operator identity in ``Z[Lambda/h] (x) Z[W]``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .admissible import admissible_positions, weight_of, weyl_of
from .chains import LambdaChain
from .rootsys import Root, RootSystem, Weight, WeylElement, is_dominant, NonDominant


class CharacterPoly:
    """Finitely supported map weight -> nonzero integer multiplicity."""

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = defaultdict(int)
        for wt, c in items:
            acc[tuple(wt)] += c
        self.terms = {wt: c for wt, c in acc.items() if c}

    @classmethod
    def from_weights(cls, weights: Iterable[Weight]) -> CharacterPoly:
        return cls((wt, 1) for wt in weights)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CharacterPoly) and self.terms == other.terms

    def __add__(self, other: CharacterPoly) -> CharacterPoly:
        return CharacterPoly(list(self.terms.items()) + list(other.terms.items()))

    def __getitem__(self, wt: Weight) -> int:
        return self.terms.get(tuple(wt), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self.terms))

    def __repr__(self) -> str:
        return f"CharacterPoly({dict(sorted(self.terms.items()))})"

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {"terms": [{"weight": list(wt), "mult": self.terms[wt]} for wt in sorted(self.terms)]}

    @classmethod
    def from_json(cls, data: Mapping) -> CharacterPoly:
        return cls((tuple(t["weight"]), t["mult"]) for t in data["terms"])


def character(chain: LambdaChain) -> CharacterPoly:
    return CharacterPoly.from_weights(weight_of(chain, J) for J in admissible_positions(chain))


def demazure_decreasing(chain: LambdaChain, u: WeylElement) -> CharacterPoly:
    """Sum of ``e^{u(mu(J))}`` over subsets giving a saturated decreasing chain down from ``u``."""
    rs = chain.rs
    n = len(chain)
    weights = []

    def grow(prefix: tuple[int, ...], v: WeylElement) -> None:
        weights.append(u(weight_of(chain, prefix)))
        start = prefix[-1] + 1 if prefix else 0
        lv = rs.length(v)
        for j in range(start, n):
            nxt = v * chain.reflections[j]
            if rs.length(nxt) == lv - 1:
                grow(prefix + (j,), nxt)

    grow((), u)
    return CharacterPoly.from_weights(weights)


def demazure_filtered(chain: LambdaChain, u: WeylElement) -> CharacterPoly:
    """Sum of ``e^{mu(J)}`` over admissible ``J`` with ``w(J) <= u``."""
    rs = chain.rs
    return CharacterPoly.from_weights(
        weight_of(chain, J) for J in admissible_positions(chain) if rs.bruhat_leq(weyl_of(chain, J), u)
    )


def demazure_operator(rs: RootSystem, p: int, poly: CharacterPoly) -> CharacterPoly:
    alpha = rs.root_weight(rs.simple_root(p))
    out: dict[Weight, int] = defaultdict(int)
    for mu, c in poly.terms.items():
        m = mu[p]
        if m >= 0:
            steps, sign = range(0, m + 1), 1
        elif m == -1:
            continue
        else:
            steps, sign = range(-1, m, -1), -1
        for j in steps:
            out[tuple(x - j * a for x, a in zip(mu, alpha))] += sign * c
    return CharacterPoly(out)


def demazure_oracle(rs: RootSystem, lam: Sequence[int], u: WeylElement, word: Sequence[int] | None = None) -> CharacterPoly:
    """``D_{i1} ... D_{il}(e^lam)`` for a reduced word of ``u`` (lexicographically least by default)."""
    if not is_dominant(lam):
        raise NonDominant(f"{tuple(lam)} is not dominant")
    if word is None:
        word = rs.reduced_word(u)
    poly = CharacterPoly({tuple(lam): 1})
    for p in reversed(word):
        poly = demazure_operator(rs, p, poly)
    return poly


def weyl_dim_oracle(rs: RootSystem, lam: Sequence[int]) -> int:
    if not is_dominant(lam):
        raise NonDominant(f"{tuple(lam)} is not dominant")
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for idx in range(rs.n_pos):
        num *= Fraction(rs.pairing(shifted, Root(idx)), rs.pairing(rs.rho, Root(idx)))
    assert num.denominator == 1
    return int(num)


# -- the ring K = Z[Lambda/h] (x) Z[W] --------------------------------------------

KAlgebraElement = dict  # (h * weight, WeylElement) -> int


def _kclean(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v}


def k_one(rs: RootSystem) -> dict:
    return {(rs.zero, rs.identity): 1}


def apply_X(rs: RootSystem, lam: Sequence[int], v: Mapping) -> dict:
    """``X^lam : e^mu w -> e^{mu + w(lam)/h} w`` (weights stored multiplied by ``h``)."""
    out: dict = defaultdict(int)
    for (mu, w), c in v.items():
        shift = w(lam)
        out[(tuple(a + b for a, b in zip(mu, shift)), w)] += c
    return _kclean(out)


def apply_B(rs: RootSystem, alpha: Root, v: Mapping) -> dict:
    """``B_alpha : w -> w s_alpha`` when the length goes up by one, else 0; ``B_{-a} = -B_a``."""
    s = rs.reflection(alpha)
    out: dict = defaultdict(int)
    for (mu, w), c in v.items():
        ws = w * s
        if rs.length(ws) == rs.length(w) + 1:
            out[(mu, ws)] += alpha.sign * c
    return _kclean(out)


def _add(x: Mapping, y: Mapping) -> dict:
    out: dict = defaultdict(int)
    for d in (x, y):
        for k, c in d.items():
            out[k] += c
    return _kclean(out)


def apply_R(rs: RootSystem, alpha: Root, v: Mapping) -> dict:
    """``R_alpha = X^rho (X^alpha + B_alpha) X^{-rho}``."""
    rho = rs.rho
    x = apply_X(rs, tuple(-c for c in rho), v)
    x = _add(apply_X(rs, rs.root_weight(alpha), x), apply_B(rs, alpha, x))
    return apply_X(rs, rho, x)


def r_operator_sides(chain: LambdaChain) -> tuple[dict, dict]:
    rs = chain.rs
    h = rs.coxeter_number
    left = k_one(rs)
    for b in chain.roots:
        left = apply_R(rs, b, left)
    right: dict = defaultdict(int)
    for J in admissible_positions(chain):
        mu = tuple(h * x for x in weight_of(chain, J))
        right[(mu, weyl_of(chain, J))] += 1
    return left, _kclean(right)


def r_operator_check(chain: LambdaChain) -> bool:
    left, right = r_operator_sides(chain)
    return left == right
