"""Verification suites over a single ``(type, lambda)`` chain.

Each suite counts passes and failures per named check and keeps a few failing
instances for diagnosis.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .admissible import admissible_positions, sigma_and_levels, weight_of, weyl_of
from .chains import LambdaChain, apply_segment_reversal, find_yb_windows, lex_lambda_chain, reverse_chain
from .characters import (
    apply_B,
    apply_X,
    character,
    demazure_decreasing,
    demazure_filtered,
    demazure_oracle,
    r_operator_check,
    weyl_dim_oracle,
)
from .crystal import build_graph, lower, raise_, string_lengths, weyl_action
from .evacuation import evacuate_via_crystal, evacuation_map, evacuation_moves, evacuation_report, reverse_subset
from .rootsys import Root, RootSystem
from .ybmoves import yb_move, yb_move_search

MAX_EXAMPLES = 5


class UnknownSuite(KeyError):
    pass


@dataclass
class CheckCount:
    passed: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)


@dataclass
class Report:
    suite: str
    type: str
    lam: tuple[int, ...]
    checks: dict[str, CheckCount] = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail=None) -> None:
        c = self.checks.setdefault(name, CheckCount())
        if ok:
            c.passed += 1
        else:
            c.failed += 1
            if len(c.examples) < MAX_EXAMPLES:
                c.examples.append(detail)

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks.values())

    def merge(self, other: Report) -> None:
        for name, c in other.checks.items():
            mine = self.checks.setdefault(name, CheckCount())
            mine.passed += c.passed
            mine.failed += c.failed
            mine.examples.extend(c.examples[: MAX_EXAMPLES - len(mine.examples)])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "type": self.type,
            "lambda": list(self.lam),
            "ok": self.ok,
            "checks": {
                name: {"passed": c.passed, "failed": c.failed, "examples": [repr(e) for e in c.examples]}
                for name, c in sorted(self.checks.items())
            },
        }


def _new(suite: str, chain: LambdaChain) -> Report:
    return Report(suite, chain.rs.name, tuple(chain.lam))


def suite_char(chain: LambdaChain) -> Report:
    rep = _new("char", chain)
    rs = chain.rs
    ch = character(chain)
    rep.record("character_eq_oracle", ch == demazure_oracle(rs, chain.lam, rs.longest_element))
    rep.record("mass_eq_weyl_dim", ch.mass == weyl_dim_oracle(rs, chain.lam), ch.mass)
    for p in range(rs.rank):
        s = rs.simple_reflection(p)
        bad = [mu for mu in ch if ch[s(mu)] != ch[mu]]
        rep.record("w_invariance", not bad, (p, bad[:3]))
    return rep


def suite_demform(chain: LambdaChain) -> Report:
    rep = _new("demform", chain)
    rs = chain.rs
    for u in rs.elements():
        want = demazure_oracle(rs, chain.lam, u)
        word = rs.reduced_word(u)
        rep.record("decreasing_eq_oracle", demazure_decreasing(chain, u) == want, word)
        rep.record("filtered_eq_oracle", demazure_filtered(chain, u) == want, word)
    return rep


def suite_ybform(chain: LambdaChain, seed: int = 0, samples: int = 200) -> Report:
    rep = _new("ybform", chain)
    rs = chain.rs
    rep.record("ybform", r_operator_check(chain))
    for w in find_yb_windows(chain):
        rep.record("ybform_after_reversal", r_operator_check(apply_segment_reversal(chain, w)), w)
    rng = random.Random(seed)
    elements = rs.elements()
    h = rs.coxeter_number
    for _ in range(samples):
        alpha = Root(rng.randrange(rs.n_pos))
        lam = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
        v = {}
        for _ in range(rng.randint(1, 4)):
            key = (tuple(rng.randint(-2 * h, 2 * h) for _ in range(rs.rank)), rng.choice(elements))
            v[key] = v.get(key, 0) + rng.randint(-3, 3)
        v = {k: c for k, c in v.items() if c}
        left = apply_B(rs, alpha, apply_X(rs, lam, v))
        right = apply_X(rs, rs.reflect_weight(lam, alpha), apply_B(rs, alpha, v))
        rep.record("commute", left == right, (alpha, lam))
    return rep


def suite_crystal(chain: LambdaChain) -> Report:
    rep = _new("crystal", chain)
    rs = chain.rs
    graph = build_graph(chain)
    rep.record("unique_source", graph.sources() == [()], graph.sources())
    rep.record("unique_sink", len(graph.sinks()) == 1, graph.sinks())
    rep.record("connected", len(graph.reachable(())) == len(graph.nodes))
    for J in graph.nodes:
        mu = weight_of(chain, J)
        for p in range(rs.rank):
            sig = sigma_and_levels(chain, J, p)
            up, down = string_lengths(chain, J, p)
            rep.record("f_string_eq_M", down == sig.M, (J, p))
            rep.record("e_string_eq_M_minus_pairing", up == max(0, sig.M - mu[p]), (J, p))
            rep.record("l_inf_eq_pairing", sig.l_inf == mu[p], (J, p))
            K = lower(chain, J, p)
            if K is not None:
                rep.record("e_inverts_f", raise_(chain, K, p) == J, (J, p))
                rep.record("f_weight", weight_of(chain, K) == tuple(
                    a - b for a, b in zip(mu, rs.root_weight(rs.simple_root(p)))), (J, p))
            S = weyl_action(chain, J, p)
            rep.record("weyl_action_weight", weight_of(chain, S) == rs.reflect_weight(mu, rs.simple_root(p)), (J, p))
    return rep


def suite_yb(chain: LambdaChain) -> Report:
    rep = _new("yb", chain)
    rs = chain.rs
    subsets = admissible_positions(chain)
    for win in find_yb_windows(chain):
        other = apply_segment_reversal(chain, win)
        image = {J: yb_move(chain, win, J) for J in subsets}
        rep.record("bijection", sorted(image.values()) == sorted(admissible_positions(other)), win)
        for J, K in image.items():
            rep.record("weight_preserved", weight_of(chain, J) == weight_of(other, K), (win, J))
            rep.record("w_preserved", weyl_of(chain, J) == weyl_of(other, K), (win, J))
            rep.record("move_eq_search", yb_move_search(chain, win, J) == K, (win, J))
            for p in range(rs.rank):
                FJ, FK = lower(chain, J, p), lower(other, K, p)
                if FJ is None or FK is None:
                    rep.record("commutes_with_f", FJ is None and FK is None, (win, J, p))
                else:
                    rep.record("commutes_with_f", image[FJ] == FK, (win, J, p))
    return rep


EX_INV_ORDER = (1, 0)


def _ex_inv_instance(rep: Report, rs: RootSystem) -> None:
    chain = lex_lambda_chain(rs, (2, 2), order=EX_INV_ORDER)
    r = evacuation_report(chain, (4, 6))
    ok = r.J_rev == (0, 4, 6) and len(r.moves) == 1 and r.J_star == (0, 5, 6) and all(r.checks.values())
    rep.record("worked_instance", ok, (r.J_rev, r.moves, r.J_star))


def suite_evac(chain: LambdaChain) -> Report:
    rep = _new("evac", chain)
    rs = chain.rs
    w0 = rs.longest_element
    rev = reverse_chain(chain)
    rep.record("reverse_chain_involution", reverse_chain(rev).roots == chain.roots)
    subsets = admissible_positions(chain)
    rev_set = set(admissible_positions(rev))
    jrev = {}
    for J in subsets:
        R = reverse_subset(chain, J, rev)
        jrev[J] = R
        rep.record("rev_admissible", R in rev_set, J)
        rep.record("rev_involution", reverse_subset(rev, R, chain) == J, J)
        rep.record("rev_weight", weight_of(rev, R) == w0(weight_of(chain, J)), J)
    for J in subsets:
        for p in range(rs.rank):
            F = lower(chain, J, p)
            E = raise_(rev, jrev[J], rs.star(p))
            if F is None or E is None:
                rep.record("comm_f_rev", F is None and E is None, (J, p))
            else:
                rep.record("comm_f_rev", jrev[F] == E, (J, p))
    moves = evacuation_moves(chain)
    star = evacuation_map(chain, moves)
    q = chain.head_len
    rep.record("jmin_to_jmax", star[tuple(range(q))] == (), star[tuple(range(q))])
    rep.record("jmax_to_jmin", star[()] == tuple(range(q)), star[()])
    for J in subsets:
        rep.record("involution", star[star[J]] == J, J)
        r = evacuation_report(chain, J, moves)
        for name, ok in r.checks.items():
            rep.record(f"cond2_{name}", ok, J)
        for p in range(rs.rank):
            F = lower(chain, J, p)
            E = raise_(chain, star[J], rs.star(p))
            if F is None or E is None:
                rep.record("cond1", F is None and E is None, (J, p))
            else:
                rep.record("cond1", star[F] == E, (J, p))
    oracle = evacuate_via_crystal(chain)
    rep.record("eq_crystal_oracle", oracle == star, [J for J in subsets if oracle.get(J) != star[J]][:3])
    if rs.name == "A2" and tuple(chain.lam) == (2, 2):
        _ex_inv_instance(rep, rs)
    return rep


SUITES: dict[str, Callable[[LambdaChain], Report]] = {
    "char": suite_char,
    "demform": suite_demform,
    "ybform": suite_ybform,
    "crystal": suite_crystal,
    "yb": suite_yb,
    "evac": suite_evac,
}


def run_suite(name: str, chain: LambdaChain) -> Report:
    if name == "all":
        rep = _new("all", chain)
        for suite in SUITES.values():
            rep.merge(suite(chain))
        return rep
    if name not in SUITES:
        raise UnknownSuite(name)
    return SUITES[name](chain)
