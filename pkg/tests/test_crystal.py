from collections import Counter

import pytest

from alcovepath.admissible import admissible_positions, sigma_and_levels, weight_of
from alcovepath.chains import lex_lambda_chain, reverse_chain
from alcovepath.crystal import build_graph, canonical_iso, lower, raise_, string_lengths, weyl_action
from alcovepath.rootsys import RootSystem, iter_dominant


def test_lower_raise_simple(omega1_chain):
    assert lower(omega1_chain, (), 0) == (0,)
    assert lower(omega1_chain, (0,), 1) == (0, 1)
    assert lower(omega1_chain, (), 1) is None
    assert raise_(omega1_chain, (0,), 0) == ()
    for p in range(2):
        assert lower(omega1_chain, (0, 1), p) is None
        assert raise_(omega1_chain, (), p) is None


def test_graph_simple(omega1_chain):
    g = build_graph(omega1_chain)
    assert g.nodes == [(), (0,), (0, 1)]
    assert g.edges == [((), 0, (0,)), ((0,), 1, (0, 1))]


def test_graph_trivial(a2):
    g = build_graph(lex_lambda_chain(a2, (0, 0)))
    assert g.nodes == [()] and g.edges == []


def test_adjoint_a2(a2):
    chain = lex_lambda_chain(a2, (1, 1))
    g = build_graph(chain)
    assert len(g.nodes) == 8
    roots = [a2.root_weight(a2.root_from_coords(c)) for c in [(1, 0), (0, 1), (1, 1)]]
    expected = Counter(roots + [tuple(-x for x in r) for r in roots] + [(0, 0), (0, 0)])
    assert Counter(g.weights.values()) == expected
    for J in g.nodes:
        for p in range(2):
            assert weyl_action(chain, weyl_action(chain, J, p), p) == J


def test_weyl_action(omega1_chain):
    assert weyl_action(omega1_chain, (), 0) == (0,)
    assert weyl_action(omega1_chain, (), 1) == ()


@pytest.mark.parametrize("desc,bound", [("A2", 2), ("B2", 2), ("G2", 1), ("A3", 1), ("B3", 1)])
def test_crystal_axioms(desc, bound):
    rs = RootSystem.from_descriptor(desc)
    for lam in iter_dominant(rs.rank, bound):
        chain = lex_lambda_chain(rs, lam)
        g = build_graph(chain)
        assert g.sources() == [()]
        q = chain.head_len
        assert g.sinks() == [tuple(range(q))]
        assert len(g.reachable(())) == len(g.nodes)
        for J, p, K in g.edges:
            assert raise_(chain, K, p) == J
            drop = rs.root_weight(rs.simple_root(p))
            assert g.weights[K] == tuple(a - b for a, b in zip(g.weights[J], drop))
        for J in g.nodes:
            for p in range(rs.rank):
                sig = sigma_and_levels(chain, J, p)
                up, down = string_lengths(chain, J, p)
                assert down == sig.M
                assert up == max(0, sig.M - g.weights[J][p])


def test_json_and_dot(omega1_chain):
    g = build_graph(omega1_chain)
    data = g.to_json()
    assert data["type"] == "A2" and len(data["nodes"]) == 3
    assert [e["color"] for e in data["edges"]] == [1, 2]
    dot = g.to_dot()
    assert dot.count("->") == 2 and dot.count("label=") == 5


def test_canonical_iso_identity(ex_chain):
    iso = canonical_iso(ex_chain, ex_chain)
    assert all(J == K for J, K in iso.items())


def test_canonical_iso_reverse(ex_chain):
    rev = reverse_chain(ex_chain)
    iso = canonical_iso(rev, ex_chain)
    assert iso[(0, 4, 6)] == (0, 5, 6)
    assert sorted(iso.values()) == sorted(admissible_positions(ex_chain))
    for J, K in iso.items():
        assert weight_of(rev, J) == weight_of(ex_chain, K)


def test_canonical_iso_respects_edges():
    rs = RootSystem("G", 2)
    a = lex_lambda_chain(rs, (1, 1))
    b = reverse_chain(a)
    iso = canonical_iso(a, b)
    for J, p, K in build_graph(a).edges:
        assert lower(b, iso[J], p) == iso[K]
