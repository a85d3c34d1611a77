import pytest

from alcovepath.admissible import (
    AdmissibilityViolated,
    enumerate_admissible,
    fold,
    is_admissible,
    keys_of,
    levels_from_signs,
    sigma_and_levels,
    weight_of,
    weyl_of,
)
from alcovepath.chains import LambdaChain, NotSpecialForm, lex_lambda_chain
from alcovepath.characters import weyl_dim_oracle
from alcovepath.rootsys import RootSystem, iter_dominant


def test_simple_example_subsets(omega1_chain):
    assert [s.positions for s in enumerate_admissible(omega1_chain)] == [(), (0,), (0, 1)]
    assert not is_admissible(omega1_chain, (1,))
    assert is_admissible(omega1_chain, ())
    assert not is_admissible(omega1_chain, (5,))


def test_empty_chain():
    rs = RootSystem("A", 2)
    assert [s.positions for s in enumerate_admissible(lex_lambda_chain(rs, (0, 0)))] == [()]


def test_g2_omega1_count():
    rs = RootSystem("G", 2)
    assert len(enumerate_admissible(lex_lambda_chain(rs, (1, 0)))) == 7


@pytest.mark.parametrize("desc,bound", [("A2", 2), ("B2", 2), ("G2", 1), ("A3", 1), ("C3", 1)])
def test_counts_match_dimension(desc, bound):
    rs = RootSystem.from_descriptor(desc)
    for lam in iter_dominant(rs.rank, bound):
        assert len(enumerate_admissible(lex_lambda_chain(rs, lam))) == weyl_dim_oracle(rs, lam)


def test_saturated_chain_property():
    rs = RootSystem("B", 2)
    chain = lex_lambda_chain(rs, (1, 1))
    for s in enumerate_admissible(chain):
        w = rs.identity
        for j in s.positions:
            nxt = w * chain.reflections[j]
            assert rs.length(nxt) == rs.length(w) + 1
            w = nxt
        assert s.w == w and s.keys[1] == w


def test_simple_example_weights(a2, omega1_chain, a2_roots):
    a12, a23, a13 = a2_roots
    w1 = (1, 0)
    assert weight_of(omega1_chain, ()) == w1
    assert weight_of(omega1_chain, (0,)) == a2.reflect_weight(w1, a12)
    assert weight_of(omega1_chain, (0, 1)) == a2.reflect_weight(a2.reflect_weight(w1, a13), a12)


def test_worked_subset(a2, ex_chain):
    J = (4, 6)  # tail positions 2 and 4
    assert is_admissible(ex_chain, J)
    assert weyl_of(ex_chain, J) == a2.weyl_from_word((0, 1))
    k0, k1 = keys_of(ex_chain, J)
    assert k0.is_identity and k1 == a2.weyl_from_word((0, 1))


def test_keys_need_special_form(a2, a2_roots):
    a12, a23, a13 = a2_roots
    chain = LambdaChain(a2, (1, 1), (a12, a13, a13, a23))
    with pytest.raises(NotSpecialForm):
        keys_of(chain, ())


def test_fold(a2, omega1_chain, a2_roots):
    a12, a23, a13 = a2_roots
    f0 = fold(omega1_chain, ())
    assert f0.pairs == ((a12, a12), (a13, a13)) and f0.gamma_inf == a2.rho
    f1 = fold(omega1_chain, (0,))
    assert f1.pairs == ((a12, -a12), (a23, a23))
    assert f1.gamma_inf == a2.reflect_weight(a2.rho, a12)


def test_sigma_simple(omega1_chain):
    sig = sigma_and_levels(omega1_chain, (), 0)
    assert sig.indices == (0,)
    assert sig.sigma == ((1, 1),) and sig.final_sign == 1
    assert sig.levels == (0,) and sig.l_inf == 1 and sig.M == 1


def test_sigma_empty_index_set(a2):
    chain = lex_lambda_chain(a2, (0, 1))
    assert [a2.root_coords(b) for b in chain.roots] == [(0, 1), (1, 1)]
    sig = sigma_and_levels(chain, (), 0)
    assert sig.indices == () and sig.l_inf == 0 and sig.M == 0


def test_level_scan_pattern():
    pattern = [(1, -1), (-1, -1), (1, 1), (1, 1), (1, -1), (-1, -1), (1, -1), (1, 1)]
    levels, l_inf = levels_from_signs(pattern, 1)
    assert levels == (0, -1, -1, 0, 1, 0, 0, 0)
    assert l_inf == 1 and max(levels + (l_inf,)) == 1


@pytest.mark.parametrize("desc,lam", [("A2", (2, 2)), ("B2", (1, 2)), ("G2", (1, 1)), ("C3", (1, 0, 1))])
def test_sign_conditions_and_l_inf(desc, lam):
    rs = RootSystem.from_descriptor(desc)
    chain = lex_lambda_chain(rs, lam)
    for s in enumerate_admissible(chain):
        for p in range(rs.rank):
            sig = sigma_and_levels(chain, s.positions, p)  # raises on (S1)/(S2) failure
            assert sig.l_inf == s.mu[p]
            assert sig.M >= 0


def test_sign_violation_detected(a2, a2_roots):
    a12, a23, a13 = a2_roots
    # (a12, a12) with both positions folded is not admissible and leaves a (-1, 1) pair
    chain = LambdaChain(a2, (2, 0), (a12, a12))
    with pytest.raises(AdmissibilityViolated):
        sigma_and_levels(chain, (0, 1), 0)
    assert sigma_and_levels(chain, (0, 1), 0, check=False).sigma[1] == (-1, 1)
