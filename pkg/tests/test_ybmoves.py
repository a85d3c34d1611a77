import pytest

from alcovepath.admissible import admissible_positions, weight_of, weyl_of
from alcovepath.chains import (
    apply_segment_reversal,
    connect_chains,
    find_yb_windows,
    lex_lambda_chain,
    reachable_chains,
    reverse_chain,
)
from alcovepath.crystal import canonical_iso, lower
from alcovepath.rootsys import RootSystem, iter_dominant
from alcovepath.ybmoves import (
    DihedralContext,
    PatternMismatch,
    composed_bijection,
    dihedral_chain_subset,
    dihedral_coset_split,
    reflection_permutation,
    reflection_permutation_formula,
    yb_local_involution,
    yb_move,
    yb_move_detail,
    yb_move_search,
)


@pytest.fixture
def ex_window(ex_chain):
    rev = reverse_chain(ex_chain)
    return rev, find_yb_windows(rev, rev.head_len)[0]


def test_coset_split_worked(a2, ex_window):
    rev, win = ex_window
    ctx = DihedralContext.from_window(a2, win)
    assert len(ctx.elements) == 6
    s12 = a2.simple_reflection(0)
    floor_w, wbar, a = dihedral_coset_split(s12, ctx)
    assert floor_w.is_identity and wbar == s12 and a == 1
    w = a2.weyl_from_word((0, 1, 0))
    floor_w, wbar, a = dihedral_coset_split(w, ctx)
    assert floor_w.is_identity and a == 3 and len(ctx.word(wbar)) == 3


def test_coset_split_generic():
    rs = RootSystem("B", 3)
    chain = lex_lambda_chain(rs, (1, 1, 1))
    win = find_yb_windows(chain)[0]
    ctx = DihedralContext.from_window(rs, win)
    for w in rs.elements()[:20]:
        floor_w, wbar, a = dihedral_coset_split(w, ctx)
        assert floor_w * wbar == w
        assert wbar in ctx.elements and ctx.length(wbar) == a
        assert all(rs.length(floor_w) <= rs.length(floor_w * v) for v in ctx.elements)


def test_chain_subset_cases(a2, ex_window):
    rev, win = ex_window
    ctx = DihedralContext.from_window(a2, win)
    s12 = a2.simple_reflection(0)
    assert dihedral_chain_subset(s12, s12, ctx) == ((), "0")
    assert dihedral_chain_subset(s12, a2.longest_element, ctx)[0] == (1, 3)
    assert dihedral_chain_subset(a2.identity, a2.longest_element, ctx) == ((1, 2, 3), "3")


def test_local_involution():
    assert yb_local_involution(3, 1, 3, (1, 3)) == (2, 3)
    for q in (2, 3, 4, 6):
        for a in range(q + 1):
            assert yb_local_involution(q, a, a, ()) == ()
        assert yb_local_involution(q, 0, 1, (1,)) == (q,)
        assert yb_local_involution(q, 0, q, tuple(range(1, q + 1))) == tuple(range(1, q + 1))
    with pytest.raises(PatternMismatch):
        yb_local_involution(3, 0, 1, (2,))


def test_local_involution_is_involutive():
    from alcovepath.ybmoves import _table_rows

    for q in (2, 3, 4, 6):
        for a in range(q + 1):
            for b in range(a, q + 1):
                for left, right in _table_rows(q, a, b):
                    assert yb_local_involution(q, a, b, yb_local_involution(q, a, b, left)) == left


def test_worked_move(ex_chain, ex_window):
    rev, win = ex_window
    assert yb_move(rev, win, (0, 4, 6)) == (0, 5, 6)
    assert yb_move_search(rev, win, (0, 4, 6)) == (0, 5, 6)
    rec = yb_move_detail(rev, win, (0, 4, 6))
    assert rec.inside == (1, 3) and (rec.a, rec.b) == (1, 3)


def test_disjoint_and_double_move(ex_chain, ex_window):
    rev, win = ex_window
    back = apply_segment_reversal(rev, win)
    win_back = find_yb_windows(back, back.head_len)[0]
    for J in admissible_positions(rev):
        K = yb_move(rev, win, J)
        if not set(J) & set(win.positions):
            assert K == J
        assert yb_move(back, win_back, K) == J


def test_full_window_case():
    rs = RootSystem("A", 2)
    chain = lex_lambda_chain(rs, (1, 1))
    win = find_yb_windows(chain)[0]
    full = tuple(win.positions)
    if full in admissible_positions(chain):
        assert yb_move_search(chain, win, full) == full


@pytest.mark.parametrize("desc,bound", [("A2", 2), ("B2", 1), ("G2", 1), ("A3", 1)])
def test_move_properties(desc, bound):
    rs = RootSystem.from_descriptor(desc)
    for lam in iter_dominant(rs.rank, bound):
        chain = lex_lambda_chain(rs, lam)
        for win in find_yb_windows(chain):
            other = apply_segment_reversal(chain, win)
            image = {J: yb_move(chain, win, J) for J in admissible_positions(chain)}
            assert sorted(image.values()) == sorted(admissible_positions(other))
            for J, K in image.items():
                assert yb_move_search(chain, win, J) == K
                assert weight_of(chain, J) == weight_of(other, K)
                assert weyl_of(chain, J) == weyl_of(other, K)
                for p in range(rs.rank):
                    FJ, FK = lower(chain, J, p), lower(other, K, p)
                    assert (FJ is None) == (FK is None)
                    if FJ is not None:
                        assert image[FJ] == FK


def test_composed_bijection_identity(ex_chain):
    assert all(J == K for J, K in composed_bijection(ex_chain, ex_chain).items())


def test_composed_bijection_worked(ex_chain):
    rev = reverse_chain(ex_chain)
    m = composed_bijection(rev, ex_chain, head_disjoint=True)
    assert m[(0, 4, 6)] == (0, 5, 6)
    assert m == canonical_iso(rev, ex_chain)


def test_two_paths_agree():
    rs = RootSystem("G", 2)
    a = lex_lambda_chain(rs, (1, 1))
    pairs = [(b, connect_chains(a, b), connect_chains(a, b, reverse_scan=True)) for b in reachable_chains(a)]
    pairs = [t for t in pairs if t[1] != t[2]]
    assert len(pairs) == 8
    b, p1, p2 = pairs[-1]
    m1 = composed_bijection(a, b, p1)
    assert m1 == composed_bijection(a, b, p2) == canonical_iso(a, b)


@pytest.mark.parametrize("desc,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 1))])
def test_reflection_permutation(desc, lam):
    rs = RootSystem.from_descriptor(desc)
    win = [w for w in find_yb_windows(lex_lambda_chain(rs, lam)) if w.q == rs.n_pos][0]
    ctx = DihedralContext.from_window(rs, win)
    for i in range(1, win.q + 1):
        assert reflection_permutation(ctx, i) == reflection_permutation_formula(win.q, i)
