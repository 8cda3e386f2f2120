import pytest

from helpers import base_patterns

from trestles.graphs import DomainError, Tree, path_graph, spider, square
from trestles.obstruction import check_obstruction, compose, f_family
from trestles.oracle import SearchBudget, brute_force_trestle, enumerate_trees, NONE
from trestles.patterns import is_caterpillar
from trestles.tree_trestle import decide_tree_trestle


def test_caterpillars_have_no_obstruction():
    for n in range(3, 10):
        for t in enumerate_trees(n):
            if is_caterpillar(t):
                assert check_obstruction(t) is None


def test_spider4_gives_spider_witness():
    w = check_obstruction(spider(4))
    assert w is not None and w.kind == "spider"
    assert w.special == (0,)
    w.check(spider(4))


def test_agreement_with_decision_small():
    for n in range(3, 11):
        for t in enumerate_trees(n):
            absent = check_obstruction(t) is None
            feasible = decide_tree_trestle(t, 3) is not None
            assert absent == feasible


def test_witness_invariants_small():
    for n in range(3, 12):
        for t in enumerate_trees(n):
            w = check_obstruction(t)
            if w is not None:
                w.check(t)  # raises on any invariant violation


def test_t0_shape():
    base = base_patterns()
    t0 = base.t0
    assert t0.tree.n == 16
    assert len(t0.special) == 1
    (u,) = t0.special
    assert t0.tree.degree(u) == 3
    w = check_obstruction(t0.tree)
    assert w is not None and w.kind == "hall"
    assert w.special == t0.special
    assert w.black_neighbourhood == ()


def test_everything_below_t0_is_feasible():
    base = base_patterns()
    threshold = base.t0.tree.n
    # spot-check the sizes just below the threshold
    for n in (threshold - 2, threshold - 1):
        for t in enumerate_trees(n):
            if check_obstruction(t) is not None:
                w = check_obstruction(t)
                assert w.kind == "spider"  # only S(K_{1,4}) obstructions below T_0


def test_composition_arithmetic():
    base = base_patterns()
    members = f_family(40, base)
    sizes = sorted({m.tree.n for m in members})
    a_n = base.attachment.tree.n
    for prev, nxt in zip(sizes, sizes[1:]):
        assert nxt == prev - 5 + a_n - 1


def test_family_members_are_obstructions():
    base = base_patterns()
    for m in f_family(30, base):
        assert decide_tree_trestle(m.tree, 3) is None
        w = check_obstruction(m.tree)
        assert w is not None
        assert set(w.special) == set(m.special)


def test_family_dedup():
    base = base_patterns()
    from trestles.graphs import write_graph6
    from trestles.oracle import tree_canonical_form

    members = f_family(37, base)
    keys = [write_graph6(tree_canonical_form(m.tree)) for m in members]
    assert len(keys) == len(set(keys))


def test_t0_confirmed_by_brute_force():
    base = base_patterns()
    r = brute_force_trestle(square(base.t0.tree), 3, SearchBudget(node_limit=50_000_000))
    assert r.status == NONE


def test_rescue_clause():
    # attaching a leaf to the special vertex of T_0 gives it a black
    # neighbour, so the matching saturates and the obstruction vanishes
    base = base_patterns()
    t0 = base.t0.tree
    (u,) = base.t0.special
    edges = list(t0.edges()) + [(u, t0.n)]
    rescued = Tree(t0.n + 1, edges)
    assert check_obstruction(rescued) is None
    assert decide_tree_trestle(rescued, 3) is not None


def test_compose_identifies_vertices():
    base = base_patterns()
    reduced = path_graph(3)
    composed, ident, w_id, amap = compose(Tree(3, reduced.edges()), 2, base.attachment)
    assert composed.n == 3 + base.attachment.tree.n - 1
    assert ident == 2
    assert amap[base.attachment.v] == 2


def test_small_tree_guard():
    with pytest.raises(DomainError):
        check_obstruction(Tree(2, [(0, 1)]))
