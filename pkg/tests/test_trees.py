import networkx as nx
import pytest
from hypothesis import given, strategies as st

from compfactor.errors import CatalogTooSmall, NotATree
from compfactor.graph import complete, new_graph, relabel, standard_graph
from compfactor.trees import (
    canonical_code,
    construct_TR,
    enumerate_catalog,
    is_member,
    is_tree,
    labeled_trees,
    prufer_decode,
    validate_base,
)


def double_star(a, b):
    """Centres 0 and 1 with a and b leaves."""
    edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + i) for i in range(b)]
    return new_graph(2 + a + b, edges)


def claw_base():
    """Trimmed tree K_{1,3} (centre 0, outer 1..3); one leaf on every trimmed vertex."""
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7)]
    return new_graph(8, edges)


def from_nx(t):
    return new_graph(t.number_of_nodes(), t.edges())


def check_member_structure(w, t, k):
    """Invariants every T_R must satisfy; returns nothing, asserts."""
    assert is_tree(t)
    c = w.trimmed.n
    assert 2 * t.n == (2 * k + 3) * c
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    for i, x in enumerate(w.trimmed_vertices):
        r = (w.trimmed.degree(i) - 1) // 2
        assert len(t.neighbors(x) & leaves) == k - r
    subdiv = range(w.base.n, w.base.n + w.trimmed.m)
    for v in subdiv:
        assert t.degree(v) == 2
        assert not t.neighbors(v) & set(subdiv)


# -- base validation ----------------------------------------------------------------

def test_validate_p4():
    w = validate_base(standard_graph("path", 4), 2)
    assert w
    assert w.trimmed == complete(2)
    assert w.leaf_counts == {1: 1, 2: 1}
    assert w.leaf_set == {0, 3}


def test_validate_p3_rejected_by_a():
    rej = validate_base(standard_graph("path", 3), 2)
    assert not rej and rej.condition == "a"


def test_validate_double_star_rejected_by_b():
    rej = validate_base(double_star(3, 3), 2)
    assert not rej and rej.condition == "b"


@pytest.mark.parametrize("g,cond", [
    (complete(2), "nonempty"),
    (standard_graph("star", 5), "a"),
    (complete(3), "tree"),
    (complete(1), "a"),
])
def test_validate_degenerate(g, cond):
    rej = validate_base(g, 2)
    assert not rej and rej.condition == cond


def test_validate_trimmed_degree_too_high():
    # a spider whose centre has 7 trimmed neighbours exceeds 2k+1 = 5
    edges = [(0, i) for i in range(1, 8)] + [(i, i + 7) for i in range(1, 8)]
    rej = validate_base(new_graph(15, edges), 2)
    assert not rej and rej.condition == "a"


# -- construction ------------------------------------------------------------------

def test_construct_from_p4():
    w = validate_base(standard_graph("path", 4), 2)
    t = construct_TR(w, 2)
    assert t.n == 7
    check_member_structure(w, t, 2)
    # centres 1 and 2 are joined through the subdivision vertex 4
    assert t.neighbors(4) == {1, 2}
    assert sorted(t.degrees()) == [1, 1, 1, 1, 2, 3, 3]


def test_double_star_gives_same_member():
    w1 = validate_base(standard_graph("path", 4), 2)
    w2 = validate_base(double_star(2, 2), 2)
    t2 = construct_TR(w2, 2)
    assert t2.n == 7
    assert canonical_code(construct_TR(w1, 2)) == canonical_code(t2)


def test_construct_from_claw():
    w = validate_base(claw_base(), 2)
    assert w
    t = construct_TR(w, 2)
    assert t.n == 14
    check_member_structure(w, t, 2)
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    assert len(t.neighbors(0) & leaves) == 1
    for x in (1, 2, 3):
        assert len(t.neighbors(x) & leaves) == 2


@pytest.mark.parametrize("k", [2, 3])
def test_member_structure_all_small_bases(k):
    count = 0
    for r in range(1, 9):
        for base in nx.nonisomorphic_trees(r) if r > 1 else [nx.empty_graph(1)]:
            w = validate_base(from_nx(base), k)
            if w:
                check_member_structure(w, construct_TR(w, k), k)
                count += 1
    assert count > 5


# -- canonical codes ------------------------------------------------------------------

def test_code_examples():
    a = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    b = new_graph(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_code(a) == canonical_code(b)
    assert canonical_code(a) != canonical_code(standard_graph("star", 4))
    assert canonical_code(complete(1)) == "()"
    with pytest.raises(NotATree):
        canonical_code(complete(3))


@given(st.integers(3, 11).flatmap(
    lambda r: st.tuples(st.just(r), st.lists(st.integers(0, r - 1), min_size=r - 2, max_size=r - 2),
                        st.lists(st.integers(0, r - 1), min_size=r - 2, max_size=r - 2),
                        st.permutations(range(r)))))
def test_code_iff_isomorphic(args):
    r, s1, s2, perm = args
    t1, t2 = prufer_decode(tuple(s1), r), prufer_decode(tuple(s2), r)
    assert canonical_code(t1) == canonical_code(relabel(t1, list(perm)))
    iso = nx.is_isomorphic(nx.Graph(t1.edges()), nx.Graph(t2.edges()))
    assert (canonical_code(t1) == canonical_code(t2)) == iso


def test_labeled_tree_count():
    assert sum(1 for _ in labeled_trees(6)) == 6 ** 4
    assert all(is_tree(t) for t in labeled_trees(5))


# -- catalog ---------------------------------------------------------------------------

def oracle_catalog(k, max_order):
    """Members found from every unlabelled base tree that could possibly fit.

    With c trimmed vertices a base tree has at most c + (k - 1/2)c + 1 vertices.
    """
    c_max = 0
    while (2 * k + 3) * (c_max + 2) // 2 <= max_order:
        c_max += 2
    r_max = (2 * k + 1) * c_max // 2 + 1
    out = {}
    for r in range(2, r_max + 1):
        for base in nx.nonisomorphic_trees(r):
            w = validate_base(from_nx(base), k)
            if w:
                t = construct_TR(w, k)
                if t.n <= max_order:
                    out.setdefault(t.n, set()).add(canonical_code(t))
    return {o: sorted(c) for o, c in sorted(out.items())}


def test_catalog_examples():
    assert len(enumerate_catalog(2, 6)) == 0
    cat = enumerate_catalog(2, 7)
    assert cat.members == {7: [canonical_code(construct_TR(validate_base(standard_graph("path", 4), 2), 2))]}
    cat3 = enumerate_catalog(3, 9)
    assert list(cat3.members) == [9] and len(cat3.members[9]) == 1


@pytest.mark.parametrize("k,max_order", [(2, 7), (2, 13), (3, 9), (3, 17), (4, 21)])
def test_catalog_matches_oracle(k, max_order):
    assert enumerate_catalog(k, max_order).members == oracle_catalog(k, max_order)


@pytest.mark.slow
def test_catalog_order14_matches_oracle():
    cat = enumerate_catalog(2, 14)
    assert cat.members == oracle_catalog(2, 14)
    assert sorted(cat.members) == [7, 14]


@pytest.mark.parametrize("k", [2, 3])
def test_smallest_member(k):
    cat = enumerate_catalog(k, 4 * k + 6)
    assert min(cat.orders) == 2 * k + 3
    assert len(cat.members[2 * k + 3]) == 1


def test_catalog_closed_under_generation():
    cat = enumerate_catalog(2, 14)
    for order, codes in cat.members.items():
        assert len(set(codes)) == len(codes)
        for code in codes:
            w = validate_base(cat.witnesses[code].base, 2)
            assert canonical_code(construct_TR(w, 2)) == code
            assert cat.trees[code].n == order <= cat.max_order


def test_is_member():
    cat = enumerate_catalog(2, 7)
    member = cat.trees[cat.members[7][0]]
    assert is_member(relabel(member, [6, 5, 4, 3, 2, 1, 0]), 2, cat)
    assert not is_member(standard_graph("path", 7), 2, cat)
    assert not is_member(standard_graph("star", 6), 2, cat)
    assert not is_member(complete(3), 2, cat)
    with pytest.raises(CatalogTooSmall):
        is_member(standard_graph("path", 8), 2, cat)
