import random
from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from compfactor.errors import InvalidParameters, TooLarge
from compfactor.factors import (
    check_thm11,
    check_thm13,
    check_thm14,
    check_thm15,
    deficiency,
    extremal_edge_threshold,
    has_factor_thm11,
    independence_number,
    independent_sets_of_size,
    is_t_connected,
    maximum_independent_set,
    objective,
    thm13_order_ok,
    thm14_set_size,
)
from compfactor.graph import (
    complete,
    empty,
    extremal_remark31,
    extremal_remark41,
    extremal_remark51,
    isolated_count,
    delete_vertices,
    join,
    new_graph,
    random_gnp,
    standard_graph,
    to_mask,
    union,
)
from compfactor.remarks import g1_margin, g1_window, verify_g1, verify_remark31, verify_remark41, verify_remark51

from .conftest import graphs


def brute_deficiency(g, k):
    """(value, smallest maximising mask) over all 2^n subsets."""
    best = None
    for mask in range(1 << g.n):
        s = [v for v in range(g.n) if mask >> v & 1]
        h, _ = delete_vertices(g, s)
        val = 2 * isolated_count(h) - (2 * k + 1) * len(s)
        if best is None or val > best[0]:
            best = (val, mask)
    return best


def brute_alpha(g):
    for size in range(g.n, 0, -1):
        for c in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(c, 2)):
                return size
    return 0


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# -- deficiency ---------------------------------------------------------------------

def test_deficiency_examples():
    rep = deficiency(standard_graph("star", 4), 2)
    assert (rep.value, rep.best_set, rep.isolated) == (1, frozenset({0}), 3)
    assert not rep.has_factor
    rep = deficiency(standard_graph("cycle", 4), 2)
    assert (rep.value, rep.best_set) == (0, frozenset())
    rep = deficiency(extremal_remark51(2, 0), 2)
    assert (rep.value, rep.best_set) == (2, frozenset({0, 1}))


def test_deficiency_trivial_graphs():
    assert deficiency(empty(0), 2).value == 0
    assert deficiency(complete(1), 2).value == 2
    assert deficiency(empty(3), 2).value == 6
    assert deficiency(complete(2), 2).value == 0


def test_deficiency_never_negative_and_integer():
    rep = deficiency(standard_graph("path", 5), 3)
    assert rep.value == 0 and type(rep.value) is int
    assert deficiency(standard_graph("star", 4), 3).value == 0  # K_{1,3} is itself a star


def test_deficiency_guards():
    with pytest.raises(InvalidParameters):
        deficiency(complete(3), 1)
    with pytest.raises(TooLarge):
        deficiency(empty(30), 2)


@pytest.mark.parametrize("k", [2, 3])
def test_deficiency_matches_brute_on_corpus_sample(corpus, k):
    rng = random.Random(k)
    for g in rng.sample(corpus, 300):
        rep = deficiency(g, k)
        val, mask = brute_deficiency(g, k)
        assert rep.value == val
        assert to_mask(rep.best_set) == mask
        assert objective(g, k, mask) == (val, rep.isolated)


@given(graphs(max_n=9), st.integers(2, 4))
def test_deficiency_matches_brute(g, k):
    rep = deficiency(g, k)
    val, mask = brute_deficiency(g, k)
    assert (rep.value, to_mask(rep.best_set)) == (val, mask)
    assert rep.value >= 0


@given(graphs(max_n=9))
def test_deficiency_monotone_under_edge_addition(g):
    # adding edges can only destroy isolated vertices
    full = complete(g.n) if g.n else g
    assert deficiency(full, 2).value <= deficiency(g, 2).value


def test_exact_criterion_verdict():
    v = check_thm11(standard_graph("star", 5), 2)
    assert v.applicable and v.holds is False
    assert v.witness == {"violating_set": [0], "isolated": 4, "deficiency": 3}
    v = check_thm11(standard_graph("cycle", 6), 2)
    assert v.holds and v.witness["violating_set"] == []
    assert has_factor_thm11(complete(5), 2)
    assert not has_factor_thm11(join(complete(2), empty(6)), 2)


# -- independence ------------------------------------------------------------------------

def test_alpha_examples():
    assert independence_number(standard_graph("cycle", 6)) == 3
    assert independence_number(join(complete(2), empty(6))) == 6
    assert list(independent_sets_of_size(complete(3), 2)) == []
    assert independence_number(empty(0)) == 0
    assert list(independent_sets_of_size(empty(2), 0)) == [frozenset()]


@given(graphs(max_n=11))
def test_alpha_matches_brute(g):
    mis = maximum_independent_set(g)
    assert all(not g.has_edge(u, v) for u, v in combinations(mis, 2))
    assert len(mis) == brute_alpha(g)


@given(graphs(max_n=9), st.integers(0, 5))
def test_independent_sets_complete(g, size):
    got = list(independent_sets_of_size(g, size))
    expect = [frozenset(c) for c in combinations(range(g.n), size)
              if all(not g.has_edge(u, v) for u, v in combinations(c, 2))]
    assert got == expect


def test_mis_within():
    g = standard_graph("path", 5)
    assert maximum_independent_set(g, within=0b01110) == frozenset({1, 3})


# -- connectivity --------------------------------------------------------------------------

def test_t_connected_examples():
    c5 = standard_graph("cycle", 5)
    assert is_t_connected(c5, 2) and not is_t_connected(c5, 3)
    assert is_t_connected(complete(4), 3) and not is_t_connected(complete(4), 4)
    assert not is_t_connected(standard_graph("star", 4), 2)
    assert is_t_connected(empty(1), 0) and not is_t_connected(empty(0), 0)
    with pytest.raises(InvalidParameters):
        is_t_connected(c5, -1)


@given(graphs(min_n=1, max_n=8), st.integers(0, 4))
def test_t_connected_matches_networkx(g, t):
    h = to_nx(g)
    kappa = nx.node_connectivity(h) if g.n > 1 else 0
    expect = g.n >= t + 1 and (t == 0 or kappa >= t)
    if g.n == t + 1 and t > 0:
        expect = nx.is_connected(h) and kappa >= t
    assert is_t_connected(g, t) == expect


# -- edge-count condition -----------------------------------------------------------------

def test_threshold_values():
    assert extremal_edge_threshold(9, 2, 1) == 18
    assert extremal_edge_threshold(11, 2, 2) == comb(5, 2) + 2 * 6 == 22
    with pytest.raises(InvalidParameters):
        extremal_edge_threshold(3, 2, 2)


def test_order_bound():
    # 2kn >= (2k^2+5k+1)t + k^2+5k+2 ; k=2,t=1: 4n >= 19+16=35
    assert not thm13_order_ok(8, 2, 1)
    assert thm13_order_ok(9, 2, 1)


def test_edge_condition_examples():
    assert check_thm13(complete(9), 2, 1).holds
    v = check_thm13(extremal_remark31(9, 2, 1), 2, 1)
    assert v.applicable and v.holds is False
    assert v.witness == {"t": 1, "edges": 18, "threshold": 18}
    assert not check_thm13(complete(8), 2, 1).applicable
    assert not check_thm13(complete(9), 2, 2).applicable
    assert not check_thm13(union(complete(5), complete(5)), 2, 1).applicable
    v = check_thm13(standard_graph("path", 10), 3, 1)
    assert v.applicable and v.holds is False


@pytest.mark.parametrize("seed", range(60))
def test_edge_condition_sound_on_random_graphs(seed):
    rng = random.Random(seed)
    k = rng.choice([2, 3])
    t = rng.randint(1, k - 1)
    n = rng.randint(9, 12)
    g = random_gnp(n, rng.uniform(0.6, 0.95), seed)
    v = check_thm13(g, k, t)
    if v.applicable and v.holds:
        assert has_factor_thm11(g, k)


@given(st.integers(2, 4), st.data())
def test_edge_condition_sound_dense_graphs(k, data):
    t = data.draw(st.integers(1, k - 1))
    n = data.draw(st.integers(9, 14))
    pairs = list(combinations(range(n), 2))
    missing = data.draw(st.sets(st.sampled_from(pairs), max_size=2 * n))
    g = new_graph(n, [e for e in pairs if e not in missing])
    v = check_thm13(g, k, t)
    if v.applicable and v.holds:
        assert deficiency(g, k).value == 0


# -- degree and independence conditions ---------------------------------------------------

def test_degree_condition_examples():
    assert thm14_set_size(2, 3) == 8
    v = check_thm14(extremal_remark41(2, 3), 2)
    assert v.applicable and v.holds is False
    assert v.witness["independent_set"] == list(range(3, 11))
    assert v.witness["degrees"] == [3] * 8
    v = check_thm14(complete(5), 2)
    assert v.holds and v.witness["vacuous"]
    assert not check_thm14(empty(3), 2).applicable
    assert not check_thm14(empty(0), 2).applicable


@given(graphs(min_n=1, max_n=9), st.integers(2, 3))
def test_degree_condition_matches_definition(g, k):
    v = check_thm14(g, k)
    if not g.n or min(g.degrees()) == 0:
        assert not v.applicable
        return
    need = thm14_set_size(k, min(g.degrees()))
    expect = all(any((2 * k + 3) * g.degree(x) >= 2 * g.n for x in s)
                 for s in independent_sets_of_size(g, need))
    assert v.holds == expect


def test_alpha_condition_examples():
    v = check_thm15(extremal_remark51(2, 0), 2)
    assert v.holds is False and v.witness == {"delta": 2, "alpha": 6}
    assert check_thm15(standard_graph("cycle", 6), 2).holds
    assert check_thm15(join(complete(2), empty(6)), 2).holds is False
    assert not check_thm15(empty(0), 2).applicable


@given(graphs(min_n=1, max_n=9), st.integers(2, 4))
def test_conditions_sound(g, k):
    rep = deficiency(g, k)
    for v in (check_thm14(g, k), check_thm15(g, k)):
        if v.applicable and v.holds:
            assert rep.value == 0, v


def test_integer_witnesses():
    g = extremal_remark41(2, 3)
    for v in (check_thm13(g, 2, 1), check_thm14(g, 2), check_thm15(g, 2), check_thm11(g, 2)):
        for val in v.witness.values():
            assert not isinstance(val, float)


# -- extremal constructions ---------------------------------------------------------------

def all_ok(rows):
    bad = [r for r in rows if not r[1]]
    assert not bad, bad
    return True


@pytest.mark.parametrize("n,k,t", [(9, 2, 1), (10, 2, 1), (11, 3, 1), (12, 3, 2)])
def test_edge_extremal_rows(n, k, t):
    assert all_ok(verify_remark31(n, k, t))


@pytest.mark.parametrize("k,delta", [(2, 1), (2, 3), (3, 1), (3, 3)])
def test_degree_extremal_rows(k, delta):
    assert all_ok(verify_remark41(k, delta))


@pytest.mark.parametrize("k,t", [(2, 0), (2, 1), (3, 0), (3, 1)])
def test_alpha_extremal_rows(k, t):
    assert all_ok(verify_remark51(k, t))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_g1_rows(k):
    for t in range(1, k):
        for s in range(t + 1, t + 3):
            for n in g1_window(k, t, s, headroom=3):
                assert all_ok(verify_g1(n, k, s))


def test_g1_margin_and_window():
    w = g1_window(2, 1, 2)
    assert w.start == 9 and len(w) == 11
    assert g1_margin(9, 2, 1, 2) == 18 - 15  # G1(9,2,2) = K2 v (K1 u 6K1)
    assert g1_margin(9, 2, 1, 1) == 0
