import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from turanbooks.constructions import enumerate_g0_c3, krr_graph, turan_graph
from turanbooks.graph import Graph, complete_bipartite, complete_graph, cycle_graph, path_graph
from turanbooks.properties import (
    COLORING_CAP,
    MAX_CUT_EXACT_CAP,
    bipartite_witness,
    booksize,
    clique_number,
    contains_clique,
    cut_from_mask,
    cut_local_search,
    greedy_cut_start,
    has_cycle_of_length,
    has_triangle,
    is_b_free,
    is_bipartite,
    is_k_colorable,
    is_turan_graph,
    k_coloring,
    max_cut_exact,
    odd_girth,
    path_end_masks,
    shortest_odd_cycle,
)
from conftest import graphs, random_graph, to_nx


def brute_booksize(g):
    return max((len(g.common_neighbors(u, v)) for u, v in g.edges()), default=0)


def brute_cycle_lengths(g):
    lengths = set()
    for cyc in nx.simple_cycles(to_nx(g)):
        if len(cyc) >= 3:
            lengths.add(len(cyc))
    return lengths


def brute_chromatic(g):
    for k in range(0, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    return g.n


@given(graphs())
def test_booksize_matches_common_neighbour_count(g):
    assert booksize(g) == brute_booksize(g)
    assert has_triangle(g) == (booksize(g) > 0)
    assert is_b_free(g, booksize(g)) and (booksize(g) == 0 or not is_b_free(g, booksize(g) - 1))


@given(graphs(max_n=9))
def test_odd_girth_and_cycles_match_networkx(g):
    lengths = brute_cycle_lengths(g)
    odd = sorted(x for x in lengths if x % 2)
    assert odd_girth(g) == (odd[0] if odd else None)
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))
    for length in range(3, g.n + 1):
        assert has_cycle_of_length(g, length) == (length in lengths)
    cyc = shortest_odd_cycle(g)
    if cyc is None:
        assert not odd
    else:
        assert len(cyc) == odd[0] and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


@given(graphs())
def test_bipartite_witness(g):
    ok, w = bipartite_witness(g)
    if ok:
        assert all(w[u] != w[v] for u, v in g.edges())
    else:
        assert len(w) % 2 == 1 and len(set(w)) == len(w)
        assert all(g.has_edge(a, b) for a, b in zip(w, w[1:] + w[:1]))


@given(graphs())
def test_clique_number_matches_networkx(g):
    expect = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert clique_number(g) == expect
    assert contains_clique(g, expect) if expect else True
    assert not contains_clique(g, expect + 1)


@given(graphs(max_n=7))
def test_colorability_matches_brute_force(g):
    chi = brute_chromatic(g)
    for k in range(1, 5):
        col = k_coloring(g, k)
        assert (col is not None) == (k >= chi)
        if col is not None:
            assert all(col[u] != col[v] and 0 <= col[u] < k for u, v in g.edges())


def test_coloring_known_graphs():
    assert not is_k_colorable(cycle_graph(5), 2)
    assert is_k_colorable(cycle_graph(5), 3)
    # the Grötzsch graph is triangle-free with chromatic number 4
    gr = nx.mycielski_graph(4)
    g = Graph.from_edges(gr.number_of_nodes(), gr.edges())
    assert not has_triangle(g)
    assert not is_k_colorable(g, 3) and is_k_colorable(g, 4)
    with pytest.raises(ValueError):
        is_k_colorable(path_graph(COLORING_CAP + 1), 3)
    assert is_k_colorable(path_graph(500), 2)


def brute_max_cut(g):
    best = None
    for mask in range(1 << max(g.n - 1, 0)):
        c = cut_from_mask(g, mask)
        if best is None or c.internal < best:
            best = c.internal
    return best


@given(graphs(max_n=10))
def test_max_cut_exact_matches_enumeration(g):
    cut = max_cut_exact(g)
    assert cut.internal == brute_max_cut(g)
    assert cut.internal_S + cut.internal_T + cut.crossing == g.edge_count
    assert sorted(cut.S + cut.T) == list(range(g.n))


def test_max_cut_cap_and_known_values():
    assert max_cut_exact(cycle_graph(5)).internal == 1
    assert max_cut_exact(complete_graph(6)).crossing == 9
    assert max_cut_exact(krr_graph(15, 2)).internal == 2
    with pytest.raises(ValueError):
        max_cut_exact(path_graph(MAX_CUT_EXACT_CAP + 1))


@given(graphs(), st.integers(0, 1000))
def test_local_search_reaches_local_optimum(g, seed):
    cut = cut_local_search(g, seed=seed)
    assert cut.internal_S + cut.internal_T + cut.crossing == g.edge_count
    for v in range(g.n):
        moved = cut_from_mask(g, cut.side_mask ^ (1 << v))
        assert moved.internal >= cut.internal
    assert cut_local_search(g, seed=seed) == cut


def test_local_search_on_large_graphs():
    g = krr_graph(601, 2)
    assert cut_local_search(g, start=greedy_cut_start(g)).internal == 2
    assert cut_local_search(turan_graph(50, 2), seed=1).internal == 0


def test_is_turan_graph():
    assert is_turan_graph(turan_graph(9, 3), 3)
    assert is_turan_graph(complete_bipartite(4, 4), 2)
    assert not is_turan_graph(complete_bipartite(3, 5), 2)
    assert not is_turan_graph(turan_graph(9, 3), 2)
    assert not is_turan_graph(cycle_graph(5), 2)
    assert not is_turan_graph(Graph(3), 4)


def test_path_end_masks():
    p = path_graph(4)
    masks = path_end_masks(p, 3)
    assert masks[0] == 1 << 3 and masks[1] == 0
    with pytest.raises(ValueError):
        has_cycle_of_length(p, 2)


def test_family_invariants():
    assert booksize(krr_graph(20, 3)) == 3
    assert shortest_odd_cycle(krr_graph(9, 1)) == [0, 4, 8]
    for g in enumerate_g0_c3(9):
        assert not has_triangle(g) and odd_girth(g) == 5


def test_booksize_monotone_under_edge_additions(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(3, 12), 0.3)
        before = booksize(g)
        u, v = rng.sample(range(g.n), 2)
        assert booksize(g.copy().add_edge(u, v)) >= before
