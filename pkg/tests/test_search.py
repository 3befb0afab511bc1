import pytest
from hypothesis import given, strategies as st

from turanbooks.canon import canonical_certificate
from turanbooks.constructions import turan_graph
from turanbooks.search import ORACLE_CAP, SEARCH_CAP, SearchProblem, naive_oracle, solve


def test_problem_validation():
    with pytest.raises(ValueError):
        SearchProblem(5)
    with pytest.raises(ValueError):
        SearchProblem(0, max_booksize=1)
    with pytest.raises(ValueError):
        SearchProblem(5, min_odd_girth=4)
    with pytest.raises(ValueError):
        SearchProblem(5, forbid_clique=1)
    with pytest.raises(ValueError):
        SearchProblem(2, max_booksize=0, require_non_bipartite=True)


problems = st.fixed_dictionaries({
    "n": st.integers(3, 12),
    "max_booksize": st.one_of(st.none(), st.integers(0, 3)),
    "forbid_clique": st.one_of(st.none(), st.integers(2, 5)),
    "min_odd_girth": st.one_of(st.none(), st.sampled_from([3, 5, 7])),
    "forbid_cycle": st.one_of(st.none(), st.integers(3, 7)),
    "require_non_bipartite": st.booleans(),
    "require_non_k_partite": st.one_of(st.none(), st.integers(1, 4)),
}).filter(lambda kw: any(kw[k] is not None for k in
                         ("max_booksize", "forbid_clique", "min_odd_girth", "forbid_cycle"))
          ).map(lambda kw: SearchProblem(**kw))


@given(problems)
def test_key_round_trip(p):
    assert SearchProblem.from_key(p.key()) == p


def test_key_format():
    assert SearchProblem(7, max_booksize=1, require_non_bipartite=True).key() == "n=7 max_booksize=1 non_bipartite"


# values frozen from the brute-force oracle (all labeled graphs)
ORACLE_VALUES = [
    (SearchProblem(6, max_booksize=1), 9, ["EFz_", "ELv_"]),
    (SearchProblem(7, max_booksize=1, require_non_bipartite=True), 11,
     ["F@Vn_", "F@vf_", "FBY^G", "FBYmg", "FKNN_"]),
    (SearchProblem(7, forbid_clique=4, require_non_k_partite=3), 15, ["FLr~o"]),
    (SearchProblem(7, forbid_clique=3, require_non_bipartite=True), 10, ["FBY^?"]),
    (SearchProblem(7, min_odd_girth=5), 12, ["F?~v_"]),
    (SearchProblem(7, forbid_cycle=5), 12, ["F?~v_", "FJaNw"]),
    (SearchProblem(7, forbid_cycle=5, require_non_bipartite=True), 12, ["FJaNw"]),
    (SearchProblem(7, max_booksize=2, require_non_bipartite=True), 15, ["FLr~o"]),
]


@pytest.mark.parametrize("problem,value,certs", ORACLE_VALUES, ids=lambda x: getattr(x, "key", lambda: None)())
def test_frozen_values(problem, value, certs):
    for outcome in (solve(problem), naive_oracle(problem)):
        assert outcome.max_edges == value
        assert outcome.graph6 == certs
        assert outcome.exact


@pytest.mark.parametrize("n", range(3, 7))
@pytest.mark.parametrize("kw", [
    {"min_odd_girth": 5}, {"forbid_cycle": 4}, {"forbid_cycle": 5, "require_non_bipartite": True},
    {"max_booksize": 1, "forbid_clique": 4}, {"forbid_clique": 3, "require_non_k_partite": 1},
])
def test_solve_matches_oracle(n, kw):
    p = SearchProblem(n, **kw)
    a, b = solve(p), naive_oracle(p)
    assert (a.max_edges, a.extremal) == (b.max_edges, b.extremal)


def test_infeasible_problem_has_no_extremal_graph():
    # triangle-free graphs on 7 vertices are all 3-colorable
    out = solve(SearchProblem(7, forbid_clique=3, require_non_k_partite=3))
    assert out.max_edges is None and out.extremal == [] and out.exact


def test_extremal_graphs_satisfy_problem():
    p = SearchProblem(9, max_booksize=1, require_non_bipartite=True)
    out = solve(p)
    assert out.max_edges == 18
    assert all(p.satisfied_by(g) and g.edge_count == 18 for g in out.graphs())
    assert [canonical_certificate(g) for g in out.graphs()] == out.extremal


def test_budget_marks_outcome_inexact():
    out = solve(SearchProblem(9, max_booksize=1), budget=5)
    assert not out.exact and out.explored > 5


def test_threads_give_identical_results():
    p = SearchProblem(9, max_booksize=1, require_non_bipartite=True)
    a, b = solve(p), solve(p, threads=2)
    assert (a.max_edges, a.extremal, a.explored) == (b.max_edges, b.extremal, b.explored)


def test_caps():
    with pytest.raises(ValueError):
        solve(SearchProblem(SEARCH_CAP + 1, max_booksize=1))
    with pytest.raises(ValueError):
        naive_oracle(SearchProblem(ORACLE_CAP + 1, max_booksize=1))


def test_mantel_small():
    for n in range(2, 9):
        out = solve(SearchProblem(n, forbid_clique=3))
        assert out.max_edges == n * n // 4
        assert out.extremal == [canonical_certificate(turan_graph(n, 2))]
