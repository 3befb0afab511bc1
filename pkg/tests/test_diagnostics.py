from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from turanbooks.constructions import enumerate_g0_c3, enumerate_g1_b2, krr_graph, turan_graph
from turanbooks.diagnostics import (
    EpsilonParams,
    _sign_x_plus_b_sqrt,
    as_fraction,
    containment_report,
    epsilon_ok,
    extremal_structure_report,
    intersection_lower_bound,
    internal_degree_sets,
    low_degree_set,
)
from turanbooks.graph import cycle_graph
from turanbooks.properties import max_cut_exact


def test_as_fraction():
    assert as_fraction("6e-5") == Fraction(6, 100000)
    assert as_fraction(6e-5) == Fraction(6, 100000)
    assert as_fraction(Fraction(1, 3)) == Fraction(1, 3)


@given(st.fractions(-50, 50), st.fractions(-50, 50), st.integers(0, 40))
def test_sign_on_perfect_squares(x, b, root):
    eps = Fraction(root, 7) ** 2
    value = x + b * Fraction(root, 7)
    assert _sign_x_plus_b_sqrt(x, b, eps) == (value > 0) - (value < 0)


def test_epsilon_ok_boundaries():
    # 60 r sqrt(eps) < 1 for r >= 2, i.e. eps < 1/(3600 r^2); for r = 1 the 90 term binds
    assert not epsilon_ok(2, Fraction(1, 14400))
    assert epsilon_ok(2, Fraction(1, 14400) - Fraction(1, 10**12))
    assert not epsilon_ok(1, Fraction(1, 8100))
    assert epsilon_ok(1, Fraction(1, 8101))
    assert epsilon_ok(2, "6e-5")
    with pytest.raises(ValueError):
        epsilon_ok(0, "0.001")


def test_low_degree_threshold_is_exact():
    # n = 10, eps = 1/64: threshold (1/2 - 4/8) * 10 = 0, so only isolated vertices qualify
    g = cycle_graph(9)
    g.n, g.rows = 10, g.rows + [0]
    assert low_degree_set(g, EpsilonParams.of(Fraction(1, 64), 1)) == {9}
    # eps = 1/256: threshold (1/2 - 1/4) * 8 = 2, so degree 2 is included
    assert low_degree_set(cycle_graph(8), EpsilonParams.of(Fraction(1, 256), 1)) == set(range(8))


def test_internal_degree_sets_on_c5():
    g = cycle_graph(5)
    cut = max_cut_exact(g)
    # threshold 3.5 * sqrt(eps) * 5 = 0.875 at eps = 1/400
    w1, w2, w = internal_degree_sets(g, cut, EpsilonParams.of(Fraction(1, 400), 1))
    inside = [v for v in range(5) if any(g.has_edge(v, u) and ((cut.side_mask >> u) & 1) == ((cut.side_mask >> v) & 1) for u in range(5))]
    assert w == set(inside) and len(w) == 2 and w1 | w2 == w


def test_containment_on_c5():
    rep = containment_report(cycle_graph(5), EpsilonParams.of("0.01", 1))
    assert rep.cut_kind == "exact" and rep.internal == 1
    assert rep.checks == {
        "cut_internal_le_eps_n2": False,
        "W_subset_L": True,
        "L_subset_VC": True,
        "shortest_odd_cycle_is_triangle": False,
    }


def test_containment_on_bipartite_input():
    rep = containment_report(turan_graph(10, 2), EpsilonParams.of("0.0001", 1))
    assert rep.internal == 0 and rep.cycle is None
    assert rep.checks["L_subset_VC"] is None
    assert not rep.passed


def test_containment_heuristic_cut_for_large_n():
    rep = containment_report(krr_graph(101, 2), EpsilonParams.of("6e-5", 2), restarts=2)
    assert rep.cut_kind == "heuristic" and rep.internal == 2
    assert rep.L == [100] and rep.W == [] and rep.cycle == [0, 50, 100]


def test_intersection_lower_bound():
    assert intersection_lower_bound([5, 5, 5], 6) == 3
    assert intersection_lower_bound([2, 2], 6) == 0
    assert intersection_lower_bound([4], 6) == 4
    with pytest.raises(ValueError):
        intersection_lower_bound([7], 6)
    with pytest.raises(ValueError):
        intersection_lower_bound([], 6)


def test_structure_report_on_families():
    rep = extremal_structure_report(krr_graph(15, 3), 3)
    assert rep.passed and rep.sum_s == rep.target_s == 8
    for g in enumerate_g1_b2(12):
        assert extremal_structure_report(g, 1).passed


def test_structure_report_errors():
    with pytest.raises(ValueError, match="bipartite"):
        extremal_structure_report(turan_graph(10, 2), 1)
    with pytest.raises(ValueError, match="length 5"):
        extremal_structure_report(enumerate_g0_c3(9)[0], 1)
