"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line, and the
lines are repeated in the pytest terminal summary."""

import random
import time

import pytest

from turanbooks.canon import canonical_certificate
from turanbooks.constructions import (
    enumerate_g0_c3,
    enumerate_g1_b2,
    g0_c3,
    g0_c3_swapped,
    g1_b2,
    krr_graph,
    turan_dot_c3,
    turan_graph,
)
from turanbooks.diagnostics import EpsilonParams, containment_report, epsilon_ok, extremal_structure_report
from turanbooks.graph import emit_graph6, parse_graph6
from turanbooks.properties import (
    booksize,
    cut_from_mask,
    cut_local_search,
    has_triangle,
    is_bipartite,
    max_cut_exact,
    odd_girth,
)
from turanbooks.search import SearchProblem, naive_oracle, solve
from conftest import ACCEPTANCE_LINES, random_graph


def report(label, ok, detail=""):
    line = f"criterion {label}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_1_construction_identities():
    failures = []
    with Timer() as t:
        for n in range(2, 201):
            if turan_graph(n, 2).edge_count != n * n // 4:
                failures.append(f"turan n={n}")
            for r in range(1, min(10, (n - 1) // 2) + 1):
                if krr_graph(n, r).edge_count != (n - 1) ** 2 // 4 + 2 * r:
                    failures.append(f"krr n={n} r={r}")
            if n < 5:
                continue
            if turan_dot_c3(n).edge_count != (n - 2) ** 2 // 4 + 3:
                failures.append(f"turandotc3 n={n}")
            a, b = (n - 3) // 2, n - 3 - (n - 3) // 2
            g0 = [g0_c3(n, t1) for t1 in range(1, b)] + [g0_c3_swapped(n, s1) for s1 in range(1, a)]
            if any(g.edge_count != (n - 1) ** 2 // 4 + 1 for g in g0):
                failures.append(f"g0c3 n={n}")
            g1 = [g1_b2(n, s1, t1) for s1 in range(a + 1) for t1 in range(b + 1) if s1 * t1 <= 1]
            if any(g.edge_count != (n - 1) ** 2 // 4 + 2 for g in g1):
                failures.append(f"g1b2 n={n}")
    ok = not failures and t.elapsed < 1.0
    report(1, ok, f"{len(failures)} identity failures, {t.elapsed:.2f}s of 1s")
    assert not failures
    assert t.elapsed < 1.0


def test_criterion_2_family_properties():
    failures = []
    with Timer() as t:
        for n in range(5, 65):
            for r in range(1, 4):
                if (n - 1) // 2 < r:
                    continue
                g = krr_graph(n, r)
                if booksize(g) != r or is_bipartite(g) or odd_girth(g) != 3:
                    failures.append(f"krr n={n} r={r}")
            a, b = (n - 3) // 2, n - 3 - (n - 3) // 2
            for g in [g0_c3(n, t1) for t1 in range(1, b)] + [g0_c3_swapped(n, s1) for s1 in range(1, a)]:
                if has_triangle(g) or is_bipartite(g) or odd_girth(g) != 5:
                    failures.append(f"g0c3 n={n} {emit_graph6(g)}")
            for g in enumerate_g1_b2(n):
                if booksize(g) != 1 or is_bipartite(g):
                    failures.append(f"g1b2 n={n} {emit_graph6(g)}")
    report(2, not failures and t.elapsed < 10, f"{len(failures)} failures, {t.elapsed:.2f}s of 10s")
    assert not failures
    assert t.elapsed < 10


def oracle_grid():
    grid = []
    for n in range(1, 8):
        for b in (0, 1, 2):
            for nb in (False, True):
                if not (nb and n < 3):
                    grid.append(SearchProblem(n, max_booksize=b, require_non_bipartite=nb))
        for q in (3, 4):
            for non2 in (False, True):
                for non3 in (None, 3):
                    if not (non2 and n < 3):
                        grid.append(SearchProblem(n, forbid_clique=q, require_non_bipartite=non2,
                                                  require_non_k_partite=non3))
    return grid


def test_criterion_3_oracle_equivalence():
    mismatches = []
    grid = oracle_grid()
    with Timer() as t:
        for p in grid:
            a, b = solve(p), naive_oracle(p)
            if (a.max_edges, a.extremal, a.exact) != (b.max_edges, b.extremal, True):
                mismatches.append(p.key())
    report(3, not mismatches and t.elapsed < 1800,
           f"{len(grid) - len(mismatches)}/{len(grid)} problems agree, {t.elapsed:.1f}s")
    assert not mismatches
    assert t.elapsed < 1800


_PRISM = "n=6: the triangular prism also has 9 edges and booksize 1"


@pytest.mark.parametrize("n", [
    pytest.param(6, marks=pytest.mark.xfail(strict=True, reason=_PRISM)),
    7, 8, 9, 10,
])
def test_criterion_4_edwards_booksize_one(n):
    with Timer() as t:
        out = solve(SearchProblem(n, max_booksize=1))
    want = [canonical_certificate(turan_graph(n, 2))]
    ok = out.exact and out.max_edges == n * n // 4 and out.extremal == want
    report(f"4 (booksize <= 1, n={n})", ok and t.elapsed < 1200,
           f"max={out.max_edges} vs {n * n // 4}, extremal={out.graph6}, {t.elapsed:.2f}s")
    assert out.exact and out.max_edges == n * n // 4
    assert out.extremal == want
    assert t.elapsed < 1200


@pytest.mark.parametrize("n", range(5, 11))
def test_criterion_4_mantel(n):
    with Timer() as t:
        out = solve(SearchProblem(n, forbid_clique=3))
    want = [canonical_certificate(turan_graph(n, 2))]
    ok = out.exact and out.max_edges == n * n // 4 and out.extremal == want
    report(f"4 (triangle-free, n={n})", ok and t.elapsed < 1200,
           f"max={out.max_edges}, {len(out.extremal)} extremal, {t.elapsed:.2f}s")
    assert ok
    assert t.elapsed < 1200


@pytest.mark.parametrize("n", range(5, 11))
def test_criterion_5_non_bipartite_triangle_free(n):
    with Timer() as t:
        out = solve(SearchProblem(n, max_booksize=0, require_non_bipartite=True))
    value = (n - 1) ** 2 // 4 + 1
    family = {canonical_certificate(g) for g in enumerate_g0_c3(n)}
    found = set(out.extremal)
    contained = family <= found
    equal = family == found
    ok = out.exact and out.max_edges == value and contained
    report(f"5 (n={n})", ok and t.elapsed < 1200,
           f"max={out.max_edges} vs {value}, family {len(family)} in extremal {len(found)}: "
           f"{'contained' if contained else 'NOT contained'}, set equality {'yes' if equal else 'no'}")
    assert ok
    assert t.elapsed < 1200


def test_criterion_6_main_theorem_desk_scale():
    rows = []
    with Timer() as t:
        for n in range(7, 11):
            out = solve(SearchProblem(n, max_booksize=1, require_non_bipartite=True))
            bound = (n - 1) ** 2 // 4 + 2
            family = {canonical_certificate(g) for g in enumerate_g1_b2(n)}
            rows.append((n, out, bound, out.max_edges == bound, family == set(out.extremal), family))
    witness_ok = all(out.exact and out.max_edges is not None and out.max_edges >= bound
                     for _, out, bound, *_ in rows)
    # the family members are feasible witnesses for the bound
    feasible = all(SearchProblem(n, max_booksize=1, require_non_bipartite=True).satisfied_by(g)
                   and g.edge_count == (n - 1) ** 2 // 4 + 2
                   for n in range(7, 11) for g in enumerate_g1_b2(n))
    for n, out, bound, value_eq, set_eq, family in rows:
        print(f"  n={n}: search={out.max_edges} bound={bound} value equality={value_eq} "
              f"extremal={len(out.extremal)} family={len(family)} set equality={set_eq}")
    value_n = next((n for n, _, _, v, _, _ in rows if v), None)
    set_n = next((n for n, _, _, v, s, _ in rows if v and s), None)
    report(6, witness_ok and feasible and t.elapsed < 3600,
           f"witness bound holds for n=7..10; smallest n with value equality: {value_n}, "
           f"with value and extremal-set equality: {set_n}")
    assert witness_ok and feasible
    assert t.elapsed < 3600


def test_criterion_7_structure_equalities():
    failures = []
    checked = 0
    with Timer() as t:
        for n in range(11, 65):
            for r in range(1, 4):
                if (n - 1) // 2 >= r:
                    checked += 1
                    if not extremal_structure_report(krr_graph(n, r), r).passed:
                        failures.append(f"krr n={n} r={r}")
        for n in range(9, 21):
            for g in enumerate_g1_b2(n):
                checked += 1
                if not extremal_structure_report(g, 1).passed:
                    failures.append(f"g1b2 n={n} {emit_graph6(g)}")
    report(7, not failures and t.elapsed < 60,
           f"{checked - len(failures)}/{checked} graphs pass, {t.elapsed:.2f}s")
    assert not failures
    assert t.elapsed < 60


def test_criterion_8_degree_diagnostics():
    n = 601
    params = EpsilonParams.of("6e-5", 2)
    with Timer() as t:
        g = krr_graph(n, 2)
        rep = containment_report(g, params)
    checks = {
        "epsilon_ok": epsilon_ok(2, "6e-5"),
        "internal == 2": rep.internal == 2,
        "internal <= eps n^2": rep.internal <= params.epsilon * n * n,
        "L == {v0}": rep.L == [n - 1],
        "W empty": rep.W == [],
        "W in L in V(C)": set(rep.W) <= set(rep.L) <= set(rep.cycle or []),
        "|V(C)| == 3": rep.cycle is not None and len(rep.cycle) == 3,
        "report checks": rep.passed,
    }
    failed = [k for k, v in checks.items() if not v]
    report(8, not failed and t.elapsed < 60,
           f"cut={rep.cut_kind} internal={rep.internal} L={rep.L} W={rep.W} C={rep.cycle}, "
           f"{t.elapsed:.2f}s" + (f"; failed: {failed}" if failed else ""))
    assert not failed
    assert t.elapsed < 60


def test_criterion_9_infrastructure_properties():
    rng = random.Random(9)
    problems = []
    with Timer() as t:
        graphs = [random_graph(rng, rng.randint(0, 12), rng.random()) for _ in range(1000)]
        if any(parse_graph6(emit_graph6(g)) != g for g in graphs):
            problems.append("graph6 round trip")
        for g in graphs[:50]:
            cert = canonical_certificate(g)
            for _ in range(100):
                perm = list(range(g.n))
                rng.shuffle(perm)
                if canonical_certificate(g.relabel(perm)) != cert:
                    problems.append(f"certificate {emit_graph6(g)}")
                    break
        for g in graphs[:300]:
            h = g.copy()
            prev = booksize(h)
            missing = [(u, v) for u in range(h.n) for v in range(u + 1, h.n) if not h.has_edge(u, v)]
            rng.shuffle(missing)
            for u, v in missing[:10]:
                h.add_edge(u, v)
                cur = booksize(h)
                if cur < prev:
                    problems.append(f"booksize monotonicity {emit_graph6(g)}")
                prev = cur
        extra = [krr_graph(601, 2), turan_graph(50, 2)]
        for g in graphs + extra:
            cuts = [cut_local_search(g, seed=1), cut_from_mask(g, rng.getrandbits(max(g.n, 1)))]
            if g.n <= 12:
                cuts.append(max_cut_exact(g))
            for c in cuts:
                if c.internal_S + c.internal_T + c.crossing != g.edge_count:
                    problems.append(f"cut accounting {emit_graph6(g)}")
    report(9, not problems and t.elapsed < 300,
           f"{len(problems)} violations over 1000 graphs, {t.elapsed:.2f}s")
    assert not problems
    assert t.elapsed < 300
