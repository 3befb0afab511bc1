"""Compare closed-form Turán values and extremal families with exact search."""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_certificate
from .constructions import (
    enumerate_g0_c3,
    enumerate_g1_b2,
    krr_graph,
    turan_dot_c3,
    turan_edge_count,
    turan_graph,
)
from .search import SearchOutcome, SearchProblem, solve

MATCH = "MATCH"
VALUE_MATCH_ONLY = "VALUE-MATCH-ONLY"
MISMATCH = "MISMATCH"
INCONCLUSIVE = "INCONCLUSIVE"

THEOREM_TAGS = ("thm1", "thm2", "th0", "th00", "thm3", "thm4", "th6", "main")


@dataclass
class TheoremReport:
    tag: str
    params: dict
    problem: str
    formula: int
    searched: int | None
    exact: bool
    status: str
    hypothesis: str
    family_size: int | None = None
    extremal_count: int = 0
    family_contained: bool | None = None
    set_equal: bool | None = None
    extremal: list[str] = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "tag": self.tag, "params": self.params, "problem": self.problem,
            "formula": self.formula, "searched": self.searched, "exact": self.exact,
            "status": self.status, "hypothesis": self.hypothesis,
            "family_size": self.family_size, "extremal_count": self.extremal_count,
            "family_contained": self.family_contained, "set_equal": self.set_equal,
            "extremal": self.extremal,
        }


def _need(params: dict, *names: str) -> list[int]:
    missing = [x for x in names if params.get(x) is None]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")
    return [int(params[x]) for x in names]


def theorem_setup(tag: str, params: dict):
    """(problem, formula value, family graphs or None, hypothesis text)."""
    if tag == "thm1":
        (n,) = _need(params, "n")
        return SearchProblem(n, forbid_clique=3), n * n // 4, [turan_graph(n, 2)], "all n"
    if tag == "thm2":
        (n,) = _need(params, "n")
        fam = enumerate_g0_c3(n) if n >= 5 else []
        return (SearchProblem(n, max_booksize=0, require_non_bipartite=True),
                (n - 1) ** 2 // 4 + 1, fam, "all n (family characterization for n >= 5)")
    if tag == "th0":
        k, n = _need(params, "k", "n")
        if k < 1:
            raise ValueError("k must be positive")
        met = k >= 2 and n >= 4 * k - 2
        return (SearchProblem(n, forbid_cycle=2 * k + 1), n * n // 4, [turan_graph(n, 2)],
                f"k >= 2 and n >= {4 * k - 2}: {'met' if met else 'not met'}")
    if tag == "th00":
        k, n = _need(params, "k", "n")
        if k < 1:
            raise ValueError("k must be positive")
        met = k >= 2 and n >= 318 * k
        return (SearchProblem(n, forbid_cycle=2 * k + 1, require_non_bipartite=True),
                (n - 2) ** 2 // 4 + 3, [turan_dot_c3(n)] if n >= 5 else [],
                f"k >= 2 and n >= {318 * k}: {'met' if met else 'not met'}")
    if tag == "thm3":
        r, n = _need(params, "r", "n")
        if not 1 <= r <= n:
            raise ValueError("need 1 <= r <= n")
        return (SearchProblem(n, forbid_clique=r + 1), turan_edge_count(n, r),
                [turan_graph(n, r)], "all n")
    if tag == "thm4":
        r, n = _need(params, "r", "n")
        if r < 2:
            raise ValueError("need r >= 2")
        met = n >= 2 * r + 1
        return (SearchProblem(n, forbid_clique=r + 1, require_non_k_partite=r),
                turan_edge_count(n, r) - n // r + 1, None,
                f"n >= {2 * r + 1}: {'met' if met else 'not met'}")
    if tag == "th6":
        r, n = _need(params, "r", "n")
        met = n >= 6 * r
        return (SearchProblem(n, max_booksize=r), n * n // 4, [turan_graph(n, 2)],
                f"n >= {6 * r}: {'met' if met else 'not met'}")
    if tag == "main":
        r, n = _need(params, "r", "n")
        if r < 1:
            raise ValueError("need r >= 1")
        if r == 1:
            fam = enumerate_g1_b2(n) if n >= 5 else []
        else:
            fam = [krr_graph(n, r)] if (n - 1) // 2 >= r else []
        return (SearchProblem(n, max_booksize=r, require_non_bipartite=True),
                (n - 1) ** 2 // 4 + 2 * r, fam, "n sufficiently large (no explicit bound)")
    raise ValueError(f"unknown theorem tag {tag!r}; choose from {', '.join(THEOREM_TAGS)}")


def compare(tag: str, params: dict, outcome: SearchOutcome) -> TheoremReport:
    problem, formula, family, hypothesis = theorem_setup(tag, params)
    found = set(outcome.extremal)
    report = TheoremReport(tag, dict(params), problem.key(), formula, outcome.max_edges,
                           outcome.exact, MISMATCH, hypothesis,
                           extremal_count=len(found), extremal=outcome.graph6)
    if family is not None:
        fam = {canonical_certificate(g) for g in family}
        report.family_size = len(fam)
        report.family_contained = fam <= found
        report.set_equal = fam == found
    if not outcome.exact:
        report.status = INCONCLUSIVE
    elif outcome.max_edges == formula:
        report.status = MATCH if report.set_equal in (None, True) else VALUE_MATCH_ONLY
    return report


def verify_theorem(tag: str, budget: int | None = None, threads: int = 1, **params) -> TheoremReport:
    """Run the search for ``tag`` at the given parameters and compare it with
    the closed form (and the characterized extremal family, if there is one)."""
    problem, _, _, _ = theorem_setup(tag, params)
    return compare(tag, params, solve(problem, budget=budget, threads=threads))
