"""Degree-threshold diagnostics evaluated on concrete graphs.

For a graph ``G`` on ``n`` vertices, a book parameter ``r`` and a small
``eps``:

* ``L``: vertices of degree at most ``(1/2 - 4 sqrt(eps)) n``;
* for a cut ``S, T``: ``W1`` (resp. ``W2``) are the vertices of ``S``
  (resp. ``T``) with at least ``(7/2) sqrt(eps) n`` neighbours on their own
  side, and ``W = W1 + W2``;
* ``C``: a shortest odd cycle.

On an extremal non-bipartite B_{r+1}-free graph of large order one expects
``e(S) + e(T) <= eps n^2`` for a maximum cut, ``W`` inside ``L``, ``L``
inside ``V(C)`` and ``|C| = 3``.  The reports below only evaluate these
quantities; a FAIL on a small or non-extremal graph is not a contradiction.

Threshold comparisons are exact: ``eps`` is held as a Fraction and
inequalities involving ``sqrt(eps)`` are decided by squaring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

from .graph import Graph, bits
from .properties import (
    MAX_CUT_EXACT_CAP,
    CutPartition,
    bipartite_witness,
    cut_local_search,
    greedy_cut_start,
    is_turan_graph,
    max_cut_exact,
    odd_girth,
    shortest_odd_cycle,
)

DEFAULT_RESTARTS = 8


def as_fraction(value) -> Fraction:
    """Exact rational from a decimal string, int, Fraction or float (via its repr)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def _sign_x_plus_b_sqrt(x: Fraction, b: Fraction, eps: Fraction) -> int:
    """Sign of ``x + b * sqrt(eps)``."""
    def sgn(v):
        return (v > 0) - (v < 0)

    if b == 0 or eps == 0:
        return sgn(x)
    if b > 0:
        return 1 if x >= 0 else sgn(b * b * eps - x * x)
    return -1 if x <= 0 else sgn(x * x - b * b * eps)


@dataclass(frozen=True)
class EpsilonParams:
    epsilon: Fraction
    r: int

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.r < 1:
            raise ValueError("r must be at least 1")

    @classmethod
    def of(cls, epsilon, r: int) -> "EpsilonParams":
        return cls(as_fraction(epsilon), r)

    @property
    def admissible(self) -> bool:
        return epsilon_ok(self.r, self.epsilon)

    def low_degree_threshold(self, n: int) -> float:
        return (0.5 - 4 * sqrt(self.epsilon)) * n

    def internal_degree_threshold(self, n: int) -> float:
        return 3.5 * sqrt(self.epsilon) * n

    def cut_internal_cap(self, n: int) -> Fraction:
        return self.epsilon * n * n


def epsilon_ok(r: int, epsilon) -> bool:
    """``max(60 r sqrt(eps), 90 sqrt(eps)) < 1``, decided exactly."""
    eps = as_fraction(epsilon)
    if eps <= 0 or r < 1:
        raise ValueError("need epsilon > 0 and r >= 1")
    coef = 60 * max(Fraction(r), Fraction(3, 2))
    return _sign_x_plus_b_sqrt(Fraction(-1), coef, eps) < 0


def low_degree_set(g: Graph, params: EpsilonParams) -> set[int]:
    n = g.n
    out = set()
    for v in range(n):
        x = Fraction(g.degree(v)) - Fraction(n, 2)
        if _sign_x_plus_b_sqrt(x, Fraction(4 * n), params.epsilon) <= 0:
            out.add(v)
    return out


def internal_degree_sets(g: Graph, cut: CutPartition, params: EpsilonParams):
    """``(W1, W2, W)`` for the given cut."""
    if cut.n != g.n:
        raise ValueError("cut does not cover the graph")
    n = g.n
    t_mask = cut.side_mask
    s_mask = ((1 << n) - 1) ^ t_mask
    b = Fraction(-7 * n, 2)
    w1, w2 = set(), set()
    for v in range(n):
        own = t_mask if t_mask >> v & 1 else s_mask
        d_own = (g.rows[v] & own).bit_count()
        if _sign_x_plus_b_sqrt(Fraction(d_own), b, params.epsilon) >= 0:
            (w2 if own is t_mask else w1).add(v)
    return w1, w2, w1 | w2


def certified_cut(g: Graph, restarts: int = DEFAULT_RESTARTS,
                  seed: int = 0) -> tuple[CutPartition, str]:
    """Exact maximum cut when ``n <= 28``; otherwise the best local optimum from
    a greedy start and ``restarts`` random starts (seeds ``seed``, ``seed + 1``, ...)."""
    if g.n <= MAX_CUT_EXACT_CAP:
        return max_cut_exact(g), "exact"
    best = cut_local_search(g, start=greedy_cut_start(g))
    for s in range(seed, seed + restarts):
        cand = cut_local_search(g, seed=s)
        if cand.internal < best.internal:
            best = cand
    return best, "heuristic"


@dataclass
class ContainmentReport:
    n: int
    epsilon: Fraction
    r: int
    admissible: bool
    cut_kind: str
    cut: CutPartition
    internal: int
    internal_cap: Fraction
    L: list[int]
    W1: list[int]
    W2: list[int]
    W: list[int]
    S_tilde: list[int]
    T_tilde: list[int]
    cycle: list[int] | None
    checks: dict[str, bool | None] = field(default_factory=dict)
    extra: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is True for v in self.checks.values())

    def to_record(self) -> dict:
        return {
            "n": self.n, "epsilon": str(self.epsilon), "r": self.r,
            "admissible": self.admissible, "cut": self.cut_kind,
            "internal": self.internal, "internal_cap": float(self.internal_cap),
            "L": self.L, "W1": self.W1, "W2": self.W2, "W": self.W,
            "S_tilde_size": len(self.S_tilde), "T_tilde_size": len(self.T_tilde),
            "cycle": self.cycle, "checks": self.checks, "extra": self.extra,
        }


def containment_report(g: Graph, params: EpsilonParams,
                       restarts: int = DEFAULT_RESTARTS, seed: int = 0) -> ContainmentReport:
    n = g.n
    eps = params.epsilon
    cut, kind = certified_cut(g, restarts, seed)
    L = low_degree_set(g, params)
    W1, W2, W = internal_degree_sets(g, cut, params)
    S, T = set(cut.S), set(cut.T)
    cycle = shortest_odd_cycle(g)
    cap = params.cut_internal_cap(n)
    checks: dict[str, bool | None] = {
        "cut_internal_le_eps_n2": cut.internal <= cap,
        "W_subset_L": W <= L,
    }
    if cycle is None:
        checks["L_subset_VC"] = None
        checks["shortest_odd_cycle_is_triangle"] = None
    else:
        checks["L_subset_VC"] = L <= set(cycle)
        checks["shortest_odd_cycle_is_triangle"] = len(cycle) == 3
    # side sizes within (1/2 +- 3/2 sqrt(eps)) n; |L| <= sqrt(eps) n; |W| <= 4/7 sqrt(eps) n
    half = Fraction(n, 2)
    b = Fraction(3 * n, 2)
    sizes_ok = all(
        _sign_x_plus_b_sqrt(Fraction(len(side)) - half, -b, eps) <= 0
        and _sign_x_plus_b_sqrt(half - len(side), -b, eps) <= 0
        for side in (S, T)
    )
    extra = {
        "side_sizes_within_bounds": sizes_ok,
        "L_size_le_sqrt_eps_n": _sign_x_plus_b_sqrt(Fraction(len(L)), Fraction(-n), eps) <= 0,
        "W_size_le_4_7_sqrt_eps_n": _sign_x_plus_b_sqrt(Fraction(len(W)), Fraction(-4 * n, 7), eps) <= 0,
    }
    return ContainmentReport(
        n=n, epsilon=eps, r=params.r, admissible=params.admissible, cut_kind=kind,
        cut=cut, internal=cut.internal, internal_cap=cap,
        L=sorted(L), W1=sorted(W1), W2=sorted(W2), W=sorted(W),
        S_tilde=sorted(S - L - W), T_tilde=sorted(T - L - W),
        cycle=cycle, checks=checks, extra=extra,
    )


def intersection_lower_bound(sizes: list[int], universe: int) -> int:
    """Lower bound on ``|S1 & ... & Sk|`` from the sizes and a bound on the union:
    ``sum(sizes) - (k - 1) * universe``, floored at 0."""
    if not sizes:
        raise ValueError("need at least one set size")
    if universe < 0 or any(s < 0 or s > universe for s in sizes):
        raise ValueError("every size must lie in [0, universe]")
    return max(0, sum(sizes) - (len(sizes) - 1) * universe)


@dataclass
class StructureReport:
    cycle: list[int]
    gstar_bipartite: bool
    gstar_turan: bool
    labeling: tuple[int, int, int] | None = None
    s_star: list[int] = field(default_factory=list)
    t_star: list[int] = field(default_factory=list)
    sum_s: int | None = None
    sum_t: int | None = None
    target_s: int | None = None
    target_t: int | None = None
    valid_labelings: int = 0

    @property
    def equalities_hold(self) -> bool:
        return (self.labeling is not None and self.sum_s == self.target_s
                and self.sum_t == self.target_t)

    @property
    def upper_bounds_hold(self) -> bool:
        return (self.labeling is not None and self.sum_s <= self.target_s
                and self.sum_t <= self.target_t)

    @property
    def passed(self) -> bool:
        return self.equalities_hold and self.gstar_turan

    def to_record(self) -> dict:
        return {
            "cycle": self.cycle, "gstar_bipartite": self.gstar_bipartite,
            "gstar_turan": self.gstar_turan,
            "labeling": list(self.labeling) if self.labeling else None,
            "s_star_size": len(self.s_star), "t_star_size": len(self.t_star),
            "sum_s": self.sum_s, "target_s": self.target_s,
            "sum_t": self.sum_t, "target_t": self.target_t,
            "equalities_hold": self.equalities_hold,
            "upper_bounds_hold": self.upper_bounds_hold,
            "valid_labelings": self.valid_labelings,
        }


def extremal_structure_report(g: Graph, r: int) -> StructureReport:
    """Remove a shortest odd cycle (a triangle ``w1 w2 w3``), 2-color the rest
    into ``S*, T*`` and compare ``d_S*(w1) + d_S*(w3)`` with ``|S*| + r - 1``
    and ``d_T*(w2) + d_T*(w3)`` with ``|T*| + r - 1``.

    A labeling is valid when ``w1`` has all its remaining neighbours in
    ``S*`` and ``w2`` all of its in ``T*``; all six orders and both side
    orientations are tried, and the first valid one meeting both equalities
    is reported (else the first valid one).
    """
    og = odd_girth(g)
    if og is None:
        raise ValueError("graph is bipartite: no odd cycle to remove")
    if og != 3:
        raise ValueError(f"shortest odd cycle has length {og}, not 3")
    cycle = shortest_odd_cycle(g)
    rest = [v for v in range(g.n) if v not in cycle]
    gstar = g.induced(rest)
    ok, coloring = bipartite_witness(gstar)
    report = StructureReport(cycle=cycle, gstar_bipartite=ok,
                             gstar_turan=is_turan_graph(gstar, 2))
    if not ok:
        return report
    x_mask = sum(1 << rest[i] for i, c in enumerate(coloring) if c == 0)
    y_mask = sum(1 << rest[i] for i, c in enumerate(coloring) if c == 1)
    rest_mask = x_mask | y_mask
    chosen = None
    for w1, w2, w3 in itertools.permutations(cycle):
        for s_mask, t_mask in ((x_mask, y_mask), (y_mask, x_mask)):
            if g.rows[w1] & rest_mask & ~s_mask or g.rows[w2] & rest_mask & ~t_mask:
                continue
            report.valid_labelings += 1
            sum_s = (g.rows[w1] & s_mask).bit_count() + (g.rows[w3] & s_mask).bit_count()
            sum_t = (g.rows[w2] & t_mask).bit_count() + (g.rows[w3] & t_mask).bit_count()
            target_s = s_mask.bit_count() + r - 1
            target_t = t_mask.bit_count() + r - 1
            cand = ((w1, w2, w3), s_mask, t_mask, sum_s, sum_t, target_s, target_t)
            if chosen is None:
                chosen = cand
            if sum_s == target_s and sum_t == target_t and not (
                    chosen[3] == chosen[5] and chosen[4] == chosen[6]):
                chosen = cand
    if chosen is not None:
        (report.labeling, s_mask, t_mask, report.sum_s, report.sum_t,
         report.target_s, report.target_t) = chosen
        report.s_star, report.t_star = bits(s_mask), bits(t_mask)
    return report
