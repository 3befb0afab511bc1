"""Exact Turán-type maxima for small n.

``solve`` grows graphs one vertex at a time.  Every graph ``G`` on ``m+1``
vertices with at least ``L[m+1]`` edges arises from some graph on ``m``
vertices by adding a vertex of minimum degree, and deleting a minimum-degree
vertex leaves at least ``L[m] = L[m+1] - floor(2 L[m+1] / (m+1))`` edges.
So each level only keeps (canonical representatives of) graphs above the
threshold, and a new vertex is only ever attached with degree no larger than
any other degree in the child.  Constraints closed under vertex deletion
(book, clique, odd girth, cycle) are enforced while extending; the
"non-bipartite" and "not k-colorable" requirements only at the last level.

The target value ``t`` starts at an upper bound and decreases until a pass
finds a feasible graph; that pass returns every graph with ``t`` edges, i.e.
the full extremal set.  ``naive_oracle`` is an independent brute force over
all labeled graphs for ``n <= 7``.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .canon import CERT_CAP, canonical_certificate, canonical_form
from .graph import Graph, bits, parse_graph6
from .properties import (
    _clique_search,
    booksize,
    contains_clique,
    has_cycle_of_length,
    is_bipartite,
    is_k_colorable,
    odd_girth,
    path_end_masks,
)

#: Default largest n accepted by ``solve``.
SEARCH_CAP = 12
#: Largest n accepted by ``naive_oracle``.
ORACLE_CAP = 7


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchProblem:
    """Vertex count plus a conjunction of constraints.

    ``max_booksize=r`` forbids B_{r+1}; ``forbid_clique=q`` forbids K_q;
    ``min_odd_girth=g`` forbids odd cycles shorter than ``g``;
    ``forbid_cycle=L`` forbids C_L as a subgraph; ``require_non_bipartite``
    and ``require_non_k_partite=k`` ask for chromatic number above 2 or k.
    """

    n: int
    max_booksize: int | None = None
    forbid_clique: int | None = None
    min_odd_girth: int | None = None
    forbid_cycle: int | None = None
    require_non_bipartite: bool = False
    require_non_k_partite: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if (self.max_booksize is None and self.forbid_clique is None
                and self.min_odd_girth is None and self.forbid_cycle is None):
            raise ValueError("at least one forbidden-structure constraint is required")
        if self.max_booksize is not None and self.max_booksize < 0:
            raise ValueError("max_booksize must be nonnegative")
        if self.forbid_clique is not None and self.forbid_clique < 2:
            raise ValueError("forbid_clique must be at least 2")
        if self.min_odd_girth is not None and (self.min_odd_girth < 3 or self.min_odd_girth % 2 == 0):
            raise ValueError("min_odd_girth must be an odd integer >= 3")
        if self.forbid_cycle is not None and self.forbid_cycle < 3:
            raise ValueError("forbid_cycle must be at least 3")
        if self.require_non_bipartite and self.n < 3:
            raise ValueError("non-bipartite graphs need n >= 3")
        if self.require_non_k_partite is not None and self.require_non_k_partite < 1:
            raise ValueError("require_non_k_partite must be at least 1")

    def key(self) -> str:
        """Canonical one-line serialization, e.g. ``n=7 max_booksize=1 non_bipartite``."""
        parts = [f"n={self.n}"]
        for name in ("max_booksize", "forbid_clique", "min_odd_girth", "forbid_cycle"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if self.require_non_bipartite:
            parts.append("non_bipartite")
        if self.require_non_k_partite is not None:
            parts.append(f"non_k_partite={self.require_non_k_partite}")
        return " ".join(parts)

    @classmethod
    def from_key(cls, text: str) -> "SearchProblem":
        kwargs: dict = {}
        for tok in text.split():
            if tok == "non_bipartite":
                kwargs["require_non_bipartite"] = True
            elif tok.startswith("non_k_partite="):
                kwargs["require_non_k_partite"] = int(tok.split("=", 1)[1])
            else:
                name, value = tok.split("=", 1)
                kwargs[name] = int(value)
        return cls(**kwargs)

    def satisfied_by(self, g: Graph) -> bool:
        """Full (non-incremental) check of every constraint."""
        if g.n != self.n:
            return False
        if self.max_booksize is not None and booksize(g) > self.max_booksize:
            return False
        if self.forbid_clique is not None and contains_clique(g, self.forbid_clique):
            return False
        if self.min_odd_girth is not None:
            og = odd_girth(g)
            if og is not None and og < self.min_odd_girth:
                return False
        if self.forbid_cycle is not None and has_cycle_of_length(g, self.forbid_cycle):
            return False
        if self.require_non_bipartite and is_bipartite(g):
            return False
        if self.require_non_k_partite is not None and is_k_colorable(g, self.require_non_k_partite):
            return False
        return True

    def upper_bound(self) -> int:
        """Trivial bound, tightened to floor(n^2/4) when booksize <= r and n >= 6r."""
        bound = self.n * (self.n - 1) // 2
        r = self.max_booksize
        if r is not None and self.n >= 6 * r:
            bound = min(bound, self.n * self.n // 4)
        return bound


@dataclass
class SearchOutcome:
    problem: str
    max_edges: int | None
    extremal: list[bytes]
    explored: int
    elapsed: float
    exact: bool
    passes: list[int] = field(default_factory=list)

    @property
    def graph6(self) -> list[str]:
        return [c.decode("ascii") for c in self.extremal]

    def graphs(self) -> list[Graph]:
        return [parse_graph6(c) for c in self.extremal]


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def _thresholds(n: int, t: int) -> list[int]:
    L = [0] * (n + 1)
    L[n] = t
    for m in range(n - 1, 0, -1):
        L[m] = max(0, L[m + 1] - (2 * L[m + 1]) // (m + 1))
    return L


def _extensions(rows: list[int], problem: SearchProblem, need: int):
    """Neighbour masks for a new vertex of minimum degree, at least ``need``."""
    m = len(rows)
    degs = [r.bit_count() for r in rows]
    hi = min([m] + [d + 1 for d in degs])
    lo = max(need, 0)
    if lo > hi:
        return
    r = problem.max_booksize
    q = problem.forbid_clique
    if r is not None:
        saturated = []
        for a in range(m):
            s = 0
            for b in bits(rows[a]):
                if (rows[a] & rows[b]).bit_count() >= r:
                    s |= 1 << b
            saturated.append(s)
    if problem.forbid_cycle is not None:
        pair_block = path_end_masks(Graph(m, rows), problem.forbid_cycle - 2)

    def addable(mask: int, v: int) -> bool:
        if r is not None:
            if mask & saturated[v]:
                return False
            if (rows[v] & mask).bit_count() > r:
                return False
            for u in bits(mask & rows[v]):
                if (rows[u] & mask).bit_count() + 1 > r:
                    return False
        if q is not None:
            sub = mask & rows[v]
            if q == 2 or (q == 3 and sub):
                return False
            if q > 3 and _clique_search(rows, list(range(m)), sub, q - 2):
                return False
        if problem.forbid_cycle is not None and mask & pair_block[v]:
            return False
        return True

    for d in range(lo, hi + 1):
        forced = 0
        for u in range(m):
            if degs[u] < d:
                forced |= 1 << u
        if forced.bit_count() > d:
            continue
        stack = [(0, 0, 0)]
        while stack:
            i, mask, cnt = stack.pop()
            if cnt == d:
                if not forced & ~mask:
                    yield mask
                continue
            if m - i < d - cnt:
                continue
            if not forced >> i & 1:
                stack.append((i + 1, mask, cnt))
            if addable(mask, i):
                stack.append((i + 1, mask | (1 << i), cnt + 1))


def _expand(args):
    """Children of a batch of parents: list of (cert, rows) plus count generated."""
    parents, problem, need_at = args
    out = []
    generated = 0
    for rows in parents:
        m = len(rows)
        e = sum(x.bit_count() for x in rows) // 2
        for mask in _extensions(rows, problem, need_at - e):
            generated += 1
            child = [x | (1 << m) if mask >> u & 1 else x for u, x in enumerate(rows)]
            child.append(mask)
            g = Graph(m + 1, child)
            if problem.min_odd_girth is not None:
                og = odd_girth(g)
                if og is not None and og < problem.min_odd_girth:
                    continue
            cert, canon = canonical_form(g)
            out.append((cert, canon.rows))
    return out, generated


def _run_pass(problem: SearchProblem, t: int, budget: int | None, explored: int, threads: int):
    n = problem.n
    L = _thresholds(n, t)
    level: dict[bytes, list[int]] = {b"@": [0]}
    executor = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        for m in range(1, n):
            reach = (n - m) * m + (n - m) * (n - m - 1) // 2
            parents = [level[c] for c in sorted(level)
                       if sum(x.bit_count() for x in level[c]) // 2 + reach >= t]
            nxt: dict[bytes, list[int]] = {}
            if executor is None:
                batches = [[p] for p in parents]
                results = map(_expand, ((b, problem, L[m + 1]) for b in batches))
            else:
                size = max(1, len(parents) // (4 * threads))
                batches = [parents[i:i + size] for i in range(0, len(parents), size)]
                results = executor.map(_expand, ((b, problem, L[m + 1]) for b in batches))
            for children, generated in results:
                explored += generated
                for cert, rows in children:
                    nxt.setdefault(cert, rows)
                if budget is not None and explored > budget:
                    raise BudgetExceeded(explored)
            level = nxt
            if not level:
                break
    finally:
        if executor is not None:
            executor.shutdown()
    found = []
    for cert in sorted(level):
        g = Graph(n, level[cert])
        if g.edge_count < t:
            continue
        if problem.require_non_bipartite and is_bipartite(g):
            continue
        if problem.require_non_k_partite is not None and is_k_colorable(g, problem.require_non_k_partite):
            continue
        found.append((cert, g))
    return found, explored


def solve(problem: SearchProblem, budget: int | None = None, threads: int = 1,
          cap: int = SEARCH_CAP) -> SearchOutcome:
    """Maximum edge count and all extremal graphs (up to isomorphism).

    ``budget`` bounds the number of generated children; when it runs out the
    outcome has ``exact=False`` and whatever the search had established.
    """
    n = problem.n
    if n > min(cap, CERT_CAP):
        raise ValueError(f"search supports n <= {min(cap, CERT_CAP)}, got {n}")
    started = time.perf_counter()
    explored = 0
    passes = []
    best: list = []
    exact = True
    t = problem.upper_bound()
    try:
        while t >= 0:
            passes.append(t)
            found, explored = _run_pass(problem, t, budget, explored, threads)
            if found:
                best = found
                break
            t -= 1
    except BudgetExceeded as exc:
        explored = exc.args[0]
        exact = False
    elapsed = time.perf_counter() - started
    if best:
        max_edges = max(g.edge_count for _, g in best)
        extremal = sorted(c for c, g in best if g.edge_count == max_edges)
        graphs = [g for c, g in best if g.edge_count == max_edges]
    else:
        max_edges, extremal, graphs = None, [], []
    for g in graphs:
        if g.edge_count != max_edges or not problem.satisfied_by(g):
            raise RuntimeError(f"post-hoc validation failed for {problem.key()}")
    return SearchOutcome(problem.key(), max_edges, extremal, explored, elapsed, exact, passes)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _all_labeled(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    edges = np.bitwise_count(masks).astype(np.int64)
    book = np.zeros(masks.shape, dtype=np.int64)
    for (a, b), i in index.items():
        common = np.zeros(masks.shape, dtype=np.int64)
        for c in range(n):
            if c in (a, b):
                continue
            j = index[tuple(sorted((a, c)))]
            k = index[tuple(sorted((b, c)))]
            common += (masks >> i) & (masks >> j) & (masks >> k) & 1
        np.maximum(book, common, out=book)
    return pairs, index, masks, edges, book


def _pair_mask(index: dict, vertices_pairs) -> int:
    m = 0
    for a, b in vertices_pairs:
        m |= 1 << index[(min(a, b), max(a, b))]
    return m


def _cycle_masks(n: int, index: dict, length: int) -> list[int]:
    out = set()
    for verts in itertools.combinations(range(n), length):
        first = verts[0]
        for rest in itertools.permutations(verts[1:]):
            if rest[0] > rest[-1]:
                continue
            cyc = (first,) + rest
            out.add(_pair_mask(index, zip(cyc, cyc[1:] + cyc[:1])))
    return sorted(out)


def _set_partitions(n: int, k: int):
    """Restricted growth strings with at most ``k`` blocks."""
    def rec(prefix, used):
        if len(prefix) == n:
            yield prefix
            return
        for c in range(min(used + 1, k)):
            yield from rec(prefix + [c], max(used, c + 1))
    yield from rec([], 0)


def _colorable(n: int, index: dict, masks: np.ndarray, k: int) -> np.ndarray:
    ok = np.zeros(masks.shape, dtype=bool)
    for coloring in _set_partitions(n, k):
        mono = _pair_mask(index, ((a, b) for a, b in index if coloring[a] == coloring[b]))
        ok |= (masks & mono) == 0
    return ok


def naive_oracle(problem: SearchProblem) -> SearchOutcome:
    """Brute force over all 2^(n choose 2) labeled graphs (n <= 7)."""
    n = problem.n
    if n > ORACLE_CAP:
        raise ValueError(f"naive oracle supports n <= {ORACLE_CAP}, got {n}")
    started = time.perf_counter()
    pairs, index, masks, edges, book = _all_labeled(n)
    keep = np.ones(masks.shape, dtype=bool)
    if problem.max_booksize is not None:
        keep &= book <= problem.max_booksize
    if problem.forbid_clique is not None:
        for verts in itertools.combinations(range(n), problem.forbid_clique):
            cm = _pair_mask(index, itertools.combinations(verts, 2))
            keep &= (masks & cm) != cm
    if problem.min_odd_girth is not None:
        for length in range(3, problem.min_odd_girth, 2):
            if length > n:
                break
            for cm in _cycle_masks(n, index, length):
                keep &= (masks & cm) != cm
    if problem.forbid_cycle is not None and problem.forbid_cycle <= n:
        for cm in _cycle_masks(n, index, problem.forbid_cycle):
            keep &= (masks & cm) != cm
    if problem.require_non_bipartite:
        keep &= ~_colorable(n, index, masks, 2)
    if problem.require_non_k_partite is not None:
        keep &= ~_colorable(n, index, masks, problem.require_non_k_partite)
    if not keep.any():
        return SearchOutcome(problem.key(), None, [], int(masks.size),
                             time.perf_counter() - started, True)
    max_edges = int(edges[keep].max())
    winners = masks[keep & (edges == max_edges)]
    certs = set()
    for m in winners.tolist():
        g = Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if m >> i & 1))
        certs.add(canonical_certificate(g))
    return SearchOutcome(problem.key(), max_edges, sorted(certs), int(masks.size),
                         time.perf_counter() - started, True)
