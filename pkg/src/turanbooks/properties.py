"""Graph predicates and metrics: books, bipartiteness, odd cycles, cliques,
colorings and cuts.  All functions are pure."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import Graph, bits

#: Largest n accepted by :func:`max_cut_exact`.
MAX_CUT_EXACT_CAP = 28
#: Largest n for exact colorability with k >= 3.
COLORING_CAP = 32


# ---------------------------------------------------------------------------
# books
# ---------------------------------------------------------------------------

def booksize(g: Graph) -> int:
    """Largest number of triangles sharing one edge (0 without triangles)."""
    rows = g.rows
    best = 0
    for u, row in enumerate(rows):
        x = row >> (u + 1)
        ru = rows[u]
        while x:
            low = x & -x
            x ^= low
            c = (ru & rows[u + low.bit_length()]).bit_count()
            if c > best:
                best = c
    return best


def is_b_free(g: Graph, r: int) -> bool:
    """True iff ``g`` contains no book of ``r + 1`` triangles."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return booksize(g) <= r


def has_triangle(g: Graph) -> bool:
    rows = g.rows
    for u, row in enumerate(rows):
        x = row >> (u + 1)
        while x:
            low = x & -x
            x ^= low
            if rows[u] & rows[u + low.bit_length()]:
                return True
    return False


# ---------------------------------------------------------------------------
# bipartiteness and odd cycles
# ---------------------------------------------------------------------------

def _bfs_color(g: Graph):
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(g.rows[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return None, (u, v, parent, depth)
    return color, None


def bipartite_witness(g: Graph) -> tuple[bool, list[int]]:
    """``(True, coloring)`` with a proper 0/1 coloring, or ``(False, cycle)``
    with the vertices of an odd cycle in order."""
    color, conflict = _bfs_color(g)
    if color is not None:
        return True, color
    u, v, parent, depth = conflict
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return False, left + right[-2::-1]


def is_bipartite(g: Graph) -> bool:
    return _bfs_color(g)[0] is not None


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or None for bipartite graphs."""
    if has_triangle(g):
        return 3
    rows = g.rows
    best = None
    for root in range(g.n):
        if best == 5:
            # triangle-free, so nothing shorter exists
            break
        visited = 1 << root
        frontier = 1 << root
        level = 0
        while frontier:
            if best is not None and 2 * level + 1 >= best:
                break
            if any(rows[v] & frontier for v in bits(frontier)):
                best = 2 * level + 1
                break
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= ~visited
            visited |= nxt
            frontier = nxt
            level += 1
    return best


def shortest_odd_cycle(g: Graph) -> list[int] | None:
    """Lexicographically smallest vertex sequence of a shortest odd cycle."""
    length = odd_girth(g)
    if length is None:
        return None
    rows = g.rows
    n = g.n
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << s) - 1)
        # within[j]: allowed vertices at distance <= j from s
        within = [1 << s]
        frontier = 1 << s
        seen = frontier
        for _ in range(length):
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
            within.append(seen)
        path = [s]

        def extend(used: int) -> bool:
            k = len(path)
            last = path[-1]
            if k == length:
                return bool(rows[last] >> s & 1)
            cand = rows[last] & allowed & ~used & within[length - k]
            for x in bits(cand):
                path.append(x)
                if extend(used | (1 << x)):
                    return True
                path.pop()
            return False

        if extend(1 << s):
            return path
    raise AssertionError("odd girth found but no cycle realizes it")


# ---------------------------------------------------------------------------
# cliques and colorings
# ---------------------------------------------------------------------------

def _clique_search(rows: list[int], order: list[int], cand: int, q: int) -> bool:
    if q == 0:
        return True
    if cand.bit_count() < q:
        return False
    for v in order:
        if not cand >> v & 1:
            continue
        cand &= ~(1 << v)
        sub = cand & rows[v]
        if sub.bit_count() >= q - 1 and _clique_search(rows, order, sub, q - 1):
            return True
        if cand.bit_count() < q:
            return False
    return False


def contains_clique(g: Graph, q: int) -> bool:
    """True iff K_q is a subgraph of ``g``."""
    if q < 1:
        raise ValueError("q must be at least 1")
    if q == 1:
        return g.n >= 1
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))
    cand = 0
    for v in range(g.n):
        if degs[v] >= q - 1:
            cand |= 1 << v
    return _clique_search(g.rows, order, cand, q)


def clique_number(g: Graph) -> int:
    q = 0
    while q < g.n and contains_clique(g, q + 1):
        q += 1
    return q


def _components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(bits(comp))
    return comps


def k_coloring(g: Graph, k: int) -> list[int] | None:
    """A proper coloring with colors ``0 .. k-1``, or None if none exists.

    Exact backtracking (saturation order, new colors opened one at a time),
    run per connected component; exponential in the worst case.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k <= 2:
        if k == 1:
            return [0] * g.n if g.edge_count == 0 else None
        ok, witness = bipartite_witness(g)
        return witness if ok else None
    if g.n > COLORING_CAP:
        raise ValueError(f"exact {k}-colorability supports n <= {COLORING_CAP}")
    rows = g.rows
    color = [-1] * g.n
    degs = g.degrees()

    def solve(todo: list[int], used: int) -> bool:
        if not todo:
            return True
        # most constrained vertex first
        best, best_key = None, None
        for v in todo:
            sat = len({color[u] for u in bits(rows[v]) if color[u] >= 0})
            key = (sat, degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        rest = [v for v in todo if v != best]
        forbidden = {color[u] for u in bits(rows[best]) if color[u] >= 0}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[best] = c
            if solve(rest, max(used, c + 1)):
                return True
        color[best] = -1
        return False

    for comp in _components(g):
        if not solve(comp, 0):
            return None
    return color


def is_k_colorable(g: Graph, k: int) -> bool:
    return k_coloring(g, k) is not None


# ---------------------------------------------------------------------------
# cuts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutPartition:
    """Two-sided vertex partition; vertex ``v`` is in ``T`` iff bit ``v`` of
    ``side_mask`` is set, otherwise in ``S``."""

    n: int
    side_mask: int
    internal_S: int
    internal_T: int
    crossing: int

    @property
    def internal(self) -> int:
        return self.internal_S + self.internal_T

    @property
    def S(self) -> list[int]:
        return [v for v in range(self.n) if not self.side_mask >> v & 1]

    @property
    def T(self) -> list[int]:
        return bits(self.side_mask)


def cut_from_mask(g: Graph, side_mask: int) -> CutPartition:
    full = (1 << g.n) - 1
    t_mask = side_mask & full
    s_mask = full ^ t_mask
    in_s = in_t = 0
    for v, row in enumerate(g.rows):
        if t_mask >> v & 1:
            in_t += (row & t_mask).bit_count()
        else:
            in_s += (row & s_mask).bit_count()
    in_s //= 2
    in_t //= 2
    return CutPartition(g.n, t_mask, in_s, in_t, g.edge_count - in_s - in_t)


def max_cut_exact(g: Graph) -> CutPartition:
    """Maximum cut by exhaustive enumeration (vertex ``n-1`` fixed in ``S``).

    Ties go to the numerically smallest side mask.
    """
    n = g.n
    if n > MAX_CUT_EXACT_CAP:
        raise ValueError(f"exact max cut supports n <= {MAX_CUT_EXACT_CAP}, got {n}")
    if n <= 1:
        return cut_from_mask(g, 0)
    free = n - 1
    total = 1 << free
    full = (1 << n) - 1
    rows = np.array(g.rows, dtype=np.int64)
    chunk = 1 << 20
    best_val, best_mask = None, 0
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        comp = full ^ masks
        same = np.zeros(masks.shape, dtype=np.int64)
        for v in range(n):
            in_t = (masks >> v) & 1
            same += np.where(in_t == 1,
                             np.bitwise_count(rows[v] & masks),
                             np.bitwise_count(rows[v] & comp))
        i = int(np.argmin(same))
        val = int(same[i])
        if best_val is None or val < best_val:
            best_val, best_mask = val, int(masks[i])
    return cut_from_mask(g, best_mask)


def cut_local_search(g: Graph, seed: int = 0, start: int | None = None) -> CutPartition:
    """Single-vertex-move hill climbing to a local optimum.

    Starts from ``start`` (a side mask) when given, otherwise from a random
    assignment drawn from ``seed``.  Vertices are scanned in index order and
    moved whenever that lowers the number of internal edges.
    """
    n = g.n
    full = (1 << n) - 1
    if start is None:
        mask = random.Random(seed).getrandbits(n) if n else 0
    else:
        mask = start & full
    rows = g.rows
    improved = True
    while improved:
        improved = False
        for v in range(n):
            in_t = mask >> v & 1
            t_nb = (rows[v] & mask).bit_count()
            s_nb = rows[v].bit_count() - t_nb
            same, other = (t_nb, s_nb) if in_t else (s_nb, t_nb)
            if same > other:
                mask ^= 1 << v
                improved = True
    return cut_from_mask(g, mask)


def greedy_cut_start(g: Graph) -> int:
    """Side mask from a BFS sweep placing each vertex opposite the majority of
    its already placed neighbours."""
    placed = 0
    mask = 0
    for root in range(g.n):
        if placed >> root & 1:
            continue
        queue = deque([root])
        placed |= 1 << root
        while queue:
            u = queue.popleft()
            done = g.rows[u] & placed
            if u != root:
                t_nb = (done & mask).bit_count()
                if t_nb < done.bit_count() - t_nb:
                    mask |= 1 << u
            for v in bits(g.rows[u] & ~placed):
                placed |= 1 << v
                queue.append(v)
    return mask


def is_turan_graph(g: Graph, k: int) -> bool:
    """True iff ``g`` is the complete ``k``-partite graph with balanced parts
    (its complement is a disjoint union of ``k`` balanced cliques)."""
    if not 1 <= k <= g.n:
        return False
    comp = g.complement()
    sizes = []
    for part in _components(comp):
        pmask = sum(1 << v for v in part)
        if any(comp.rows[v] != pmask & ~(1 << v) for v in part):
            return False
        sizes.append(len(part))
    return len(sizes) == k and max(sizes) - min(sizes) <= 1


def _simple_paths_from(rows: list[int], start: int, length: int, allowed: int):
    """Yield end vertices of simple paths with exactly ``length`` edges."""
    stack = [(start, 1 << start, 0)]
    while stack:
        v, used, k = stack.pop()
        if k == length:
            yield v
            continue
        for w in bits(rows[v] & allowed & ~used):
            stack.append((w, used | (1 << w), k + 1))


def path_end_masks(g: Graph, length: int) -> list[int]:
    """``out[a]`` has bit ``b`` set iff a simple ``a``-``b`` path of exactly
    ``length`` edges exists."""
    full = (1 << g.n) - 1
    out = []
    for a in range(g.n):
        m = 0
        for b in _simple_paths_from(g.rows, a, length, full):
            m |= 1 << b
        out.append(m)
    return out


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """True iff ``g`` has a cycle with exactly ``length`` vertices as a subgraph."""
    if length < 3:
        raise ValueError("cycles have length at least 3")
    rows = g.rows
    full = (1 << g.n) - 1
    for s in range(g.n):
        allowed = full & ~((1 << (s + 1)) - 1)
        for end in _simple_paths_from(rows, s, length - 1, allowed):
            if end != s and rows[end] >> s & 1:
                return True
    return False
