"""Canonical labeling by partition refinement and individualization.

The search follows the usual individualization-refinement scheme: refine
the degree partition to an equitable one, then branch on the vertices of
the first non-singleton cell.  Leaves are compared by their relabeled
adjacency rows and the smallest wins.  Automorphisms discovered when two
leaves coincide prune sibling branches (orbit pruning) and let the search
jump back to the node where the current path left the first or best path.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, bits, emit_graph6

#: Largest vertex count accepted by the certificate path.
CERT_CAP = 64


def _refine(rows: list[int], cells: list[int], queue) -> list[int]:
    """Refine an ordered partition (list of vertex bitmasks) to equitable form."""
    queue = deque(queue)
    n_vertices = sum(c.bit_count() for c in cells)
    while queue and len(cells) < n_vertices:
        splitter = queue.popleft()
        new_cells = []
        for c in cells:
            if c & (c - 1) == 0:
                new_cells.append(c)
                continue
            groups: dict[int, int] = {}
            x = c
            while x:
                low = x & -x
                x ^= low
                k = (rows[low.bit_length() - 1] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | low
            if len(groups) == 1:
                new_cells.append(c)
            else:
                frags = [groups[k] for k in sorted(groups)]
                new_cells.extend(frags)
                queue.extend(frags)
        cells = new_cells
    return cells


class _Canonizer:
    def __init__(self, g: Graph):
        self.n = g.n
        self.rows = g.rows
        self.first_key = None
        self.first_perm = None
        self.first_path = None
        self.best_key = None
        self.best_perm = None
        self.best_path = None
        self.generators: list[list[int]] = []

    def run(self) -> list[int]:
        n = self.n
        if n == 0:
            return []
        by_degree: dict[int, int] = {}
        for v, r in enumerate(self.rows):
            d = r.bit_count()
            by_degree[d] = by_degree.get(d, 0) | (1 << v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        cells = _refine(self.rows, cells, cells)
        self._seed_twin_generators()
        self._search(cells, [])
        return self.best_perm

    def _seed_twin_generators(self) -> None:
        # swapping two vertices with equal (open or closed) neighbourhoods is an automorphism
        for closed in (0, 1):
            classes: dict[int, list[int]] = {}
            for v, r in enumerate(self.rows):
                classes.setdefault(r | (closed << v), []).append(v)
            for members in classes.values():
                for a, b in zip(members, members[1:]):
                    gamma = list(range(self.n))
                    gamma[a], gamma[b] = b, a
                    self.generators.append(gamma)

    def _all_twin_cells(self, cells: list[int]) -> bool:
        """True when every non-singleton cell consists of mutual twins, so all
        leaves below this node relabel to the same graph."""
        for c in cells:
            if c & (c - 1) == 0:
                continue
            vs = bits(c)
            outside = self.rows[vs[0]] & ~c
            inside = self.rows[vs[0]] & c
            clique = inside != 0
            for v in vs:
                r = self.rows[v]
                if r & ~c != outside:
                    return False
                if (r & c) != ((c ^ (1 << v)) if clique else 0):
                    return False
        return True

    def _key(self, perm: list[int]) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, v in enumerate(perm):
            inv[v] = i
        key = []
        for v in perm:
            row = 0
            for w in bits(self.rows[v]):
                row |= 1 << inv[w]
            key.append(row)
        return tuple(key)

    def _orbits(self, prefix: list[int]) -> list[int]:
        """Orbit representative of every vertex under the known automorphisms
        that fix ``prefix`` pointwise."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if all(gamma[p] == p for p in prefix):
                for a in range(self.n):
                    ra, rb = find(a), find(gamma[a])
                    if ra != rb:
                        parent[ra] = rb
        return [find(a) for a in range(self.n)]

    @staticmethod
    def _common_prefix(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def _leaf(self, cells: list[int], path: list[int]) -> int:
        perm = [v for c in cells for v in bits(c)]
        key = self._key(perm)
        if self.first_key is None:
            self.first_key = self.best_key = key
            self.first_perm = self.best_perm = perm
            self.first_path = self.best_path = list(path)
            return -1
        for ref_key, ref_perm, ref_path in (
            (self.first_key, self.first_perm, self.first_path),
            (self.best_key, self.best_perm, self.best_path),
        ):
            if key == ref_key:
                gamma = [0] * self.n
                for a, b in zip(ref_perm, perm):
                    gamma[a] = b
                self.generators.append(gamma)
                return self._common_prefix(path, ref_path)
        if key < self.best_key:
            self.best_key = key
            self.best_perm = perm
            self.best_path = list(path)
        return -1

    def _search(self, cells: list[int], path: list[int]) -> int:
        if len(cells) == self.n or self._all_twin_cells(cells):
            return self._leaf(cells, path)
        ti = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[ti]
        depth = len(path)
        tried: list[int] = []
        orbit, known = None, -1
        for v in bits(target):
            if tried:
                if known != len(self.generators):
                    orbit, known = self._orbits(path), len(self.generators)
                if any(orbit[u] == orbit[v] for u in tried):
                    continue
            single = 1 << v
            child = cells[:ti] + [single, target ^ single] + cells[ti + 1:]
            child = _refine(self.rows, child, [single])
            jump = self._search(child, path + [v])
            tried.append(v)
            if 0 <= jump < depth:
                return jump
        return -1


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``perm[i]`` = original vertex placed at position ``i``."""
    if g.n > CERT_CAP:
        raise ValueError(f"canonical labeling supports n <= {CERT_CAP}, got {g.n}")
    return _Canonizer(g).run()


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    new_label = [0] * g.n
    for i, v in enumerate(order):
        new_label[v] = i
    return g.relabel(new_label)


def canonical_form(g: Graph) -> tuple[bytes, Graph]:
    """Certificate together with the canonically relabeled graph."""
    h = canonical_graph(g)
    return emit_graph6(h).encode("ascii"), h


def canonical_certificate(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal iff the graphs are isomorphic."""
    return canonical_form(g)[0]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if max(g.n, h.n) > CERT_CAP:
        raise ValueError(f"isomorphism test supports n <= {CERT_CAP}")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_certificate(g) == canonical_certificate(h)
