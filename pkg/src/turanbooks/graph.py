"""Simple undirected graphs with bit-packed adjacency rows.

Row ``v`` of a :class:`Graph` is a Python int whose bit ``u`` is set iff
``uv`` is an edge.  Vertices are ``0 .. n-1``.

Graphs are mutated only while they are being built (``add_edge``); every
other function in the package treats them as read-only values.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when graph6, edge-list or DOT input is malformed."""


class Graph:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        if rows is None:
            self.rows = [0] * n
        else:
            if len(rows) != n:
                raise ValueError("row count does not match n")
            self.rows = list(rows)

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, u: int, v: int) -> "Graph":
        """Add edge ``uv`` in place (idempotent) and return the graph."""
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u
        return self

    def join(self, u: int, vertices: Iterable[int]) -> "Graph":
        """Add edges from ``u`` to every vertex in ``vertices``."""
        self._check(u)
        rows, n, bit_u = self.rows, self.n, 1 << u
        mask = 0
        for v in vertices:
            if not 0 <= v < n or v == u:
                self.add_edge(u, v)  # raises the matching error
            rows[v] |= bit_u
            mask |= 1 << v
        rows[u] |= mask
        return self

    def copy(self) -> "Graph":
        return Graph(self.n, self.rows)

    # -- queries ------------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(map(int.bit_count, self.rows)) // 2

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def common_neighbors(self, u: int, v: int) -> set[int]:
        self._check(u)
        self._check(v)
        return set(bits(self.rows[u] & self.rows[v]))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabeled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        h = Graph(len(vertices))
        for i, v in enumerate(vertices):
            row = 0
            for w in bits(self.rows[v]):
                j = index.get(w)
                if j is not None:
                    row |= 1 << j
            h.rows[i] = row
        return h

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0 .. n-1")
        bit = [1 << p for p in perm]
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            rows[perm[v]] = sum(bit[w] for w in bits(r))
        return Graph(self.n, rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [(~r & full) & ~(1 << v) for v, r in enumerate(self.rows)])

    def check_invariants(self) -> None:
        """Raise AssertionError unless adjacency is symmetric and loop-free."""
        for v, row in enumerate(self.rows):
            assert not row >> v & 1, f"loop at {v}"
            assert row >> self.n == 0, f"row {v} has bits beyond n"
            for u in bits(row):
                assert self.rows[u] >> v & 1, f"asymmetric pair {u},{v}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def new_graph(n: int) -> Graph:
    return Graph(n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return g.add_edge(u, v)


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    return g.common_neighbors(u, v)


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` (nonnegative) in increasing order."""
    # scanning the reversed binary string beats bit tricks for dense rows
    return [i for i, c in enumerate(bin(x)[:1:-1]) if c == "1"]


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    g = Graph(a + b)
    for u in range(a):
        g.join(u, range(a, a + b))
    return g


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative n")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("n too large for graph6")


def emit_graph6(g: Graph) -> str:
    """graph6 text for ``g`` (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 string; an optional ``>>graph6<<`` header is allowed."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphFormatError(f"graph6 contains characters outside '?'..'~': {text!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size header")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are not zero")
    g = Graph(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                g.rows[i] |= 1 << j
                g.rows[j] |= 1 << i
            k += 1
    return g


# ---------------------------------------------------------------------------
# DOT and edge lists
# ---------------------------------------------------------------------------

def _dot_id(s: str) -> str:
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*|-?\d+", s):
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    """Undirected DOT text; every vertex gets a node line, every edge one ``--`` line."""
    if labels is not None and len(labels) != g.n:
        raise ValueError("need one label per vertex")
    lines = [f"graph {_dot_id(name)} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f"  {v} [label={_dot_id(str(labels[v]))}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*(\d+)\s*(\[.*\])?\s*;?\s*$")
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*(\[.*\])?\s*;?\s*$")


def parse_dot(text: str) -> Graph:
    """Parse the DOT subset written by :func:`emit_dot` (integer node ids)."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or not re.match(r"^(strict\s+)?graph\b.*\{$", lines[0]) or lines[-1] != "}":
        raise GraphFormatError("expected 'graph NAME {' ... '}'")
    nodes: set[int] = set()
    edges = []
    for ln in lines[1:-1]:
        if not ln or ln.startswith("//"):
            continue
        m = _DOT_EDGE.match(ln)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            edges.append((u, v))
            nodes.update((u, v))
            continue
        m = _DOT_NODE.match(ln)
        if m:
            nodes.add(int(m.group(1)))
            continue
        raise GraphFormatError(f"unsupported DOT line: {ln!r}")
    n = max(nodes) + 1 if nodes else 0
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def emit_edgelist(g: Graph) -> str:
    """``# n=<n>`` header followed by one ``u v`` line per edge."""
    return "".join([f"# n={g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def parse_edgelist(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines.  The vertex count comes from ``n``, a ``# n=`` header,
    or the largest index seen, in that order."""
    edges = []
    header_n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        ln = raw.strip()
        if not ln:
            continue
        if ln.startswith("#"):
            m = re.match(r"#\s*n\s*=\s*(\d+)", ln)
            if m:
                header_n = int(m.group(1))
            continue
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = header_n
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    try:
        return Graph.from_edges(n, edges)
    except (ValueError, IndexError) as exc:
        raise GraphFormatError(str(exc)) from exc
