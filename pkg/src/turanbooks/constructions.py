"""Deterministic constructors for the extremal families and their edge counts.

Labeling conventions (fixed so that graph6 output is reproducible):

* ``turan_graph(n, k)``: parts are consecutive blocks, larger parts first.
* ``g0_c3`` / ``g1_b2``: ``S*`` (the smaller part of the Turán graph on
  ``n - 3`` vertices) is ``0 .. |S*|-1``, ``T*`` follows, then ``w1, w2, w3``
  are ``n-3, n-2, n-1``.  ``S1``/``T1`` are the lowest-indexed vertices of
  their parts.
* ``krr_graph(n, r)``: part ``A`` of size ``floor((n-1)/2)`` first, part
  ``B`` next, apex ``v0 = n-1`` adjacent to the first ``r`` vertices of each.
* ``turan_dot_c3(n)``: the Turán graph on ``n - 2`` vertices, with the two
  new triangle vertices ``n-2, n-1`` attached to vertex ``0`` (in the larger
  part).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .canon import canonical_certificate
from .graph import Graph


def part_sizes(n: int, k: int) -> list[int]:
    """Balanced part sizes of the Turán graph, larger parts first."""
    q, rem = divmod(n, k)
    return [q + 1] * rem + [q] * (k - rem)


def turan_edge_count(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return n * (n - 1) // 2 - sum(s * (s - 1) // 2 for s in part_sizes(n, k))


def turan_graph(n: int, k: int) -> Graph:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    g = Graph(n)
    full = (1 << n) - 1
    start = 0
    for size in part_sizes(n, k):
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            g.rows[v] = full & ~block
        start += size
    return g


def _parts(m: int) -> tuple[int, int, int, int]:
    """Sizes and masks of the two parts of K_{floor(m/2), ceil(m/2)} on ``0 .. m-1``:
    ``S*`` is ``0 .. floor(m/2)-1`` and ``T*`` the rest."""
    a = m // 2
    smask = (1 << a) - 1
    return a, m - a, smask, ((1 << m) - 1) ^ smask


def _prefix(mask: int, k: int) -> int:
    """The ``k`` lowest set bits of ``mask`` (parts are contiguous ranges)."""
    low = (mask & -mask).bit_length() - 1 if mask else 0
    return ((1 << k) - 1) << low


def g0_c3(n: int, t1_size: int) -> Graph:
    """Member of the non-bipartite triangle-free family built on T_{n-3,2} plus a path
    ``w1 w2 w3``: ``w1`` joined to ``T1``, ``w2`` to ``T* minus T1``, ``w3`` to ``S*``.

    ``T*`` is the larger part; ``T1`` must be a nonempty proper subset of it.
    """
    if n < 5:
        raise ValueError(f"g0_c3 needs n >= 5, got {n}")
    a, b, smask, tmask = _parts(n - 3)
    if not 1 <= t1_size <= b - 1:
        raise ValueError(
            f"T1 must be a nonempty proper subset of T* (|T*|={b}), got size {t1_size}")
    w1, w2, w3 = 1 << (n - 3), 1 << (n - 2), 1 << (n - 1)
    t1 = _prefix(tmask, t1_size)
    rows = ([tmask | w3] * a + [smask | w1] * t1_size + [smask | w2] * (b - t1_size)
            + [t1 | w2, (tmask ^ t1) | w1 | w3, smask | w2])
    return Graph(n, rows)


def g0_c3_swapped(n: int, s1_size: int) -> Graph:
    """Same construction with the roles of the two Turán parts exchanged: the
    path ends split the smaller part and ``w3`` sees the whole larger part."""
    if n < 5:
        raise ValueError(f"g0_c3 needs n >= 5, got {n}")
    a, b, smask, tmask = _parts(n - 3)
    if not 1 <= s1_size <= a - 1:
        raise ValueError(
            f"subset must be nonempty and proper (part size {a}), got {s1_size}")
    w1, w2, w3 = 1 << (n - 3), 1 << (n - 2), 1 << (n - 1)
    s1 = _prefix(smask, s1_size)
    rows = ([tmask | w1] * s1_size + [tmask | w2] * (a - s1_size) + [smask | w3] * b
            + [s1 | w2, (smask ^ s1) | w1 | w3, tmask | w2])
    return Graph(n, rows)


def enumerate_g0_c3(n: int) -> list[Graph]:
    """All members of the triangle-free family up to isomorphism, either part
    playing the role of ``T*``.  Empty when neither part has two vertices."""
    a = (n - 3) // 2
    b = n - 3 - a
    graphs = [g0_c3(n, t) for t in range(1, b)]
    graphs += [g0_c3_swapped(n, s) for s in range(1, a)]
    return _dedupe(graphs)


def g1_b2(n: int, s1_size: int, t1_size: int) -> Graph:
    """Member of the B2-free family: T_{n-3,2} plus a triangle ``w1 w2 w3`` with
    ``w3`` joined to ``S1 + T1``, ``w1`` to ``S* minus S1`` and ``w2`` to
    ``T* minus T1``, where ``|S1| |T1| <= 1``."""
    if n < 5:
        raise ValueError(f"g1_b2 needs n >= 5, got {n}")
    a, b, smask, tmask = _parts(n - 3)
    if not 0 <= s1_size <= a or not 0 <= t1_size <= b:
        raise ValueError(f"subset sizes exceed parts ({a}, {b})")
    if s1_size * t1_size > 1:
        raise ValueError(f"need |S1|*|T1| <= 1, got {s1_size}*{t1_size}")
    w1, w2, w3 = 1 << (n - 3), 1 << (n - 2), 1 << (n - 1)
    s1, t1 = _prefix(smask, s1_size), _prefix(tmask, t1_size)
    rows = ([tmask | w3] * s1_size + [tmask | w1] * (a - s1_size)
            + [smask | w3] * t1_size + [smask | w2] * (b - t1_size)
            + [(smask ^ s1) | w2 | w3, (tmask ^ t1) | w1 | w3, s1 | t1 | w1 | w2])
    return Graph(n, rows)


def enumerate_g1_b2(n: int) -> list[Graph]:
    """Every member of the B2-free family up to isomorphism."""
    if n < 5:
        raise ValueError(f"g1_b2 needs n >= 5, got {n}")
    a = (n - 3) // 2
    b = n - 3 - a
    params = [(s, 0) for s in range(a + 1)] + [(0, t) for t in range(b + 1)] + [(1, 1)]
    return _dedupe(g1_b2(n, s, t) for s, t in params)


def krr_graph(n: int, r: int) -> Graph:
    """K_{floor((n-1)/2), ceil((n-1)/2)} plus an apex with ``r`` neighbours in each part."""
    a, b, amask, bmask = _parts(n - 1)
    if r < 1 or a < r:
        raise ValueError(f"need 1 <= r <= floor((n-1)/2), got n={n}, r={r}")
    v0 = 1 << (n - 1)
    rows = ([bmask | v0] * r + [bmask] * (a - r) + [amask | v0] * r + [amask] * (b - r)
            + [_prefix(amask, r) | _prefix(bmask, r)])
    return Graph(n, rows)


def turan_dot_c3(n: int) -> Graph:
    """Turán graph on ``n - 2`` vertices sharing one vertex with a triangle."""
    if n < 5:
        raise ValueError(f"turan_dot_c3 needs n >= 5, got {n}")
    g = Graph(n)
    base = turan_graph(n - 2, 2)
    g.rows[: n - 2] = base.rows
    x, y = n - 2, n - 1
    g.add_edge(0, x).add_edge(0, y).add_edge(x, y)
    return g


def _dedupe(graphs) -> list[Graph]:
    """First representative of each isomorphism class, in input order."""
    seen: dict[tuple, dict[bytes, Graph]] = {}
    out = []
    for g in graphs:
        # cheap invariant first; canonical forms only separate graphs that share it
        degs = g.degrees()
        inv = tuple(sorted((degs[v], tuple(sorted(degs[u] for u in g.neighbors(v)))) for v in range(g.n)))
        bucket = seen.setdefault(inv, {})
        if not bucket:
            bucket[b""] = g
            out.append(g)
            continue
        if b"" in bucket:
            first = bucket.pop(b"")
            bucket[canonical_certificate(first)] = first
        cert = canonical_certificate(g)
        if cert not in bucket:
            bucket[cert] = g
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def mantel_value(n: int) -> int:
    return n * n // 4


def g0_c3_edge_count(n: int) -> int:
    return (n - 1) ** 2 // 4 + 1


def krr_edge_count(n: int, r: int) -> int:
    return (n - 1) ** 2 // 4 + 2 * r


def turan_dot_c3_edge_count(n: int) -> int:
    return (n - 2) ** 2 // 4 + 3


# ---------------------------------------------------------------------------
# FamilySpec
# ---------------------------------------------------------------------------

_FAMILY_PARAMS = {
    "turan": ("n", "k"),
    "g0c3": ("n", "t1"),
    "g1b2": ("n", "s1", "t1"),
    "krr": ("n", "r"),
    "turandotc3": ("n",),
}


@dataclass(frozen=True)
class FamilySpec:
    """One construction and its parameters, e.g. ``FamilySpec("krr", {"n": 9, "r": 2})``."""

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in _FAMILY_PARAMS:
            raise ValueError(f"unknown family {self.kind!r}; choose from {sorted(_FAMILY_PARAMS)}")
        want = set(_FAMILY_PARAMS[self.kind])
        if set(self.params) != want:
            raise ValueError(f"family {self.kind} takes parameters {sorted(want)}, got {sorted(self.params)}")

    def build(self) -> Graph:
        p = self.params
        if self.kind == "turan":
            return turan_graph(p["n"], p["k"])
        if self.kind == "g0c3":
            return g0_c3(p["n"], p["t1"])
        if self.kind == "g1b2":
            return g1_b2(p["n"], p["s1"], p["t1"])
        if self.kind == "krr":
            return krr_graph(p["n"], p["r"])
        return turan_dot_c3(p["n"])

    def __str__(self) -> str:
        return " ".join([self.kind] + [f"{k}={self.params[k]}" for k in _FAMILY_PARAMS[self.kind]])

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty family spec")
        params = {}
        for tok in tokens[1:]:
            m = re.fullmatch(r"([a-z0-9]+)=(\d+)", tok)
            if not m:
                raise ValueError(f"bad family parameter {tok!r}; expected key=int")
            params[m.group(1)] = int(m.group(2))
        return cls(tokens[0].lower(), params)
