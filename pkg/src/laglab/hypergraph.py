"""Exact combinatorial substrate: edges, colex order, links, compression, posets.

Vertices are 1-based integers, edges are strictly increasing tuples, and
colex ranks are 0-based.  Everything here is exact integer combinatorics;
all numerics live in :mod:`laglab.solver`.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

Edge = tuple[int, ...]


class UniformityError(ValueError):
    """Raised when edges of different sizes are mixed."""


class EdgeListParseError(ValueError):
    """Parse failure for the edge-list text format, with location info."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def as_edge(vertices: Iterable[int]) -> Edge:
    """Validate and normalize an edge: strictly increasing positive integers."""
    e = tuple(int(v) for v in vertices)
    if not e:
        raise ValueError("edge must be non-empty")
    if e[0] < 1:
        raise ValueError(f"vertex labels are 1-based, got {e[0]}")
    for a, b in zip(e, e[1:]):
        if a >= b:
            raise ValueError(f"edge vertices must be strictly increasing, got {e}")
    return e


# ---------------------------------------------------------------------------
# Colex order and the combinatorial number system
# ---------------------------------------------------------------------------

def colex_compare(a: Edge, b: Edge) -> int:
    """Compare two r-sets in colex order: a < b iff max(a triangle b) lies in b.

    Returns -1, 0, or 1.  For sorted tuples this equals lexicographic
    comparison of the reversed tuples.
    """
    if len(a) != len(b):
        raise UniformityError(f"cannot compare edges of sizes {len(a)} and {len(b)}")
    ra, rb = a[::-1], b[::-1]
    if ra < rb:
        return -1
    if ra > rb:
        return 1
    return 0


def colex_rank(edge: Edge) -> int:
    """0-based position of a sorted r-tuple in the colex order of all r-sets."""
    return sum(comb(v - 1, i + 1) for i, v in enumerate(edge))


def colex_unrank(r: int, rank: int) -> Edge:
    """Inverse of :func:`colex_rank`: the r-set at a given 0-based colex rank."""
    if r < 1:
        raise ValueError(f"uniformity must be >= 1, got {r}")
    if rank < 0:
        raise ValueError(f"rank must be non-negative, got {rank}")
    out = []
    rem = rank
    for i in range(r, 0, -1):
        v = i
        while comb(v, i) <= rem:
            v += 1
        # comb(v - 1, i) <= rem < comb(v, i)
        out.append(v)
        rem -= comb(v - 1, i)
    return tuple(reversed(out))


# ---------------------------------------------------------------------------
# RGraph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RGraph:
    """An r-uniform hypergraph on vertex set [n] with an immutable edge set."""

    r: int
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"uniformity must be >= 2, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex bound must be >= 0, got {self.n}")
        for e in self.edges:
            if len(e) != self.r:
                raise UniformityError(f"edge {e} has size {len(e)}, expected {self.r}")
            if e != as_edge(e):
                raise ValueError(f"edge {e} is not strictly increasing")
            if e[-1] > self.n:
                raise ValueError(f"edge {e} exceeds vertex bound n={self.n}")

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[Iterable[int]], n: int | None = None) -> "RGraph":
        es = frozenset(as_edge(e) for e in edges)
        if n is None:
            n = max((e[-1] for e in es), default=0)
        return cls(r, n, es)

    @classmethod
    def complete(cls, r: int, t: int) -> "RGraph":
        """The complete r-graph on vertex set [t]."""
        return cls(r, t, frozenset(combinations(range(1, t + 1), r)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        """Edges in canonical (colex) order."""
        return sorted(self.edges, key=colex_rank)

    def with_n(self, n: int) -> "RGraph":
        """Same edge set viewed on vertex set [n] (n may only grow or stay tight)."""
        return RGraph(self.r, n, self.edges)

    def relabel(self, perm: dict[int, int]) -> "RGraph":
        """Apply a vertex permutation of [n] (used for invariance checks)."""
        return RGraph.from_edges(
            self.r, (sorted(perm[v] for v in e) for e in self.edges), n=self.n
        )

    def canonical_bytes(self) -> bytes:
        ranks = sorted(colex_rank(e) for e in self.edges)
        head = f"{self.r} {self.n} {len(ranks)}:".encode()
        return head + b",".join(str(k).encode() for k in ranks)

    def canonical_hash(self) -> int:
        """Stable 64-bit content hash (independent of process hash seed)."""
        digest = hashlib.blake2b(self.canonical_bytes(), digest_size=8).digest()
        return int.from_bytes(digest, "big")


def build_colex_graph(r: int, m: int) -> RGraph:
    """The r-graph whose edges are the first m r-sets in colex order."""
    if m < 0:
        raise ValueError(f"edge count must be >= 0, got {m}")
    edges = [colex_unrank(r, k) for k in range(m)]
    n = max((e[-1] for e in edges), default=0)
    return RGraph(r, n, frozenset(edges))


def complement(g: RGraph) -> RGraph:
    """All r-sets of [n] that are not edges, on the same vertex set."""
    full = set(combinations(range(1, g.n + 1), g.r))
    return RGraph(g.r, g.n, frozenset(full - g.edges))


# ---------------------------------------------------------------------------
# Links
# ---------------------------------------------------------------------------

def _check_vertex(g: RGraph, i: int) -> None:
    if not 1 <= i <= g.n:
        raise ValueError(f"vertex {i} out of range [1, {g.n}]")


def link(g: RGraph, i: int) -> frozenset[Edge]:
    """The (r-1)-sets completing vertex i to an edge."""
    _check_vertex(g, i)
    return frozenset(tuple(v for v in e if v != i) for e in g.edges if i in e)


def pair_link(g: RGraph, i: int, j: int) -> frozenset[Edge]:
    """The (r-2)-sets completing the pair {i, j} to an edge."""
    _check_vertex(g, i)
    _check_vertex(g, j)
    if i == j:
        raise ValueError("pair link needs two distinct vertices")
    return frozenset(
        tuple(v for v in e if v != i and v != j) for e in g.edges if i in e and j in e
    )


def difference_link(g: RGraph, i: int, j: int) -> frozenset[Edge]:
    """The (r-1)-sets A with A+{i} an edge but A+{j} a non-edge (j not in A)."""
    _check_vertex(g, i)
    _check_vertex(g, j)
    out = []
    for a in link(g, i):
        if j in a:
            continue
        if tuple(sorted(a + (j,))) not in g.edges:
            out.append(a)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Left compression
# ---------------------------------------------------------------------------

def _shift_edge(e: Edge, pos: int, v: int) -> Edge:
    return tuple(sorted(e[:pos] + (v,) + e[pos + 1:]))


def is_left_compressed(g: RGraph) -> bool:
    """True iff replacing any edge entry by any smaller unused label stays an edge."""
    for e in g.edges:
        used = set(e)
        for pos, w in enumerate(e):
            for v in range(1, w):
                if v in used:
                    continue
                if _shift_edge(e, pos, v) not in g.edges:
                    return False
    return True


def compress(g: RGraph) -> RGraph:
    """Left-compress by iterating (i, j)-shifts, i < j in lexicographic order.

    Each shift replaces j by i in every edge where the result is not already
    present; sweeps repeat until a fixpoint.  The edge count is preserved and
    the result is left-compressed.
    """
    edges = set(g.edges)
    changed = True
    while changed:
        changed = False
        for i in range(1, g.n):
            for j in range(i + 1, g.n + 1):
                moved = []
                for e in edges:
                    if j in e and i not in e:
                        f = tuple(sorted(i if v == j else v for v in e))
                        if f not in edges:
                            moved.append((e, f))
                if moved:
                    changed = True
                    for e, f in moved:
                        edges.discard(e)
                        edges.add(f)
    return RGraph(g.r, g.n, frozenset(edges))


# ---------------------------------------------------------------------------
# Descendant poset on sorted r-tuples
# ---------------------------------------------------------------------------

def descendants(edge: Edge) -> frozenset[Edge]:
    """All tuples componentwise <= the given one with a strictly smaller sum."""
    e = as_edge(edge)
    out = set()
    stack = [()]
    for top in e:
        nxt = []
        for prefix in stack:
            start = prefix[-1] + 1 if prefix else 1
            for v in range(start, top + 1):
                nxt.append(prefix + (v,))
        stack = nxt
    for cand in stack:
        if sum(cand) < sum(e):
            out.add(cand)
    return frozenset(out)


def direct_descendants(edge: Edge) -> frozenset[Edge]:
    """Descendants whose coordinate sum is exactly one less (single decrements)."""
    e = as_edge(edge)
    out = set()
    for pos in range(len(e)):
        v = e[pos] - 1
        lower = e[pos - 1] if pos > 0 else 0
        if v > lower:
            out.add(e[:pos] + (v,) + e[pos + 1:])
    return frozenset(out)


def ancestors(edge: Edge, within: int) -> frozenset[Edge]:
    """All tuples on [within] componentwise >= the given one with larger sum."""
    e = as_edge(edge)
    if e[-1] > within:
        raise ValueError(f"edge {e} exceeds bound {within}")
    out = set()
    stack = [()]
    for pos in range(len(e)):
        nxt = []
        for prefix in stack:
            lo = max(e[pos], (prefix[-1] + 1) if prefix else 1)
            for v in range(lo, within + 1):
                nxt.append(prefix + (v,))
        stack = nxt
    for cand in stack:
        if sum(cand) > sum(e):
            out.add(cand)
    return frozenset(out)


def is_down_closed(g: RGraph) -> bool:
    """Descendant-based criterion: every descendant of an edge is an edge."""
    return all(descendants(e) <= g.edges for e in g.edges)


# ---------------------------------------------------------------------------
# Enumeration of left-compressed 3-graphs (down-sets of the triple poset)
# ---------------------------------------------------------------------------

class _TriplePoset:
    """Direct-descendant structure of all triples on [t], indexed by colex rank."""

    _cache: dict[int, "_TriplePoset"] = {}

    def __init__(self, t: int):
        self.t = t
        self.total = comb(t, 3)
        self.triples = [colex_unrank(3, k) for k in range(self.total)]
        rank_of = {e: k for k, e in enumerate(self.triples)}
        self.dd_mask = [
            sum(1 << rank_of[d] for d in direct_descendants(e)) for e in self.triples
        ]

    @classmethod
    def get(cls, t: int) -> "_TriplePoset":
        if t not in cls._cache:
            cls._cache[t] = cls(t)
        return cls._cache[t]


def _downset_masks(t: int, m: int) -> Iterator[int]:
    """Yield each size-m down-set of the triple poset on [t] as a rank bitmask.

    Down-sets are grown in colex rank order; since colex order extends the
    descendant order, every prefix of a down-set is itself a down-set and
    each set is produced exactly once.
    """
    poset = _TriplePoset.get(t)
    total, dd = poset.total, poset.dd_mask
    if m == 0:
        yield 0
        return
    if m > total:
        return

    def rec(mask: int, count: int, last: int) -> Iterator[int]:
        if count == m:
            yield mask
            return
        # not enough ranks left to reach m edges
        for k in range(last + 1, total - (m - count) + 1):
            if dd[k] & ~mask == 0:
                yield from rec(mask | (1 << k), count + 1, k)

    yield from rec(0, 0, -1)


def enumerate_left_compressed(t: int, m: int) -> Iterator[RGraph]:
    """All left-compressed 3-graphs on [t] with m edges, each exactly once."""
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    if not 0 <= m <= comb(t, 3):
        raise ValueError(f"need 0 <= m <= C({t},3)={comb(t, 3)}, got {m}")
    poset = _TriplePoset.get(t)
    for mask in _downset_masks(t, m):
        edges = frozenset(
            poset.triples[k] for k in range(poset.total) if mask >> k & 1
        )
        yield RGraph(3, t, edges)


def count_left_compressed(t: int, m: int) -> int:
    """Number of left-compressed 3-graphs on [t] with m edges."""
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    if not 0 <= m <= comb(t, 3):
        raise ValueError(f"need 0 <= m <= C({t},3)={comb(t, 3)}, got {m}")
    return sum(1 for _ in _downset_masks(t, m))


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def serialize_edge_list(g: RGraph) -> str:
    """Canonical text form: header ``r n m`` then one edge per line, colex order."""
    lines = [f"{g.r} {g.n} {g.m}"]
    for e in g.sorted_edges():
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> RGraph:
    """Parse the edge-list text format; raises with line/column diagnostics."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListParseError("missing header line 'r n m'", 1)
    head = lines[0].split()
    if len(head) != 3:
        raise EdgeListParseError(
            f"header must be 'r n m', got {len(head)} fields", 1
        )
    try:
        r, n, m = (int(x) for x in head)
    except ValueError:
        col = 1 + lines[0].find(next(x for x in head if not _is_int(x)))
        raise EdgeListParseError("header fields must be integers", 1, col) from None
    edges = []
    lineno = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        vals = []
        for tok in parts:
            if not _is_int(tok):
                raise EdgeListParseError(
                    f"expected integer vertex, got {tok!r}", lineno, 1 + raw.find(tok)
                )
            vals.append(int(tok))
        if len(vals) != r:
            raise EdgeListParseError(
                f"edge has {len(vals)} vertices, expected r={r}", lineno
            )
        try:
            edges.append(as_edge(vals))
        except ValueError as exc:
            raise EdgeListParseError(str(exc), lineno) from None
        if edges[-1][-1] > n:
            raise EdgeListParseError(
                f"vertex {edges[-1][-1]} exceeds n={n}", lineno
            )
    if len(edges) != m:
        raise EdgeListParseError(
            f"header announced m={m} edges but {len(edges)} were given", lineno
        )
    if len(set(edges)) != len(edges):
        raise EdgeListParseError("duplicate edge in list", lineno)
    return RGraph(r, n, frozenset(edges))


def _is_int(tok: str) -> bool:
    try:
        int(tok)
        return True
    except ValueError:
        return False
