"""Independent oracles the test suite checks the library against.

Everything here is deliberately brute force and stays independent of the
code paths it validates: subset filtering instead of poset DFS, dense grid
scans instead of ascent, itertools cliques instead of branch and bound.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from laglab.hypergraph import RGraph


def downset_filter_count(t: int, m: int) -> int:
    """Count m-subsets of the triples on [t] closed under componentwise
    decrease, by filtering all subsets (viable for t <= 5)."""
    triples = list(combinations(range(1, t + 1), 3))
    count = 0
    for subset in combinations(triples, m):
        chosen = set(subset)
        if all(_descendants_in(e, chosen) for e in subset):
            count += 1
    return count


def _descendants_in(e, chosen) -> bool:
    for cand in combinations(range(1, max(e) + 1), 3):
        if cand == e or cand in chosen:
            continue
        if all(c <= v for c, v in zip(cand, e)) and sum(cand) < sum(e):
            return False
    return True


def simplex_grid(n: int, resolution: int) -> np.ndarray:
    """All weightings with coordinates that are multiples of 1/resolution."""
    rows = []
    stars = resolution
    for cuts in combinations(range(stars + n - 1), n - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(stars + n - 2 - prev)
        rows.append(parts)
    return np.array(rows, dtype=float) / resolution


def grid_max(g: RGraph, resolution: int) -> float:
    """Maximum of the edge polynomial over the dense simplex grid."""
    grid = simplex_grid(g.n, resolution)
    edges = np.array(sorted(g.edges), dtype=int) - 1
    if edges.size == 0:
        return 0.0
    vals = np.ones(grid.shape[0])
    total = np.zeros(grid.shape[0])
    for e in edges:
        vals = grid[:, e[0]].copy()
        for v in e[1:]:
            vals = vals * grid[:, v]
        total += vals
    return float(total.max())


def clique_number_bruteforce(g: RGraph) -> int:
    """Largest clique in a 2-graph by scanning subsets from the top."""
    assert g.r == 2
    adj = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    for size in range(g.n, 1, -1):
        for sub in combinations(range(1, g.n + 1), size):
            if all(j in adj[i] for i, j in combinations(sub, 2)):
                return size
    return 1 if g.n >= 1 else 0


def fd_gradient(g: RGraph, x, h: float = 1e-5) -> np.ndarray:
    """Central finite differences of the edge polynomial."""
    from laglab.solver import evaluate

    x = np.asarray(x, dtype=float)
    out = np.zeros(g.n)
    for i in range(g.n):
        up = x.copy()
        dn = x.copy()
        up[i] += h
        dn[i] -= h
        out[i] = (evaluate(g, up) - evaluate(g, dn)) / (2 * h)
    return out


def random_rgraph(rng: np.random.Generator, r: int, n: int, p: float) -> RGraph:
    edges = [e for e in combinations(range(1, n + 1), r) if rng.random() < p]
    return RGraph.from_edges(r, edges, n=n)
