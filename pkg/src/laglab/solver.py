"""Lagrangian computation for r-graphs by multi-start simplex ascent.

The maximizer of the edge-monomial polynomial over the probability simplex
is located by projected gradient ascent from many starts, then polished by
Newton iteration on the equal-link stationarity system of the active
support.  Results carry a KKT residual and a certification flag; an
exhaustive support-enumeration path provides an independent cross-check
for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np

from laglab.hypergraph import RGraph, difference_link, is_left_compressed, link

DEFAULT_SEED = 0xF2F2

METHOD_CLOSED_FORM = "closed_form_2graph"
METHOD_SYMMETRY = "symmetry_reduced"
METHOD_MULTISTART = "multistart_gradient"
METHOD_SUPPORT_ENUM = "support_enumeration"


@dataclass(frozen=True)
class SolverOptions:
    """Tolerances and budgets for :func:`lagrangian`.

    Defaults: 32 random starts, at most 10,000 ascent iterations per start,
    step tolerance 1e-14, value tolerance 1e-12.
    """

    starts: int = 32
    max_iters: int = 10_000
    step_tol: float = 1e-14
    value_tol: float = 1e-12
    kkt_tol: float = 1e-8
    tie_tol: float = 1e-9
    positive_eps: float = 1e-10
    seed: int = DEFAULT_SEED
    cross_check: bool = True
    cross_check_max_active: int = 6
    support_budget: int = 20_000
    newton_iters: int = 60


@dataclass(frozen=True)
class LagrangianResult:
    value: float
    weighting: tuple[float, ...]
    support: int
    kkt_residual: float
    method: str
    certified: bool
    notes: tuple[str, ...] = ()

    def weighting_vector(self) -> np.ndarray:
        return np.array(self.weighting, dtype=float)

    def as_json_dict(self) -> dict:
        return {
            "value": self.value,
            "weighting": list(self.weighting),
            "support": self.support,
            "kkt_residual": self.kkt_residual,
            "method": self.method,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class KKTReport:
    """Stationarity report for a weighting: residuals and pair coverage."""

    residual: float
    support: tuple[int, ...]
    pair_cover_ok: bool
    eq2_residual: float | None
    link_values: tuple[float, ...]


# ---------------------------------------------------------------------------
# Prepared arrays
# ---------------------------------------------------------------------------

class _GraphData:
    def __init__(self, g: RGraph):
        self.graph = g
        self.r = g.r
        self.n = g.n
        self.m = g.m
        edges = g.sorted_edges()
        self.e0 = (
            np.array(edges, dtype=np.intp) - 1
            if edges
            else np.zeros((0, g.r), dtype=np.intp)
        )
        # one-hot (m, n) scatter matrices per edge position
        self.pos = []
        for p in range(g.r):
            mat = np.zeros((self.m, g.n))
            if self.m:
                mat[np.arange(self.m), self.e0[:, p]] = 1.0
            self.pos.append(mat)
        deg = np.zeros(g.n, dtype=int)
        for e in edges:
            for v in e:
                deg[v - 1] += 1
        self.active = np.flatnonzero(deg > 0)

    def eval_rows(self, x_rows: np.ndarray) -> np.ndarray:
        if self.m == 0:
            return np.zeros(x_rows.shape[0])
        cols = x_rows[:, self.e0[:, 0]]
        for p in range(1, self.r):
            cols = cols * x_rows[:, self.e0[:, p]]
        return cols.sum(axis=1)

    def grad_rows(self, x_rows: np.ndarray) -> np.ndarray:
        out = np.zeros_like(x_rows)
        if self.m == 0:
            return out
        gathered = [x_rows[:, self.e0[:, p]] for p in range(self.r)]
        for p in range(self.r):
            part = None
            for q in range(self.r):
                if q == p:
                    continue
                part = gathered[q] if part is None else part * gathered[q]
            if part is None:  # r == 1 cannot happen (r >= 2)
                part = np.ones_like(gathered[p])
            out += part @ self.pos[p]
        return out

    def eval_one(self, x: np.ndarray) -> float:
        return float(self.eval_rows(x[None, :])[0])

    def grad_one(self, x: np.ndarray) -> np.ndarray:
        return self.grad_rows(x[None, :])[0]

    def pair_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of pair-link values: entry (i, j) is the pair link at {i+1, j+1}."""
        h = np.zeros((self.n, self.n))
        if self.m == 0:
            return h
        for p in range(self.r):
            for q in range(p + 1, self.r):
                part = np.ones(self.m)
                for s in range(self.r):
                    if s != p and s != q:
                        part = part * x[self.e0[:, s]]
                np.add.at(h, (self.e0[:, p], self.e0[:, q]), part)
        return h + h.T


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------

def _as_vector(g: RGraph, x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < g.n:
        raise ValueError(
            f"weighting must be a vector of length >= n={g.n}, got shape {arr.shape}"
        )
    return arr[: g.n] if arr.shape[0] > g.n else arr


def check_legal_weighting(x, tol: float = 1e-12) -> np.ndarray:
    """Validate a simplex vector: non-negative entries summing to 1 within tol."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError("weighting must be one-dimensional")
    if arr.size and arr.min() < -tol:
        raise ValueError(f"weighting has negative entry {arr.min()}")
    if abs(arr.sum() - 1.0) > max(tol, 1e-12 * max(1, arr.size)):
        raise ValueError(f"weighting sums to {arr.sum()}, expected 1")
    return arr


def evaluate(g: RGraph, x) -> float:
    """The edge-monomial sum at a weight vector (0 for the empty graph)."""
    return _GraphData(g).eval_one(_as_vector(g, x))


def link_value(g: RGraph, i: int, x) -> float:
    """Weight of the link of vertex i; equals the partial derivative at x_i."""
    if not 1 <= i <= g.n:
        raise ValueError(f"vertex {i} out of range [1, {g.n}]")
    arr = _as_vector(g, x)
    total = 0.0
    for a in link(g, i):
        p = 1.0
        for v in a:
            p *= arr[v - 1]
        total += p
    return total


def link_values(g: RGraph, x) -> np.ndarray:
    """Vector of link weights for every vertex (the gradient)."""
    return _GraphData(g).grad_one(_as_vector(g, x))


# ---------------------------------------------------------------------------
# Projected gradient ascent
# ---------------------------------------------------------------------------

def _project_rows(x_rows: np.ndarray) -> np.ndarray:
    """Euclidean projection of each row onto the probability simplex."""
    s, n = x_rows.shape
    u = -np.sort(-x_rows, axis=1)
    css = np.cumsum(u, axis=1) - 1.0
    ind = np.arange(1, n + 1)
    cond = u - css / ind > 0
    rho = n - 1 - np.argmax(cond[:, ::-1], axis=1)
    theta = css[np.arange(s), rho] / (rho + 1)
    return np.maximum(x_rows - theta[:, None], 0.0)


def _ascend(data: _GraphData, x_rows: np.ndarray, opts: SolverOptions):
    """Batched projected gradient ascent with per-row backtracking steps."""
    x = x_rows.copy()
    vals = data.eval_rows(x)
    eta = np.full(x.shape[0], 0.25)
    stall = 0
    crawl = 0
    for _ in range(opts.max_iters):
        grad = data.grad_rows(x)
        base = vals.copy()
        new_x = x.copy()
        new_v = vals.copy()
        accepted = np.zeros(x.shape[0], dtype=bool)
        for _bt in range(60):
            todo = np.flatnonzero(~accepted)
            if todo.size == 0:
                break
            trial = _project_rows(x[todo] + eta[todo, None] * grad[todo])
            tv = data.eval_rows(trial)
            good = tv >= base[todo]
            hit = todo[good]
            new_x[hit] = trial[good]
            new_v[hit] = tv[good]
            accepted[hit] = True
            eta[todo[~good]] *= 0.5
            if eta[todo[~good]].size and eta[todo[~good]].max() < opts.step_tol:
                accepted[todo[~good]] = True  # frozen rows
        eta[accepted] = np.minimum(eta[accepted] * 1.6, 4.0)
        x, vals = new_x, new_v
        improvement = float((vals - base).max()) if vals.size else 0.0
        if improvement < opts.value_tol:
            stall += 1
            if stall >= 3:
                break
        else:
            stall = 0
        # Newton polish mops up slow tail convergence
        if improvement < 1e-10:
            crawl += 1
            if crawl >= 60:
                break
        else:
            crawl = 0
    return x, vals


# ---------------------------------------------------------------------------
# Newton refinement of the equal-link system on a support
# ---------------------------------------------------------------------------

def _newton_on_support(data: _GraphData, x0: np.ndarray, support: np.ndarray,
                       opts: SolverOptions):
    """Solve equal link values on the support; returns (x, residual, ok).

    The system is: link(i) = mu for i in the support, weights sum to 1,
    off-support weights zero.  Vertices forced negative are dropped
    (active-set style) and the iteration restarts on the smaller support.
    """
    sup = np.array(sorted(int(v) for v in support), dtype=np.intp)
    for _round in range(max(1, len(sup))):
        if sup.size == 0:
            return np.zeros(data.n), np.inf, False
        x = np.zeros(data.n)
        seed_vals = np.maximum(x0[sup], 0.0)
        if seed_vals.sum() <= 0:
            seed_vals = np.ones(sup.size)
        x[sup] = seed_vals / seed_vals.sum()
        mu = float(data.grad_one(x)[sup].mean())
        ok = False
        for _it in range(opts.newton_iters):
            grad = data.grad_one(x)[sup]
            res = np.concatenate([grad - mu, [x[sup].sum() - 1.0]])
            if np.abs(res).max() < 1e-14:
                ok = True
                break
            h = data.pair_matrix(x)[np.ix_(sup, sup)]
            jac = np.zeros((sup.size + 1, sup.size + 1))
            jac[: sup.size, : sup.size] = h
            jac[: sup.size, sup.size] = -1.0
            jac[sup.size, : sup.size] = 1.0
            try:
                delta = np.linalg.solve(jac, -res)
            except np.linalg.LinAlgError:
                return x, float(np.abs(res).max()), False
            step = 1.0
            dx = delta[: sup.size]
            for _damp in range(40):
                if (x[sup] + step * dx).min() >= -1e-9:
                    break
                step *= 0.5
            x[sup] = x[sup] + step * dx
            mu += step * float(delta[sup.size])
        neg = sup[x[sup] < opts.positive_eps]
        if neg.size == 0:
            grad = data.grad_one(x)[sup]
            res = np.concatenate([grad - mu, [x[sup].sum() - 1.0]])
            x = np.maximum(x, 0.0)
            return x, float(np.abs(res).max()), ok and np.abs(res).max() < 1e-12
        sup = np.array([v for v in sup if v not in set(neg.tolist())], dtype=np.intp)
    return np.zeros(data.n), np.inf, False


# ---------------------------------------------------------------------------
# Symmetry classes for left-compressed graphs
# ---------------------------------------------------------------------------

def symmetry_classes(g: RGraph) -> list[list[int]]:
    """Group consecutive vertices with empty difference link into classes.

    Vertices i and i+1 fall in one class when no edge through i fails to
    shift onto i+1; for a left-compressed graph the members of a class are
    interchangeable and share a weight in some optimal weighting.
    """
    if not is_left_compressed(g):
        raise ValueError("symmetry classes require a left-compressed graph")
    classes: list[list[int]] = []
    current = [1] if g.n >= 1 else []
    for i in range(1, g.n):
        if difference_link(g, i, i + 1):
            classes.append(current)
            current = [i + 1]
        else:
            current.append(i + 1)
    if current:
        classes.append(current)
    return classes


def _class_average(x: np.ndarray, classes: list[list[int]],
                   positive_eps: float = 1e-10) -> np.ndarray:
    """Average weights over the supported members of each class.

    Swapping two supported class members is a graph automorphism, so the
    average never lowers the value; unsupported members stay at zero
    (equal weights are only forced inside the support).
    """
    out = x.copy()
    for cls in classes:
        idx = [v - 1 for v in cls if x[v - 1] > positive_eps]
        if len(idx) > 1:
            out[idx] = out[idx].mean()
    return out


# ---------------------------------------------------------------------------
# KKT check
# ---------------------------------------------------------------------------

def kkt_check(g: RGraph, x, value: float, positive_eps: float = 1e-10) -> KKTReport:
    """Stationarity report: equal-link residual on the support, pair cover,
    and (for left-compressed graphs) the difference-link identity residual."""
    arr = check_legal_weighting(_as_vector(g, x))
    data = _GraphData(g)
    grads = data.grad_one(arr)
    support = tuple(int(i) + 1 for i in np.flatnonzero(arr > positive_eps))
    if support:
        residual = float(np.abs(grads[[i - 1 for i in support]] - g.r * value).max())
    else:
        residual = 0.0
    pair_cover_ok = all(
        _pair_in_some_edge(g, i, j) for i, j in combinations(support, 2)
    )
    eq2 = None
    if is_left_compressed(g):
        eq2 = 0.0
        pm = data.pair_matrix(arr)
        for i, j in combinations(support, 2):
            lhs = (arr[i - 1] - arr[j - 1]) * pm[i - 1, j - 1]
            rhs = 0.0
            for a in difference_link(g, i, j):
                p = 1.0
                for v in a:
                    p *= arr[v - 1]
                rhs += p
            eq2 = max(eq2, abs(lhs - rhs))
    return KKTReport(
        residual=residual,
        support=support,
        pair_cover_ok=pair_cover_ok,
        eq2_residual=eq2,
        link_values=tuple(float(v) for v in grads),
    )


def _pair_in_some_edge(g: RGraph, i: int, j: int) -> bool:
    return any(i in e and j in e for e in g.edges)


# ---------------------------------------------------------------------------
# The main solver
# ---------------------------------------------------------------------------

def _empty_result(g: RGraph) -> LagrangianResult:
    weighting = tuple([1.0 / g.n] * g.n) if g.n else ()
    return LagrangianResult(
        value=0.0,
        weighting=weighting,
        support=0,
        kkt_residual=0.0,
        method=METHOD_MULTISTART,
        certified=True,
        notes=("empty graph",),
    )


def _build_starts(data: _GraphData, rng: np.random.Generator,
                  opts: SolverOptions) -> np.ndarray:
    n = data.n
    act = data.active
    k = act.size
    rows = []
    base = np.zeros(n)
    base[act] = 1.0 / k
    rows.append(base)
    for v in act:
        biased = 0.25 * base.copy()
        biased[v] += 0.75
        rows.append(biased)
    for e in data.e0[: min(data.m, 40)]:
        biased = 0.2 * base.copy()
        for v in e:
            biased[v] += 0.8 / data.r
        rows.append(biased)
    if opts.starts > 0:
        dirichlet = rng.dirichlet(np.ones(k), size=opts.starts)
        block = np.zeros((opts.starts, n))
        block[:, act] = dirichlet
        rows.extend(block)
    return np.array(rows)


def _candidate_supports(x: np.ndarray, opts: SolverOptions,
                        peel: int = 0) -> list[tuple[int, ...]]:
    """Plausible supports for a near-optimal point: threshold cuts plus
    chains that peel off the smallest coordinates one at a time (optima can
    sit on flat segments where a vertex weight may slide to zero)."""
    sups = []
    for thresh in (1e-9, 1e-6, 1e-4, 1e-2):
        s = tuple(int(v) for v in np.flatnonzero(x > thresh))
        if len(s) >= 1 and s not in sups:
            sups.append(s)
    if peel and sups:
        base = list(sups[0])
        base.sort(key=lambda v: x[v])
        for k in range(1, min(peel, len(base) - 1) + 1):
            s = tuple(sorted(base[k:]))
            if s and s not in sups:
                sups.append(s)
    return sups


def _sort_desc(x: np.ndarray) -> np.ndarray:
    """Sort weights non-increasingly (never lowers the value of a
    left-compressed graph, by the pairwise shift argument)."""
    return np.sort(x)[::-1].copy()


def lagrangian(g: RGraph, opts: SolverOptions | None = None) -> LagrangianResult:
    """Maximize the edge polynomial of g over the simplex.

    Multi-start projected gradient ascent (uniform, vertex- and edge-biased,
    and Dirichlet random starts) with Newton polish on the detected support.
    Left-compressed graphs get a symmetry pass: class-averaged, ordered
    non-increasingly, and re-polished.  ``certified`` requires the KKT
    residual below ``opts.kkt_tol``, the value within ``opts.tie_tol`` of
    the best start, and (for graphs with at most 6 active vertices)
    agreement with :func:`support_enumeration` within 1e-8.
    """
    opts = opts or SolverOptions()
    data = _GraphData(g)
    if data.m == 0:
        return _empty_result(g)

    rng = np.random.default_rng([opts.seed & 0xFFFFFFFFFFFFFFFF, g.canonical_hash()])
    starts = _build_starts(data, rng, opts)
    ends, end_vals = _ascend(data, starts, opts)
    best_start_value = float(end_vals.max())

    # polish the strongest distinct supports
    order = np.argsort(-end_vals, kind="stable")
    candidates: list[tuple[float, np.ndarray, float]] = []  # (value, x, residual)
    seen: set[tuple[int, ...]] = set()
    top = order[: max(10, min(20, len(order)))]
    for rank, idx in enumerate(top):
        x_end = ends[idx]
        peel = 6 if rank < 6 else 0
        for sup in _candidate_supports(x_end, opts, peel=peel):
            if sup in seen:
                continue
            seen.add(sup)
            xs, res, ok = _newton_on_support(data, x_end, np.array(sup), opts)
            if ok and xs.min() >= 0:
                candidates.append((data.eval_one(xs), xs, res))
        val = float(end_vals[idx])
        grad = data.grad_one(x_end)
        pga_res = _residual_at(data, x_end, val, opts.positive_eps, grad)
        candidates.append((val, x_end, pga_res))

    best_value = max(v for v, _x, _r in candidates)
    pool = [c for c in candidates if c[0] >= best_value - opts.tie_tol]

    left_comp = is_left_compressed(g)
    notes: list[str] = []
    if left_comp:
        # class-average and order every tied candidate, then re-polish; for a
        # left-compressed graph neither transformation lowers the value
        classes = symmetry_classes(g)
        mapped = []
        for _val, x_cand, _res in pool:
            y = _sort_desc(_class_average(x_cand, classes, opts.positive_eps))
            sup = np.flatnonzero(y > opts.positive_eps)
            ys, _r2, ok = _newton_on_support(data, y, sup, opts)
            z = _sort_desc(ys) if ok and ys.min() >= 0 else y
            zv = data.eval_one(z)
            mapped.append((zv, z, _residual_at(data, z, zv, opts.positive_eps)))
        best_value = max(best_value, max(v for v, _x, _r in mapped))
        pool = [c for c in mapped if c[0] >= best_value - opts.tie_tol] or mapped
        method = METHOD_SYMMETRY
    else:
        method = METHOD_MULTISTART

    def support_size(x: np.ndarray) -> int:
        return int((x > opts.positive_eps).sum())

    # minimal support first, then polished stationarity, then the
    # lexicographically largest weighting for reproducibility
    pool.sort(
        key=lambda c: (
            support_size(c[1]),
            0 if c[2] <= opts.kkt_tol else 1,
            [-w for w in c[1]],
        )
    )
    value, x_best, residual = pool[0]

    x_best = np.maximum(x_best, 0.0)
    total = x_best.sum()
    if abs(total - 1.0) > 1e-12 and total > 0:
        x_best = x_best / total
    value = data.eval_one(x_best)
    residual = _residual_at(data, x_best, value, opts.positive_eps)

    certified = residual <= opts.kkt_tol and value >= best_start_value - opts.tie_tol
    if not certified:
        notes.append("stationarity or multistart consistency not met")
    if (
        certified
        and opts.cross_check
        and data.active.size <= opts.cross_check_max_active
    ):
        se = support_enumeration(
            g, opts=replace(opts, cross_check=False)
        )
        if abs(se.value - value) > 1e-8:
            certified = False
            notes.append(
                f"support enumeration disagrees: {se.value!r} vs {value!r}"
            )

    return LagrangianResult(
        value=float(value),
        weighting=tuple(float(w) for w in x_best),
        support=int((x_best > opts.positive_eps).sum()),
        kkt_residual=float(residual),
        method=method,
        certified=bool(certified),
        notes=tuple(notes),
    )


def _residual_at(data: _GraphData, x: np.ndarray, value: float,
                 positive_eps: float, grad: np.ndarray | None = None) -> float:
    if grad is None:
        grad = data.grad_one(x)
    sup = np.flatnonzero(x > positive_eps)
    if sup.size == 0:
        return 0.0
    return float(np.abs(grad[sup] - data.r * value).max())


# ---------------------------------------------------------------------------
# Independent routes: 2-graph closed form and support enumeration
# ---------------------------------------------------------------------------

def clique_number(g: RGraph) -> int:
    """Exact clique number of a 2-graph by branch-and-bound over bitmasks."""
    if g.r != 2:
        raise ValueError("clique number is defined here for 2-graphs only")
    if g.n > 20:
        raise ValueError(f"exhaustive clique search refused for n={g.n} > 20")
    if g.n == 0:
        return 0
    adj = [0] * (g.n + 1)
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    best = 1 if g.n >= 1 else 0

    def extend(cand: int, size: int):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            v = cand.bit_length() - 1
            bit = 1 << v
            if size + bin(cand).count("1") <= best:
                return
            cand &= ~bit
            extend(cand & adj[v], size + 1)

    extend((1 << (g.n + 1)) - 2, 0)
    return best


def lagrangian_2graph_oracle(g: RGraph) -> float:
    """Closed-form 2-graph value from the exact clique number.

    A 2-graph whose largest clique has order t attains (1 - 1/t) / 2 on the
    uniform weighting of that clique; the empty graph gives 0.
    """
    t = clique_number(g)
    if t <= 1:
        return 0.0
    return 0.5 * (1.0 - 1.0 / t)


def lagrangian_2graph_result(g: RGraph) -> LagrangianResult:
    """Full closed-form result for a 2-graph: uniform weights on a maximum
    clique (the lexicographically first one, for determinism)."""
    t = clique_number(g)
    if t <= 1 or g.m == 0:
        return _empty_result(g)
    for sub in combinations(range(1, g.n + 1), t):
        if all((i, j) in g.edges for i, j in combinations(sub, 2)):
            x = np.zeros(g.n)
            x[[v - 1 for v in sub]] = 1.0 / t
            break
    value = 0.5 * (1.0 - 1.0 / t)
    data = _GraphData(g)
    residual = _residual_at(data, x, value, 1e-10)
    return LagrangianResult(
        value=value,
        weighting=tuple(float(w) for w in x),
        support=t,
        kkt_residual=float(residual),
        method=METHOD_CLOSED_FORM,
        certified=bool(residual <= 1e-8),
    )


def support_enumeration(g: RGraph, max_support: int | None = None,
                        opts: SolverOptions | None = None) -> LagrangianResult:
    """Best stationary point over all enumerable supports.

    Every candidate support (all vertices incident within the support, all
    pairs covered by an edge, size at least r) gets a Newton solve of the
    equal-link system from the uniform interior point; the best feasible
    solution wins, preferring smaller supports at ties.  Independent of the
    multi-start gradient path.
    """
    opts = opts or SolverOptions()
    data = _GraphData(g)
    if data.m == 0:
        return _empty_result(g)
    act = [int(v) + 1 for v in data.active]
    cap = len(act) if max_support is None else min(max_support, len(act))

    adj = {v: set() for v in act}
    for e in g.edges:
        for i, j in combinations(e, 2):
            adj[i].add(j)
            adj[j].add(i)

    supports = []
    budget_hit = False
    count = 0
    for size in range(g.r, cap + 1):
        for sup in combinations(act, size):
            count += 1
            if count > opts.support_budget:
                budget_hit = True
                break
            sup_set = set(sup)
            if any(not (adj[v] & sup_set) for v in sup):
                continue
            if any(j not in adj[i] for i, j in combinations(sup, 2)):
                continue
            if g.r >= 3:
                inside = [e for e in g.edges if set(e) <= sup_set]
                if not inside:
                    continue
                incident = set(v for e in inside for v in e)
                if incident != sup_set:
                    continue
            supports.append(sup)
        if budget_hit:
            break

    # monotone multiplicative ascent from every uniform-on-support point,
    # batched across supports; plain Newton from the uniform point can land
    # on a saddle of the equal-link system, ascent cannot go below its start
    rows = np.zeros((len(supports), data.n))
    for k, sup in enumerate(supports):
        rows[k, [v - 1 for v in sup]] = 1.0 / len(sup)
    ascended = _replicator_rows(data, rows, iters=300)

    best: tuple[float, int, list, np.ndarray, float] | None = None
    for k, sup in enumerate(supports):
        sup0 = np.array([v - 1 for v in sup], dtype=np.intp)
        xs, res, ok = _newton_on_support(data, ascended[k], sup0, opts)
        if not ok or xs.min() < 0:
            continue
        val = data.eval_one(xs)
        size = int((xs > opts.positive_eps).sum())
        lex = [-w for w in xs]
        if best is None or val > best[0] + opts.tie_tol:
            best = (val, size, lex, xs, res)
        elif val >= best[0] - opts.tie_tol and (size, lex) < (best[1], best[2]):
            best = (val, size, lex, xs, res)

    notes = []
    if budget_hit:
        notes.append("support budget exceeded; partial result")
    if best is None:
        return replace(_empty_result(g), certified=False,
                       notes=("no feasible stationary support found",))
    val, _sz, _key, xs, res = best
    residual = _residual_at(data, xs, val, opts.positive_eps)
    certified = residual <= opts.kkt_tol and not budget_hit
    return LagrangianResult(
        value=float(val),
        weighting=tuple(float(w) for w in xs),
        support=int((xs > opts.positive_eps).sum()),
        kkt_residual=float(residual),
        method=METHOD_SUPPORT_ENUM,
        certified=bool(certified),
        notes=tuple(notes),
    )


def _replicator_rows(data: _GraphData, rows: np.ndarray, iters: int) -> np.ndarray:
    """Batched multiplicative-update ascent x <- x * grad / (r * value).

    Supports are invariant under the update and the value never decreases,
    so each row climbs within its own face of the simplex.  Rows whose value
    hits zero are left unchanged.
    """
    x = rows.copy()
    for _ in range(iters):
        grad = data.grad_rows(x)
        new = x * grad
        totals = new.sum(axis=1, keepdims=True)
        alive = totals[:, 0] > 0
        if not alive.any():
            break
        new[alive] /= totals[alive]
        new[~alive] = x[~alive]
        if np.abs(new - x).max() < 1e-13:
            x = new
            break
        x = new
    return x
