"""Exhaustive conjecture verification and configuration-family checks.

A cell (t, m) enumerates every left-compressed 3-graph on [t] with m edges
(compression preserves the extremal value, so the class maximum equals the
maximum over all m-edge 3-graphs), solves each Lagrangian with certification,
and compares the class maximum against the colex-initial graph.  Known
extremal configurations from the literature are reproducible as named
families and checked one by one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from laglab.hypergraph import (
    RGraph,
    build_colex_graph,
    colex_rank,
    complement,
    enumerate_left_compressed,
    is_left_compressed,
    parse_edge_list,
    serialize_edge_list,
)
from laglab.solver import SolverOptions, lagrangian

INEQ_TOL = 1e-7
WITNESS_TIE = 1e-9


class ConfigurationError(ValueError):
    """Family parameters outside their stated range."""


@dataclass(frozen=True)
class VerifierOptions:
    solver: SolverOptions = field(default_factory=SolverOptions)
    ineq_tol: float = INEQ_TOL
    witness_tie: float = WITNESS_TIE
    max_graphs: int = 5_000_000


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive cell: the class max against the colex value."""

    t: int
    m: int
    a: int | None
    colex_value: float
    max_value: float
    gap: float
    graph_count: int
    witnesses: tuple[str, ...]
    all_pass: bool
    witness_supports: tuple[int, ...] = ()
    witness_values: tuple[float, ...] = ()
    uncertified: int = 0
    complete: bool = True
    seed: int = 0
    scope: str = (
        "enumeration restricted to left-compressed 3-graphs; "
        "the restriction preserves the maximum Lagrangian over all graphs "
        "with the same edge count"
    )


@dataclass(frozen=True)
class InequalityCheck:
    """One configuration family instance against its colex-initial rival."""

    family: str
    t: int
    a: int
    i: int | None
    m: int
    config_value: float
    colex_value: float
    margin: float
    passed: bool
    certified: bool
    inconclusive: bool


@dataclass(frozen=True)
class CheckResult:
    name: str
    applicable: bool
    passed: bool
    details: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Configuration families
# ---------------------------------------------------------------------------

FAMILIES = (
    "thm1.10",
    "lemma3.3",
    "lemma3.4",
    "lemma3.5",
    "lemma3.6",
    "lemma3.7",
    "case1",
    "case2",
    "case3",
    "case4",
    "case5",
    "case6",
)

# deep part of the complement (triples not containing both t-1 and t) for the
# six structured cases; entries are offsets below t, e.g. (3, 2, 0) = (t-3, t-2, t)
_CASE_DEEP = {
    1: ((3, 2, 0),),
    2: ((3, 2, 0), (4, 2, 0)),
    3: ((3, 2, 0), (3, 2, 1)),
    4: ((3, 2, 0), (4, 2, 0), (5, 2, 0)),
    5: ((3, 2, 0), (4, 2, 0), (4, 3, 0)),
    6: ((3, 2, 0), (4, 2, 0), (3, 2, 1)),
}


@dataclass(frozen=True)
class ConfigurationSpec:
    family: str
    t: int
    a: int | None = None
    i: int | None = None

    def label(self) -> str:
        parts = [self.family, f"t={self.t}"]
        if self.i is not None:
            parts.append(f"i={self.i}")
        if self.a is not None:
            parts.append(f"a={self.a}")
        return " ".join(parts)


def _top_row(t: int, lo: int) -> list[tuple[int, int, int]]:
    """Triples (x, t-1, t) for x from lo up to t-2."""
    return [(x, t - 1, t) for x in range(lo, t - 1)]


def _require(cond: bool, message: str):
    if not cond:
        raise ConfigurationError(message)


def configuration_complement(spec: ConfigurationSpec) -> list[tuple[int, int, int]]:
    """The complement triple list for a family instance (validated ranges)."""
    t, a, i = spec.t, spec.a, spec.i
    fam = spec.family
    _require(fam in FAMILIES, f"unknown family {fam!r}; choose from {FAMILIES}")
    _require(t >= 4, f"{fam} needs t >= 4, got t={t}")

    if fam == "thm1.10":
        _require(a is not None and i is not None, "thm1.10 requires both a and i")
        _require(i >= 1, f"Theorem 1.10 requires i >= 1, got i={i}")
        _require(3 <= a <= t - 2,
                 f"Theorem 1.10 requires 3 <= a <= t-2, got a={a}, t={t}")
        _require(a >= 2 * i + 1,
                 f"Theorem 1.10 requires a >= 2i+1 (left compression forces "
                 f"it), got a={a}, i={i}")
        _require(t - 2 - i >= 1, f"need t-2-i >= 1, got t={t}, i={i}")
        second = [(x, t - 2, t) for x in range(t - 2 - i, t - 2)]
        return second + _top_row(t, t - 1 - (a - i))

    if fam == "lemma3.3":
        _require(a is not None, "lemma3.3 requires a")
        _require(6 <= a <= t - 2,
                 f"Lemma 3.3 (minimum missing triple (t-4)(t-3)t) requires "
                 f"6 <= a <= t-2, got a={a}, t={t}")
        deep = [(t - 4, t - 3, t), (t - 4, t - 2, t), (t - 3, t - 2, t)]
        return deep + _top_row(t, t + 2 - a)

    if fam == "lemma3.4":
        _require(a is not None, "lemma3.4 requires a")
        _require(5 <= a <= t - 2,
                 f"Lemma 3.4 requires 5 <= a <= t-2, got a={a}, t={t}")
        deep = [(t - 3, t - 2, t - 1), (t - 3, t - 2, t)]
        return deep + _top_row(t, t + 1 - a)

    if fam == "lemma3.5":
        _require(a in (None, 4), f"Lemma 3.5 fixes a = 4, got a={a}")
        _require(t >= 5, f"Lemma 3.5 needs t >= 5, got t={t}")
        return [
            (t - 3, t - 2, t - 1),
            (t - 3, t - 2, t),
            (t - 3, t - 1, t),
            (t - 2, t - 1, t),
        ]

    if fam == "lemma3.6":
        _require(a is not None, "lemma3.6 requires a")
        _require(7 <= a <= t - 2,
                 f"Lemma 3.6 requires 7 <= a <= t-2 (so t >= 9), got a={a}, t={t}")
        deep = [(t - 3, t - 2, t - 1), (t - 3, t - 2, t), (t - 4, t - 2, t)]
        return deep + _top_row(t, t + 2 - a)

    if fam == "lemma3.7":
        _require(a in (None, 6), f"Lemma 3.7 fixes a = 6, got a={a}")
        _require(t >= 6, f"Lemma 3.7 needs t >= 6, got t={t}")
        return [
            (t - 3, t - 2, t - 1),
            (t - 4, t - 2, t),
            (t - 3, t - 2, t),
            (t - 4, t - 1, t),
            (t - 3, t - 1, t),
            (t - 2, t - 1, t),
        ]

    k = int(fam[4:])
    deep_offsets = _CASE_DEEP[k]
    deep = [tuple(t - d for d in off) for off in deep_offsets]
    c = len(deep)
    lowest = min(x for x, _y, _z in deep)
    a_min = c + (t - 1 - lowest)
    if a is None:
        a = a_min
    _require(a >= a_min,
             f"case {k} requires a >= {a_min} at t={t} (top-row closure), got a={a}")
    _require(a <= t - 2,
             f"Theorem 1.12 cases assume m >= C(t-1,3)+C(t-2,2), i.e. "
             f"a <= t-2, got a={a}, t={t}")
    return deep + _top_row(t, t - 1 - (a - c))


def build_configuration(spec: ConfigurationSpec) -> RGraph:
    """Construct and audit the left-compressed graph of a family instance."""
    comp_triples = configuration_complement(spec)
    t = spec.t
    comp_set = frozenset(tuple(sorted(e)) for e in comp_triples)
    if len(comp_set) != len(comp_triples):
        raise ConfigurationError(
            f"{spec.label()}: complement has repeated triples {sorted(comp_triples)}"
        )
    full = RGraph.complete(3, t)
    g = RGraph(3, t, full.edges - comp_set)
    if not is_left_compressed(g):
        raise ConfigurationError(
            f"{spec.label()}: constructed graph is not left-compressed"
        )
    expected_a = len(comp_set)
    if g.m != comb(t, 3) - expected_a:
        raise ConfigurationError(f"{spec.label()}: edge count mismatch")
    if complement(g).edges != comp_set:
        raise ConfigurationError(f"{spec.label()}: complement audit failed")
    return g


def configuration_a(spec: ConfigurationSpec) -> int:
    return len(configuration_complement(spec))


def check_theorem_inequality(spec: ConfigurationSpec,
                             opts: VerifierOptions | None = None) -> InequalityCheck:
    """Solve the family graph and its colex rival; pass iff the colex value
    is not beaten beyond tolerance (both solves must certify)."""
    opts = opts or VerifierOptions()
    g = build_configuration(spec)
    a = comb(spec.t, 3) - g.m
    m = g.m
    res_g = lagrangian(g, opts.solver)
    res_c = lagrangian(build_colex_graph(3, m), opts.solver)
    margin = res_c.value - res_g.value
    certified = res_g.certified and res_c.certified
    return InequalityCheck(
        family=spec.family,
        t=spec.t,
        a=a,
        i=spec.i,
        m=m,
        config_value=res_g.value,
        colex_value=res_c.value,
        margin=margin,
        passed=bool(certified and margin >= -opts.ineq_tol),
        certified=certified,
        inconclusive=not certified,
    )


def in_range_instances(family: str, t: int) -> list[ConfigurationSpec]:
    """Every valid parameterization of a family at a given t (may be empty)."""
    out = []
    if family == "thm1.10":
        for a in range(3, t - 1):
            for i in range(1, (a - 1) // 2 + 1):
                if t - 2 - i >= 1:
                    out.append(ConfigurationSpec("thm1.10", t, a=a, i=i))
    elif family in ("lemma3.3", "lemma3.4", "lemma3.6"):
        lo = {"lemma3.3": 6, "lemma3.4": 5, "lemma3.6": 7}[family]
        for a in range(lo, t - 1):
            out.append(ConfigurationSpec(family, t, a=a))
    elif family == "lemma3.5":
        if t >= 5:
            out.append(ConfigurationSpec("lemma3.5", t))
    elif family == "lemma3.7":
        if t >= 6:
            out.append(ConfigurationSpec("lemma3.7", t))
    elif family.startswith("case"):
        k = int(family[4:])
        deep = _CASE_DEEP[k]
        c = len(deep)
        lowest = t - max(off[0] for off in deep)
        a_min = c + (t - 1 - lowest)
        for a in range(a_min, t - 1):
            out.append(ConfigurationSpec(family, t, a=a))
    else:
        raise ConfigurationError(f"unknown family {family!r}")
    # drop parameterizations the builder itself rejects
    valid = []
    for spec in out:
        try:
            configuration_complement(spec)
        except ConfigurationError:
            continue
        valid.append(spec)
    return valid


# ---------------------------------------------------------------------------
# Exhaustive cells
# ---------------------------------------------------------------------------

def cell_window(t: int) -> range:
    """Edge counts m for which graphs on [t] are the canonical reduction."""
    return range(comb(t - 1, 3), comb(t, 3) + 1)


def verify_cell(t: int, m: int, opts: VerifierOptions | None = None) -> VerificationReport:
    """Enumerate the left-compressed class at (t, m) and compare Lagrangians."""
    opts = opts or VerifierOptions()
    if t < 4:
        raise ValueError(f"cells need t >= 4, got t={t}")
    if m not in cell_window(t):
        raise ValueError(
            f"m={m} outside the window C({t-1},3)={comb(t-1, 3)} .. "
            f"C({t},3)={comb(t, 3)} for t={t}"
        )
    colex_edges = build_colex_graph(3, m).edges
    results = []
    complete = True
    for idx, g in enumerate(enumerate_left_compressed(t, m)):
        if idx >= opts.max_graphs:
            complete = False
            break
        res = lagrangian(g, opts.solver)
        results.append((g, res))
    if not results:
        raise ValueError(f"no graphs enumerated at (t={t}, m={m})")

    max_value = max(res.value for _g, res in results)
    colex_value = None
    colex_certified = False
    for g, res in results:
        if g.edges == colex_edges:
            colex_value = res.value
            colex_certified = res.certified
            break
    if colex_value is None:
        raise RuntimeError(
            f"colex graph missing from enumeration at (t={t}, m={m})"
        )

    witnesses = [
        (g, res) for g, res in results if res.value >= max_value - opts.witness_tie
    ]
    witnesses.sort(key=lambda pair: tuple(colex_rank(e) for e in pair[0].sorted_edges()))
    uncertified = sum(1 for _g, res in results if not res.certified)
    gap = colex_value - max_value
    all_pass = (
        complete
        and gap >= -opts.ineq_tol
        and colex_certified
        and all(res.certified for _g, res in witnesses)
    )
    return VerificationReport(
        t=t,
        m=m,
        a=comb(t, 3) - m,
        colex_value=colex_value,
        max_value=max_value,
        gap=gap,
        graph_count=len(results),
        witnesses=tuple(serialize_edge_list(g) for g, _res in witnesses),
        all_pass=bool(all_pass),
        witness_supports=tuple(res.support for _g, res in witnesses),
        witness_values=tuple(res.value for _g, res in witnesses),
        uncertified=uncertified,
        complete=complete,
        seed=opts.solver.seed,
    )


def _cell_worker(args) -> VerificationReport:
    t, m, opts = args
    return verify_cell(t, m, opts)


def sweep(t_max: int, opts: VerifierOptions | None = None,
          workers: int = 1) -> list[VerificationReport]:
    """Run every cell for 4 <= t <= t_max; deterministic (t, m) order."""
    opts = opts or VerifierOptions()
    if not 4 <= t_max <= 8:
        raise ValueError(f"t_max must be within 4..8, got {t_max}")
    cells = [(t, m, opts) for t in range(4, t_max + 1) for m in cell_window(t)]
    if workers <= 1:
        reports = [_cell_worker(c) for c in cells]
    else:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_cell_worker, cells))
    reports.sort(key=lambda rep: (rep.t, rep.m))
    return reports


# ---------------------------------------------------------------------------
# Structural bound checks on cell witnesses
# ---------------------------------------------------------------------------

def support_lower_bound(k: int) -> int:
    """Minimum edge count forced by an optimal weighting with k positive weights."""
    return comb(k - 1, 3) + comb(k - 2, 2) - (k - 2)


def check_support_bound(report: VerificationReport) -> CheckResult:
    """Each extremal witness's support k must satisfy m >= the k-support bound."""
    details = []
    ok = True
    for sup in report.witness_supports:
        bound = support_lower_bound(sup)
        passed = report.m >= bound
        ok &= passed
        details.append(
            f"t={report.t} m={report.m}: support {sup} needs m >= {bound}: "
            f"{'ok' if passed else 'VIOLATED'}"
        )
    return CheckResult("support_bound", True, ok, tuple(details))


def check_vertex_bound(report: VerificationReport) -> CheckResult:
    """Witness supports never exceed t on a window cell."""
    ok = all(sup <= report.t for sup in report.witness_supports)
    return CheckResult(
        "vertex_bound",
        True,
        ok,
        tuple(
            f"t={report.t} m={report.m}: support {sup} <= t"
            for sup in report.witness_supports
        ),
    )


def delta_bound_params(t: int, m: int) -> int | None:
    """The offset a with m = C(t-1,3) + C(t-2,2) + a, if within the stated band."""
    a = m - comb(t - 1, 3) - comb(t - 2, 2)
    if -(t - 2) <= a <= t - 5:
        return a
    return None


def check_delta_bound(report: VerificationReport) -> CheckResult:
    """Extremal witnesses differ from the colex graph in few edges.

    Applies when m = C(t-1,3) + C(t-2,2) + a with -(t-2) <= a <= t-5; the
    bound is 2(t - a - 2) edges of symmetric difference.
    """
    a = delta_bound_params(report.t, report.m)
    if a is None:
        return CheckResult("delta_bound", False, True,
                           (f"m={report.m} outside the stated band at t={report.t}",))
    bound = 2 * (report.t - a - 2)
    colex_edges = build_colex_graph(3, report.m).edges
    details = []
    ok = True
    for text in report.witnesses:
        g = parse_edge_list(text)
        delta = len(g.edges ^ colex_edges)
        passed = delta <= bound
        ok &= passed
        details.append(
            f"t={report.t} m={report.m} a={a}: |delta|={delta} <= {bound}: "
            f"{'ok' if passed else 'VIOLATED'}"
        )
    return CheckResult("delta_bound", True, ok, tuple(details))
