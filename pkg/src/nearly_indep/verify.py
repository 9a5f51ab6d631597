"""Exhaustive checks of the alpha_1 bound and characterization theorems.

Every labeled graph on ``n`` vertices is identified with a mask over the
C(n, 2) vertex pairs in graph6 column order.  Universes can be split into
disjoint mask ranges; reports from the pieces merge into the same aggregate
report as a single run.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .errors import DomainError, GuardError
from .families import FamilySpec, generate
from .formats import emit_graph6, parse_graph6
from .goodness import is_good_definitional, is_good_structural
from .graph_core import Graph, from_triangle_mask, is_connected, triangle_mask
from .solver import AlphaResult, alpha1_exact, alpha_k_oracle, validate_witness

DEFAULT_MAX_ORDER = 7
OVERRIDE_MAX_ORDER = 8
ISO_GUARD = 10
SPOT_RATE = 100  # one graph in SPOT_RATE gets an oracle cross-check
DEFAULT_SEED = 0

THEOREMS = {
    "T1": "T1_general_bounds",
    "T2": "T2_lower_connected_good",
    "T3": "T3_structure_H",
    "T4": "T4_upper_connected_extremal",
}

_M64 = (1 << 64) - 1


# Isomorphism ---------------------------------------------------------------

def _refine(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """Joint colour refinement.  Returns the stable colourings, or None if they differ."""
    c1, c2 = g1.degrees(), g2.degrees()
    classes = -1
    while True:
        if sorted(c1) != sorted(c2):
            return None
        sig1 = [(c1[v], tuple(sorted(c1[w] for w in _bits(g1.adj[v])))) for v in range(g1.n)]
        sig2 = [(c2[v], tuple(sorted(c2[w] for w in _bits(g2.adj[v])))) for v in range(g2.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        c1 = [palette[s] for s in sig1]
        c2 = [palette[s] for s in sig2]
        if len(palette) == classes:
            return (c1, c2) if sorted(c1) == sorted(c2) else None
        classes = len(palette)


def _bits(s: int) -> Iterator[int]:
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def is_isomorphic(g1: Graph, g2: Graph, *, override: bool = False) -> bool:
    """Backtracking search for an edge-preserving bijection, pruned by colour refinement."""
    if g1.n != g2.n:
        raise DomainError(f"orders differ: {g1.n} vs {g2.n}")
    if g1.n > ISO_GUARD and not override:
        raise GuardError(f"isomorphism refused: n={g1.n} exceeds ISO_GUARD={ISO_GUARD}", guard="ISO_GUARD")
    if g1.m != g2.m:
        return False
    colours = _refine(g1, g2)
    if colours is None:
        return False
    c1, c2 = colours
    n = g1.n
    sizes = {}
    for c in c1:
        sizes[c] = sizes.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (sizes[c1[v]], -g1.degree(v), v))
    image = [0] * n
    a1, a2 = g1.adj, g2.adj

    def extend(depth: int, used: int, mapped1: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        # Neighbours of v among already-mapped vertices, translated into g2.
        want = 0
        for a in _bits(a1[v] & mapped1):
            want |= 1 << image[a]
        for w in range(n):
            if used >> w & 1 or c2[w] != c1[v]:
                continue
            if a2[w] & used != want:
                continue
            image[v] = w
            if extend(depth + 1, used | (1 << w), mapped1 | (1 << v)):
                return True
        return False

    return extend(0, 0, 0)


# Universes -----------------------------------------------------------------

def _check_budget(n: int, override: bool) -> None:
    if n < 0:
        raise DomainError(f"negative order {n}")
    limit = OVERRIDE_MAX_ORDER if override else DEFAULT_MAX_ORDER
    if n > limit:
        hint = " (pass override to allow n = 8)" if not override and n <= OVERRIDE_MAX_ORDER else ""
        raise GuardError(
            f"enumeration refused: n={n} exceeds the labeled-graph budget of {limit}{hint}",
            guard="DEFAULT_MAX_ORDER" if not override else "OVERRIDE_MAX_ORDER",
        )


@dataclass(frozen=True)
class GraphUniverse:
    """Labeled graphs on ``n`` vertices with masks in ``[start, stop)``."""

    n: int
    filter: str = "all"
    start: int = 0
    stop: int | None = None

    def __post_init__(self) -> None:
        if self.filter not in ("all", "connected"):
            raise DomainError(f"unknown filter {self.filter!r}")

    @property
    def cardinality(self) -> int:
        """Number of masks covered before filtering."""
        return self.end - self.start

    @property
    def end(self) -> int:
        total = 1 << (self.n * (self.n - 1) // 2)
        return total if self.stop is None else min(self.stop, total)

    def shards(self, count: int) -> list["GraphUniverse"]:
        """Split into ``count`` contiguous, disjoint mask ranges."""
        lo, hi = self.start, self.end
        step, extra = divmod(hi - lo, count)
        out = []
        for i in range(count):
            width = step + (1 if i < extra else 0)
            out.append(GraphUniverse(self.n, self.filter, lo, lo + width))
            lo += width
        return out

    def __iter__(self) -> Iterator[tuple[int, Graph]]:
        connected_only = self.filter == "connected"
        for mask in range(self.start, self.end):
            g = from_triangle_mask(self.n, mask)
            if connected_only and not is_connected(g):
                continue
            yield mask, g


def enumerate_labeled(n: int, filter: str = "all", *, override: bool = False) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices in increasing mask order."""
    _check_budget(n, override)
    for _, g in GraphUniverse(n, filter):
        yield g


# Reports -------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    orders: tuple[int, ...]
    examined: int
    spot_checks: int = 0
    violations: tuple[tuple[str, str], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        if other.theorem != self.theorem:
            raise DomainError(f"cannot merge {self.theorem} with {other.theorem}")
        return TheoremReport(
            self.theorem,
            tuple(sorted(set(self.orders) | set(other.orders))),
            self.examined + other.examined,
            self.spot_checks + other.spot_checks,
            tuple(sorted(self.violations + other.violations)),
        )

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "orders": list(self.orders),
            "examined": self.examined,
            "spot_checks": self.spot_checks,
            "passed": self.passed,
            "violations": [{"graph6": g6, "detail": d} for g6, d in self.violations],
        }


def merge_reports(reports: Iterable[TheoremReport]) -> TheoremReport:
    it = iter(reports)
    out = next(it)
    for r in it:
        out = out.merge(r)
    return out


# Predicates ----------------------------------------------------------------

def _targets(n: int) -> tuple[Graph, Graph]:
    return generate(FamilySpec("broom", (n, 3))), generate(FamilySpec("unicyclic_star", (n,)))


_TARGET_CACHE: dict[int, tuple[Graph, Graph]] = {}


def _is_extremal_shape(g: Graph) -> bool:
    n = g.n
    if g.m not in (n - 1, n):
        return False
    if n not in _TARGET_CACHE:
        _TARGET_CACHE[n] = _targets(n)
    return any(is_isomorphic(g, t) for t in _TARGET_CACHE[n])


def _alpha_problems(g: Graph, r: AlphaResult) -> str | None:
    if r.witness is not None and not validate_witness(g, r):
        return f"witness {r.vertices} fails validation for value {r.value}"
    if r.witness is None and r.value != 0:
        return f"value {r.value} reported without witness"
    return None


def _t1(g: Graph, r: AlphaResult) -> str | None:
    a, n, m = r.value, g.n, g.m
    if not 0 <= a <= n:
        return f"alpha1={a} outside [0, {n}]"
    if (a == 0) != (m == 0):
        return f"alpha1={a} with m={m}: lower-bound characterization fails"
    if (a == n) != (m == 1):
        return f"alpha1={a} with n={n}, m={m}: upper-bound characterization fails"
    return None


def _t2(g: Graph, r: AlphaResult) -> str | None:
    a = r.value
    if a < 2:
        return f"connected graph with alpha1={a} < 2"
    good = is_good_definitional(g).is_good
    if (a == 2) != good:
        return f"alpha1={a} but good={good}"
    return None


def _t4(g: Graph, r: AlphaResult) -> str | None:
    a, n = r.value, g.n
    if a > n - 1:
        return f"connected graph with alpha1={a} > n-1={n - 1}"
    shape = _is_extremal_shape(g)
    if (a == n - 1) != shape:
        return f"alpha1={a}, n-1={n - 1}, isomorphic to broom/unicyclic star={shape}"
    return None


def _t3(g: Graph) -> str | None:
    d = is_good_definitional(g).is_good
    s, _ = is_good_structural(g)
    if d != s:
        return f"definitional={d} structural={s}"
    return None


# Which graphs each theorem speaks about.
_DOMAIN: dict[str, Callable[[Graph], bool]] = {
    "T1_general_bounds": lambda g: g.n >= 1,
    "T2_lower_connected_good": lambda g: g.n >= 2 and is_connected(g),
    "T3_structure_H": lambda g: g.n >= 1,
    "T4_upper_connected_extremal": lambda g: g.n >= 3 and is_connected(g),
}
_ALPHA_CHECK = {
    "T1_general_bounds": _t1,
    "T2_lower_connected_good": _t2,
    "T4_upper_connected_extremal": _t4,
}
_MIN_ORDER = {
    "T1_general_bounds": 1,
    "T2_lower_connected_good": 2,
    "T3_structure_H": 1,
    "T4_upper_connected_extremal": 3,
}


def theorem_id(name: str) -> str:
    key = name.strip()
    if key in THEOREMS.values():
        return key
    short = key.upper()[:2]
    if short in THEOREMS and (len(key) == 2 or key[2] == "_"):
        return THEOREMS[short]
    raise DomainError(f"unknown theorem {name!r}; expected one of {sorted(THEOREMS)}")


def check_graph(theorem: str, g: Graph) -> str | None:
    """Violation detail for one graph, or None if it satisfies the theorem."""
    tid = theorem_id(theorem)
    if not _DOMAIN[tid](g):
        return None
    if tid == "T3_structure_H":
        return _t3(g)
    r = alpha1_exact(g)
    return _alpha_problems(g, r) or _ALPHA_CHECK[tid](g, r)


def _spot_selected(seed: int, n: int, mask: int) -> bool:
    # splitmix64 finalizer over (seed, n, mask)
    x = (seed * 0x9E3779B97F4A7C15 + (n << 48) + (mask & _M64) + (mask >> 64)) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    x ^= x >> 31
    return x % SPOT_RATE == 0


def check_graphs(
    theorem: str,
    graphs: Iterable[tuple[int, Graph]],
    *,
    seed: int = DEFAULT_SEED,
    spot_checks: bool = True,
) -> TheoremReport:
    """Run one theorem over ``(mask, graph)`` pairs; graphs outside its domain are skipped."""
    tid = theorem_id(theorem)
    in_domain = _DOMAIN[tid]
    alpha_check = _ALPHA_CHECK.get(tid)
    orders: set[int] = set()
    examined = 0
    spots = 0
    violations = []
    for mask, g in graphs:
        if not in_domain(g):
            continue
        examined += 1
        orders.add(g.n)
        if alpha_check is None:
            detail = _t3(g)
        else:
            r = alpha1_exact(g)
            detail = _alpha_problems(g, r) or alpha_check(g, r)
            if spot_checks and _spot_selected(seed, g.n, mask):
                spots += 1
                oracle = alpha_k_oracle(g, 1)
                if oracle.value != r.value:
                    detail = detail or f"alpha1_exact={r.value} but oracle={oracle.value}"
        if detail:
            violations.append((emit_graph6(g).decode("ascii"), detail))
    return TheoremReport(tid, tuple(sorted(orders)), examined, spots, tuple(sorted(violations)))


def _run_universe(args: tuple[str, GraphUniverse, int, bool]) -> TheoremReport:
    theorem, universe, seed, spot = args
    report = check_graphs(theorem, universe, seed=seed, spot_checks=spot)
    # An empty shard still records its order so merged reports agree.
    return TheoremReport(report.theorem, (universe.n,), report.examined, report.spot_checks, report.violations)


def default_workers() -> int:
    env = os.environ.get("NEARLY_INDEP_THREADS")
    if env:
        try:
            workers = int(env)
        except ValueError:
            raise DomainError(f"NEARLY_INDEP_THREADS must be an integer, got {env!r}") from None
        if workers < 1:
            raise DomainError(f"NEARLY_INDEP_THREADS must be >= 1, got {workers}")
        return workers
    return os.cpu_count() or 1


def check_theorem(
    theorem: str,
    n: int,
    *,
    seed: int = DEFAULT_SEED,
    override: bool = False,
    workers: int = 1,
    shards: int | None = None,
    spot_checks: bool = True,
) -> TheoremReport:
    """Exhaustive check over all labeled graphs of order ``n``.

    The mask range is cut into ``shards`` pieces (default: one per worker);
    the merged report does not depend on the split.
    """
    tid = theorem_id(theorem)
    _check_budget(n, override)
    if n < _MIN_ORDER[tid]:
        return TheoremReport(tid, (n,), 0)
    filt = "all" if tid in ("T1_general_bounds", "T3_structure_H") else "connected"
    pieces = GraphUniverse(n, filt).shards(shards or workers)
    jobs = [(tid, u, seed, spot_checks) for u in pieces]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_universe, jobs))
    else:
        reports = [_run_universe(job) for job in jobs]
    return merge_reports(reports)


def check_T1_general_bounds(n: int, **kwargs) -> TheoremReport:
    return check_theorem("T1", n, **kwargs)


def check_T2_lower_connected(n: int, **kwargs) -> TheoremReport:
    return check_theorem("T2", n, **kwargs)


def check_T3_structure(n: int, **kwargs) -> TheoremReport:
    return check_theorem("T3", n, **kwargs)


def check_T4_upper_connected(n: int, **kwargs) -> TheoremReport:
    return check_theorem("T4", n, **kwargs)


def check_corpus(theorem: str, graphs: Iterable[Graph], *, seed: int = DEFAULT_SEED) -> TheoremReport:
    """Check graphs from an external source (e.g. a graph6 file) instead of enumerating."""
    return check_graphs(theorem, ((triangle_mask(g), g) for g in graphs), seed=seed)


def recheck_violation(theorem: str, graph6: str) -> bool:
    """True iff the certificate re-parses and still violates the theorem."""
    return check_graph(theorem, parse_graph6(graph6)) is not None
