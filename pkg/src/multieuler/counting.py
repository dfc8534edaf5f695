"""Exact Eulerian-circuit counting.

Two independent routes are provided: memoized exhaustive enumeration of edge
sequences, and the BEST theorem with an exact fraction-free determinant.
What counts as "distinct" circuits is made explicit by :class:`Convention`.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from .core import Multidigraph, MultiGraph, degree_profile, serialize
from .eulerian import classify
from .exceptions import GraphError, NotCircuitEulerianError, TooLargeError
from .twoway import FamilySpec, double, random_connected_multigraph

ENUMERATION_LIMIT = 14


@dataclass(frozen=True)
class Convention:
    """Equivalence under which Eulerian circuits are counted.

    ``cyclic``: one circuit per cyclic edge order.
    ``fixed-start``: closed trails leaving ``vertex``; ``vertex=None`` means the
    vertex of largest out-degree (smallest id on ties).
    ``all-rotations``: every rotation of every circuit counted separately.
    """

    kind: str
    vertex: int | None = None

    def __post_init__(self):
        if self.kind not in ("cyclic", "fixed-start", "all-rotations"):
            raise GraphError(f"unknown convention {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Convention":
        if text in ("cyclic", "all-rotations"):
            return cls(text)
        if text.startswith("fixed-start:"):
            arg = text.split(":", 1)[1]
            if arg == "max":
                return cls("fixed-start")
            try:
                return cls("fixed-start", int(arg))
            except ValueError:
                pass
        raise GraphError(
            f"bad convention {text!r}; use cyclic, fixed-start:<v>, fixed-start:max or all-rotations"
        )

    def resolve(self, d: Multidigraph) -> "Convention":
        if self.kind != "fixed-start" or self.vertex is not None:
            if self.vertex is not None and not 0 <= self.vertex < d.n:
                raise GraphError(f"start vertex {self.vertex} outside 0..{d.n - 1}")
            return self
        tau = degree_profile(d).tau
        return Convention("fixed-start", max(range(d.n), key=lambda v: (tau[v], -v)))

    @property
    def label(self) -> str:
        if self.kind == "fixed-start":
            return "fixed-start:max" if self.vertex is None else f"fixed-start:{self.vertex}"
        return self.kind


CYCLIC = Convention("cyclic")
ALL_ROTATIONS = Convention("all-rotations")


def fixed_start(v: int | None = None) -> Convention:
    return Convention("fixed-start", v)


@lru_cache(maxsize=None)
def factorial(k: int) -> int:
    return math.factorial(k)


def _completions(d: Multidigraph, start: int):
    """Counter of all-edge closed continuations, memoized on (vertex, used-set)."""
    full = (1 << d.m) - 1
    out = d.out_edges
    heads = [b for _, b in d.edges]
    memo: dict[tuple[int, int], int] = {}

    def go(v: int, used: int) -> int:
        if used == full:
            return 1 if v == start else 0
        key = (v, used)
        if key in memo:
            return memo[key]
        total = 0
        for k in out[v]:
            bit = 1 << k
            if not used & bit:
                total += go(heads[k], used | bit)
        memo[key] = total
        return total

    return go


def _enumerate_fixed(d: Multidigraph, v: int) -> int:
    go = _completions(d, v)
    return sum(go(d.edges[k][1], 1 << k) for k in d.out_edges[v])


def enumerate_circuits(
    d: Multidigraph, conv: Convention = CYCLIC, limit: int = ENUMERATION_LIMIT
) -> int:
    """Count Eulerian circuits by exhaustive search over edge choices.

    Branches are memoized on (current vertex, set of used edges), which keeps
    the search exact while avoiding repeated subtrees.
    """
    if d.m > limit:
        raise TooLargeError(
            f"{d.m} edges exceeds the enumeration limit {limit}; use count_best"
        )
    if d.m == 0 or not classify(d).is_circuit:
        return 0
    conv = conv.resolve(d)
    if conv.kind == "cyclic":
        a, b = d.edges[0]
        return _completions(d, a)(b, 1)
    if conv.kind == "fixed-start":
        return _enumerate_fixed(d, conv.vertex)
    return sum(_enumerate_fixed(d, v) for v in range(d.n))


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def arborescence_count(
    d: Multidigraph, root: int, vertices: Sequence[int] | None = None
) -> int:
    """Spanning arborescences directed toward ``root``.

    ``vertices`` restricts the spanning set (default: all vertices). Loops are
    ignored.
    """
    if not 0 <= root < d.n:
        raise GraphError(f"root {root} outside 0..{d.n - 1}")
    vs = list(range(d.n)) if vertices is None else sorted(vertices)
    if root not in vs:
        raise GraphError(f"root {root} not among the spanning vertices")
    pos = {v: i for i, v in enumerate(vs)}
    size = len(vs)
    lap = [[0] * size for _ in range(size)]
    for a, b in d.edges:
        if a == b or a not in pos or b not in pos:
            continue
        lap[pos[a]][pos[a]] += 1
        lap[pos[a]][pos[b]] -= 1
    r = pos[root]
    minor = [row[:r] + row[r + 1:] for i, row in enumerate(lap) if i != r]
    return bareiss_determinant(minor)


def count_best(d: Multidigraph, root: int | None = None) -> int:
    """Cyclic Eulerian-circuit count from the BEST theorem."""
    verdict = classify(d)
    if not verdict.is_circuit:
        raise NotCircuitEulerianError(verdict)
    tau = degree_profile(d).tau
    support = d.non_isolated()
    if root is None:
        root = support[0]
    elif root not in support:
        raise GraphError(f"root {root} is isolated")
    total = arborescence_count(d, root, support)
    for v in support:
        total *= factorial(tau[v] - 1)
    return total


def fingerprint(d: Multidigraph | MultiGraph) -> str:
    return hashlib.sha256(serialize(d).encode()).hexdigest()[:16]


@dataclass
class CountReport:
    convention: str
    count: int
    counts: dict[str, int]
    method: str
    cross_checked: bool
    graph: str
    fingerprint: str
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "convention": self.convention,
            "count": str(self.count),
            "counts": {k: str(v) for k, v in self.counts.items()},
            "method": self.method,
            "cross_checked": self.cross_checked,
            "graph": self.graph,
            "fingerprint": self.fingerprint,
            "elapsed_ms": self.elapsed_ms if timing else None,
        }

    def to_json(self, pretty: bool = False, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2 if pretty else None)


def _all_labels(d: Multidigraph) -> list[Convention]:
    tau = degree_profile(d).tau
    return [CYCLIC, ALL_ROTATIONS] + [fixed_start(v) for v in range(d.n) if tau[v] > 0]


def count(
    d: Multidigraph,
    conv: Convention = CYCLIC,
    enumeration_limit: int = 12,
    cross_check_limit: int = 10,
) -> CountReport:
    """Count under every convention, choosing the method by size.

    Small graphs are enumerated; at or below ``cross_check_limit`` edges the
    BEST value is computed too and must agree.
    """
    t0 = time.perf_counter()
    resolved = conv.resolve(d)
    tau = degree_profile(d).tau
    labels = _all_labels(d)
    cross = False
    if d.m == 0 or not classify(d).is_circuit:
        method = "classification"
        counts = {c.label: 0 for c in labels}
    elif d.m <= enumeration_limit:
        method = "enumeration"
        counts = {c.label: enumerate_circuits(d, c, limit=enumeration_limit) for c in labels}
        if d.m <= cross_check_limit:
            best = count_best(d)
            if best != counts["cyclic"]:
                raise AssertionError(
                    f"enumeration ({counts['cyclic']}) and BEST ({best}) disagree on {d!r}"
                )
            cross = True
    else:
        method = "best-theorem"
        cyc = count_best(d)
        counts = {"cyclic": cyc, "all-rotations": cyc * d.m}
        counts.update({fixed_start(v).label: cyc * tau[v] for v in range(d.n) if tau[v] > 0})
    value = counts.get(resolved.label, 0)
    return CountReport(
        convention=resolved.label,
        count=value,
        counts=counts,
        method=method,
        cross_checked=cross,
        graph=serialize(d),
        fingerprint=fingerprint(d),
        elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
    )


def closed_form(spec: FamilySpec) -> int | None:
    """Published value of f for the doubled family member, if one is claimed.

    These are claims to be checked, not an oracle. Families with a
    non-unit multiplicity have no claimed value.
    """
    if not spec.unit_multiplicity:
        return None
    n = spec.n
    if spec.family == "post":
        return 2
    if spec.family == "asterisk":
        return factorial(n - 1)
    if spec.family == "circuit":
        return 2 * n
    if spec.family == "complete":
        return factorial(n - 1) * n ** (n - 2)
    return None


# --- f*(n) search -----------------------------------------------------------

FSTAR_NOTE = (
    "candidates are connected undirected multigraphs G on V(n) (loops and "
    "parallel edges allowed) with total degree 2*m(G) <= n*C(n,2); each is "
    "scored by the Eulerian circuit count of its two-way doubling"
)


@dataclass
class FStarReport:
    n: int
    mode: str
    seed: int | None
    budget: int | None
    convention: str
    degree_bound: int
    best_graph: str | None
    best_count: int
    candidates: int
    note: str = FSTAR_NOTE
    elapsed_ms: float | None = field(default=None, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "budget": self.budget,
            "convention": self.convention,
            "degree_bound": self.degree_bound,
            "graph": self.best_graph,
            "count": str(self.best_count),
            "candidates": self.candidates,
            "method": "enumeration+best-theorem",
            "note": self.note,
            "elapsed_ms": self.elapsed_ms if timing else None,
        }

    def to_json(self, pretty: bool = False, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2 if pretty else None)


def degree_bound(n: int) -> int:
    return n * math.comb(n, 2)


def exhaustive_candidates(n: int):
    """All connected multigraphs on range(n) within the degree bound.

    Edges are emitted sorted, each multiset exactly once.
    """
    max_m = degree_bound(n) // 2
    kinds = [(x, y) for x in range(n) for y in range(x, n)]
    for m in range(1, max_m + 1):
        for combo in combinations_with_replacement(kinds, m):
            g = MultiGraph(n, combo)
            if g.is_connected():
                yield g


def randomized_candidates(n: int, seed: int, budget: int):
    rng = random.Random(seed)
    max_m = degree_bound(n) // 2
    for _ in range(budget):
        yield MultiGraph(n, tuple(sorted(random_connected_multigraph(n, rng, max_m))))


def _score(args: tuple[MultiGraph, Convention]) -> tuple[int, str]:
    g, conv = args
    return count(double(g), conv).count, serialize(g)


def fstar_search(
    n: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    budget: int | None = None,
    convention: Convention | None = None,
    workers: int = 1,
) -> FStarReport:
    """Search for the largest circuit count among bounded-degree multigraphs.

    The result is the lexicographic maximum of (count, serialized graph), so
    it does not depend on ``workers``.
    """
    if n < 2:
        raise GraphError("f* search needs n >= 2")
    conv = convention or fixed_start()
    if mode == "exhaustive":
        if n > 3:
            raise TooLargeError(f"exhaustive f* search is limited to n <= 3, got {n}")
        stream = exhaustive_candidates(n)
        seed = budget = None
    elif mode == "randomized":
        if seed is None or budget is None:
            raise GraphError("randomized f* search needs a seed and a budget")
        stream = randomized_candidates(n, seed, budget)
    else:
        raise GraphError(f"unknown search mode {mode!r}")

    t0 = time.perf_counter()
    jobs = ((g, conv) for g in stream)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(_score, jobs, chunksize=16))
    else:
        scores = [_score(job) for job in jobs]
    best = max(scores, default=(0, None))
    return FStarReport(
        n=n,
        mode=mode,
        seed=seed,
        budget=budget,
        convention=conv.label,
        degree_bound=degree_bound(n),
        best_graph=best[1],
        best_count=best[0],
        candidates=len(scores),
        elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
    )
