"""Eulerian classification and constructive trail extraction.

Vertices that touch no edge are ignored throughout, so padding a graph with
isolated vertices never changes a verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .connectivity import is_weakly_connected, scc
from .core import Multidigraph, Trail, degree_profile
from .exceptions import (
    GraphError,
    MalformedTrailError,
    NotCircuitEulerianError,
    NotPathEulerianError,
    TrivialGraphError,
)


class Verdict(enum.Enum):
    CIRCUIT = "CircuitEulerian"
    PATH = "PathEulerian"
    NONE = "NotEulerian"


class Reason(enum.Enum):
    TRIVIAL = "trivial"
    DEGREE_IMBALANCE = "degree-imbalance"
    NOT_CONNECTED = "not-connected"
    NOT_STRONGLY_CONNECTED = "not-strongly-connected"


@dataclass(frozen=True)
class EulerClassification:
    verdict: Verdict
    b: int | None = None
    e: int | None = None
    reason: Reason | None = None

    @classmethod
    def circuit(cls):
        return cls(Verdict.CIRCUIT)

    @classmethod
    def path(cls, b: int, e: int):
        return cls(Verdict.PATH, b=b, e=e)

    @classmethod
    def not_eulerian(cls, reason: Reason):
        return cls(Verdict.NONE, reason=reason)

    @property
    def is_circuit(self) -> bool:
        return self.verdict is Verdict.CIRCUIT

    @property
    def is_path(self) -> bool:
        return self.verdict is Verdict.PATH

    def __str__(self):
        if self.verdict is Verdict.PATH:
            return f"PathEulerian b={self.b} e={self.e}"
        if self.verdict is Verdict.NONE:
            return f"NotEulerian: {self.reason.value}"
        return "CircuitEulerian"


def _strongly_connected_on(d: Multidigraph, vertices: list[int]) -> bool:
    labels = scc(d).labels
    return len({labels[v] for v in vertices}) <= 1


def classify(d: Multidigraph) -> EulerClassification:
    """Three-way verdict from degrees and connectivity.

    Checks run in the order degree balance, weak connectivity, strong
    connectivity; the first failure is reported.
    """
    if d.m == 0:
        raise TrivialGraphError("graph has no edges")
    prof = degree_profile(d)
    surplus = [t - h for t, h in zip(prof.tau, prof.eta)]
    sources = [v for v, s in enumerate(surplus) if s != 0]
    if not sources:
        b = e = None
    elif (
        len(sources) == 2
        and sorted(surplus[v] for v in sources) == [-1, 1]
    ):
        b = next(v for v in sources if surplus[v] == 1)
        e = next(v for v in sources if surplus[v] == -1)
    else:
        return EulerClassification.not_eulerian(Reason.DEGREE_IMBALANCE)

    support = d.non_isolated()
    if not is_weakly_connected(d, support):
        return EulerClassification.not_eulerian(Reason.NOT_CONNECTED)

    if b is None:
        if not _strongly_connected_on(d, support):
            return EulerClassification.not_eulerian(Reason.NOT_STRONGLY_CONNECTED)
        return EulerClassification.circuit()

    closed_up = d.with_edges([(e, b)])
    if not _strongly_connected_on(closed_up, support):
        return EulerClassification.not_eulerian(Reason.NOT_STRONGLY_CONNECTED)
    return EulerClassification.path(b, e)


def _amalgamate(d: Multidigraph, start: int) -> list[int]:
    # Walk until stuck (balance forces the walk back to its start), then
    # splice a fresh closed walk at the first vertex that still has unused
    # out-edges. Unused out-edges are always taken smallest id first.
    nxt = [0] * d.n
    out = d.out_edges

    def walk(v: int) -> list[int]:
        sub = []
        while nxt[v] < len(out[v]):
            k = out[v][nxt[v]]
            nxt[v] += 1
            sub.append(k)
            v = d.edges[k][1]
        return sub

    circuit = walk(start)
    i = 0
    while i < len(circuit):
        v = d.edges[circuit[i]][1]
        if nxt[v] < len(out[v]):
            circuit[i + 1:i + 1] = walk(v)
        i += 1
    return circuit


def find_euler_circuit(d: Multidigraph) -> Trail:
    """Eulerian dicircuit starting at the smallest non-isolated vertex."""
    verdict = classify(d)
    if not verdict.is_circuit:
        raise NotCircuitEulerianError(verdict)
    return Trail(tuple(_amalgamate(d, d.non_isolated()[0])))


def find_euler_path(d: Multidigraph) -> Trail:
    """Eulerian dipath b→…→e via a virtual closing edge e→b."""
    verdict = classify(d)
    if not verdict.is_path:
        raise NotPathEulerianError(verdict)
    closed_up = d.with_edges([(verdict.e, verdict.b)])
    virtual = d.m
    circuit = _amalgamate(closed_up, closed_up.non_isolated()[0])
    j = circuit.index(virtual)
    return Trail(tuple(circuit[j + 1:] + circuit[:j]))


@dataclass(frozen=True)
class SplitMapping:
    """Edge k of the original graph became edges ``pairs[k]`` of the split."""

    n_original: int
    pairs: tuple[tuple[int, int], ...]


def split_transform(d: Multidigraph) -> tuple[Multidigraph, SplitMapping]:
    """Subdivide every edge a→b into a→o→b with a fresh midpoint o = n + k."""
    pairs = []
    new_edges = []
    for k, (a, b) in enumerate(d.edges):
        mid = d.n + k
        pairs.append((len(new_edges), len(new_edges) + 1))
        new_edges.append((a, mid))
        new_edges.append((mid, b))
    return Multidigraph(d.n + d.m, tuple(new_edges)), SplitMapping(d.n, tuple(pairs))


def contract_split_trail(trail: Trail | Sequence[int], mapping: SplitMapping) -> Trail:
    edges = list(trail.edges if isinstance(trail, Trail) else trail)
    origin = {}
    for k, (first, second) in enumerate(mapping.pairs):
        origin[first] = (k, 0)
        origin[second] = (k, 1)
    if len(edges) % 2:
        raise MalformedTrailError("split trail must have even length")
    if edges and edges[0] in origin and origin[edges[0]][1] == 1:
        # trail starts at a midpoint; rotate to an original vertex
        edges = edges[1:] + edges[:1]
    result = []
    for first, second in zip(edges[::2], edges[1::2]):
        if first not in origin or second not in origin:
            raise MalformedTrailError(f"edge id outside the split mapping: {first}, {second}")
        k1, half1 = origin[first]
        k2, half2 = origin[second]
        if k1 != k2 or half1 != 0 or half2 != 1:
            raise MalformedTrailError(
                f"edges {first}, {second} do not form one subdivided edge"
            )
        result.append(k1)
    return Trail(tuple(result))


def _check_waypoints(d: Multidigraph, waypoints: Sequence[int]) -> list[int]:
    wp = [int(v) for v in waypoints]
    if len(wp) < 2:
        raise GraphError("a dipath needs at least two waypoints")
    for v in wp:
        if not 0 <= v < d.n:
            raise GraphError(f"waypoint {v} outside 0..{d.n - 1}")
    return wp


def add_dipath(d: Multidigraph, waypoints: Sequence[int]) -> Multidigraph:
    """Append fresh edges along ``waypoints`` to a circuit-Eulerian graph.

    The result is path-Eulerian from the first to the last waypoint.
    """
    wp = _check_waypoints(d, waypoints)
    if wp[0] == wp[-1]:
        raise GraphError("dipath endpoints must differ")
    verdict = classify(d)
    if not verdict.is_circuit:
        raise NotCircuitEulerianError(verdict)
    if not set(wp) & set(d.non_isolated()):
        raise GraphError("dipath must touch the graph's edges")
    return d.with_edges(zip(wp, wp[1:]))


def add_return_path(d: Multidigraph, waypoints: Sequence[int]) -> Multidigraph:
    """Close a path-Eulerian graph with fresh edges running e→…→b."""
    wp = _check_waypoints(d, waypoints)
    verdict = classify(d)
    if not verdict.is_path:
        raise NotPathEulerianError(verdict)
    if (wp[0], wp[-1]) != (verdict.e, verdict.b):
        raise GraphError(
            f"return path must run from e={verdict.e} to b={verdict.b}, "
            f"got {wp[0]}..{wp[-1]}"
        )
    return d.with_edges(zip(wp, wp[1:]))
