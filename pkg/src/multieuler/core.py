"""Finite directed multigraphs with identified edges.

Vertices are the dense range ``0..n-1``. Edges are kept in insertion order and
the position of an edge in that order is its id, so parallel edges and loops
are ordinary, distinguishable entries.

>>> d = from_edge_list(2, [(0, 1), (0, 1), (1, 0)])
>>> count_matrix(d)
((0, 2), (1, 0))
>>> print(serialize(d), end="")
n 2
e 0 1
e 0 1
e 1 0
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .exceptions import GraphError, ParseError

Edge = tuple[int, int]


def _check_edges(n: int, pairs: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    edges = []
    for pair in pairs:
        a, b = pair
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        edges.append((int(a), int(b)))
    return tuple(edges)


@dataclass(frozen=True)
class Multidigraph:
    """Immutable directed multigraph on ``range(n)``.

    ``edges[k]`` is the ``(tail, head)`` pair of the edge with id ``k``.
    Construct through :func:`from_edge_list` to get range validation.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _check_edges(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, ids of edges leaving it, in increasing id order."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for k, (a, _) in enumerate(self.edges):
            out[a].append(k)
        return tuple(tuple(ks) for ks in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, (_, b) in enumerate(self.edges):
            inc[b].append(k)
        return tuple(tuple(ks) for ks in inc)

    def non_isolated(self) -> list[int]:
        """Vertices touched by at least one edge, ascending."""
        seen = set()
        for a, b in self.edges:
            seen.add(a)
            seen.add(b)
        return sorted(seen)

    def with_edges(self, pairs: Iterable[Sequence[int]]) -> "Multidigraph":
        """New graph with ``pairs`` appended after the existing edges."""
        return Multidigraph(self.n, self.edges + _check_edges(self.n, pairs))

    def __repr__(self):
        return f"Multidigraph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class MultiGraph:
    """Immutable undirected multigraph; an edge ``(x, y)`` is the pair {x, y}."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _check_edges(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        """True iff every vertex is reachable from vertex 0."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class DegreeProfile:
    tau: tuple[int, ...]
    eta: tuple[int, ...]

    @property
    def delta(self) -> tuple[int, ...]:
        return tuple(t + e for t, e in zip(self.tau, self.eta))

    @property
    def total(self) -> int:
        return sum(self.tau) + sum(self.eta)

    def is_balanced(self) -> bool:
        return self.tau == self.eta


@dataclass(frozen=True)
class Trail:
    """Sequence of edge ids. Vertex sequence is derived against a graph."""

    edges: tuple[int, ...]

    def __len__(self):
        return len(self.edges)

    def vertices(self, d: Multidigraph) -> list[int]:
        if not self.edges:
            return []
        seq = [d.edges[self.edges[0]][0]]
        seq.extend(d.edges[k][1] for k in self.edges)
        return seq

    def is_closed(self, d: Multidigraph) -> bool:
        vs = self.vertices(d)
        return bool(vs) and vs[0] == vs[-1]

    def format(self, d: Multidigraph) -> str:
        return " -> ".join(str(v) for v in self.vertices(d))


def is_valid_trail(
    d: Multidigraph,
    edges: Sequence[int],
    *,
    closed: bool | None = None,
    eulerian: bool = False,
    allow_repeats: bool = False,
) -> bool:
    """Check chaining, id range, repetition, closure and coverage.

    ``closed=None`` accepts either shape. ``eulerian=True`` requires every
    edge id to appear exactly once.
    """
    if not edges:
        return not eulerian or d.m == 0
    if any(not (0 <= k < d.m) for k in edges):
        return False
    if not allow_repeats and len(set(edges)) != len(edges):
        return False
    for k1, k2 in zip(edges, edges[1:]):
        if d.edges[k1][1] != d.edges[k2][0]:
            return False
    is_closed = d.edges[edges[0]][0] == d.edges[edges[-1]][1]
    if closed is not None and closed != is_closed:
        return False
    if eulerian and sorted(edges) != list(range(d.m)):
        return False
    return True


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Multidigraph:
    return Multidigraph(n, tuple(pairs))


def count_matrix(d: Multidigraph) -> tuple[tuple[int, ...], ...]:
    """n×n matrix whose (i, j) entry is the number of edges i→j."""
    rows = [[0] * d.n for _ in range(d.n)]
    for a, b in d.edges:
        rows[a][b] += 1
    return tuple(tuple(r) for r in rows)


def from_count_matrix(matrix: Sequence[Sequence[int]]) -> Multidigraph:
    """Graph with edges listed row-major, parallel copies adjacent."""
    n = len(matrix)
    pairs = [(i, j) for i in range(n) for j in range(n) for _ in range(matrix[i][j])]
    return Multidigraph(n, tuple(pairs))


def degree_profile(d: Multidigraph) -> DegreeProfile:
    tau = [0] * d.n
    eta = [0] * d.n
    for a, b in d.edges:
        tau[a] += 1
        eta[b] += 1
    return DegreeProfile(tuple(tau), tuple(eta))


def serialize(d: Multidigraph | MultiGraph) -> str:
    lines = [f"n {d.n}"]
    lines.extend(f"e {a} {b}" for a, b in d.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Multidigraph:
    """Read the line format written by :func:`serialize`.

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    pairs: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields[1:]]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if n is None:
            if fields[0] != "n" or len(values) != 1:
                raise ParseError(lineno, f"expected 'n <count>', got {line!r}")
            if values[0] < 1:
                raise ParseError(lineno, "vertex count must be at least 1")
            n = values[0]
            continue
        if fields[0] != "e" or len(values) != 2:
            raise ParseError(lineno, f"expected 'e <tail> <head>', got {line!r}")
        a, b = values
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(lineno, f"edge ({a}, {b}) out of range for n={n}")
        pairs.append((a, b))
    if n is None:
        raise ParseError(0, "missing 'n <count>' header")
    return Multidigraph(n, tuple(pairs))


def to_dot(d: Multidigraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(d.n))
    lines.extend(f'  {a} -> {b} [label="{k}"];' for k, (a, b) in enumerate(d.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
