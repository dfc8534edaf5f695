"""Two-way doubling, multiplicity expansion and the standard graph families."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .core import Multidigraph, MultiGraph, count_matrix
from .exceptions import GraphError

FAMILIES = ("post", "asterisk", "circuit", "complete", "tree", "random")
MIN_SIZE = {"post": 2, "asterisk": 2, "circuit": 3, "complete": 2, "tree": 1, "random": 1}


def _key(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x <= y else (y, x)


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for one member of a named family.

    ``mu`` maps undirected edges to multiplicities and is applied after the
    base graph is built. ``max_edges`` bounds the edge count of ``random``.
    """

    family: str
    n: int
    seed: int | None = None
    mu: Mapping[tuple[int, int], int] | None = field(default=None, hash=False)
    max_edges: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < MIN_SIZE[self.family]:
            raise GraphError(
                f"{self.family} needs n >= {MIN_SIZE[self.family]}, got {self.n}"
            )
        if self.family in ("tree", "random") and self.seed is None:
            raise GraphError(f"{self.family} family requires a seed")

    @property
    def unit_multiplicity(self) -> bool:
        return self.mu is None or all(v == 1 for v in self.mu.values())


def double(g: MultiGraph) -> Multidigraph:
    """Replace each edge {x, y} by x→y and y→x (ids 2k and 2k+1).

    A loop {x, x} becomes two distinct loops at x.
    """
    edges = []
    for x, y in g.edges:
        edges.append((x, y))
        edges.append((y, x))
    return Multidigraph(g.n, tuple(edges))


def expand_multiplicity(g: MultiGraph, mu: Mapping[tuple[int, int], int]) -> MultiGraph:
    keys = [_key(x, y) for x, y in g.edges]
    if len(set(keys)) != len(keys):
        raise GraphError("multiplicity expansion needs a graph without parallel edges")
    table = {_key(*k): v for k, v in mu.items()}
    edges = []
    for x, y in g.edges:
        k = _key(x, y)
        if k not in table:
            raise GraphError(f"no multiplicity given for edge {k}")
        if not isinstance(table[k], int) or table[k] < 1:
            raise GraphError(f"multiplicity of {k} must be a positive integer, got {table[k]!r}")
        edges.extend([(x, y)] * table[k])
    return MultiGraph(g.n, tuple(edges))


def prufer_to_tree(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Labeled tree on range(n) encoded by a Prüfer sequence of length n-2."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append(_key(leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return edges


def random_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniformly random labeled tree."""
    return prufer_to_tree([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


def random_connected_multigraph(
    n: int, rng: random.Random, max_edges: int | None = None, loops: bool = True
) -> list[tuple[int, int]]:
    """Random spanning tree plus extra edges (parallels and loops allowed)."""
    if max_edges is None:
        max_edges = 2 * n
    edges = random_tree(n, rng)
    if max_edges < len(edges):
        raise GraphError(f"max_edges={max_edges} cannot hold a spanning tree on {n} vertices")
    for _ in range(rng.randint(0, max_edges - len(edges))):
        x = rng.randrange(n)
        y = rng.randrange(n)
        while not loops and y == x and n > 1:
            y = rng.randrange(n)
        edges.append(_key(x, y))
    return edges


def generate(spec: FamilySpec) -> MultiGraph:
    n = spec.n
    if spec.family == "post":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.family == "asterisk":
        edges = [(0, i) for i in range(1, n)]
    elif spec.family == "circuit":
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    elif spec.family == "complete":
        edges = list(combinations(range(n), 2))
    elif spec.family == "tree":
        edges = random_tree(n, random.Random(spec.seed))
    else:
        edges = random_connected_multigraph(n, random.Random(spec.seed), spec.max_edges)
    g = MultiGraph(n, tuple(edges))
    if spec.mu is not None:
        g = expand_multiplicity(g, spec.mu)
    return g


def is_two_way(d: Multidigraph) -> bool:
    """Symmetric count matrix plus a positive chain between non-isolated vertices."""
    mat = count_matrix(d)
    n = d.n
    if any(mat[i][j] != mat[j][i] for i in range(n) for j in range(i + 1, n)):
        return False
    support = d.non_isolated()
    if not support:
        return True
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        v = stack.pop()
        for w in range(n):
            if mat[v][w] > 0 and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen >= set(support)
