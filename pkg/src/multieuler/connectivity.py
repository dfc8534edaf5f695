"""Weak and strong connectivity of multidigraphs.

Strong connectivity is phrased as "every two distinct vertices lie on a common
closed walk"; :func:`common_dicircuit` produces such a walk as a witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Multidigraph
from .exceptions import GraphError


@dataclass(frozen=True)
class SccPartition:
    labels: tuple[int, ...]
    count: int

    def components(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            groups[c].append(v)
        return groups


@dataclass(frozen=True)
class DicircuitWitness:
    """Closed walk through two requested vertices. Edges may repeat."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]


def _components(n: int, adj: list[list[int]], vertices: Iterable[int]) -> int:
    seen = set()
    count = 0
    for s in vertices:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        stack = [s]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def is_weakly_connected(d: Multidigraph, vertices: Iterable[int] | None = None) -> bool:
    """Connectivity of the underlying undirected multigraph.

    With ``vertices`` given, only that vertex subset is judged (edges are
    assumed to stay inside it).
    """
    adj: list[list[int]] = [[] for _ in range(d.n)]
    for a, b in d.edges:
        adj[a].append(b)
        adj[b].append(a)
    vs = range(d.n) if vertices is None else list(vertices)
    return _components(d.n, adj, vs) <= 1


def scc(d: Multidigraph) -> SccPartition:
    """Strongly connected components (iterative Tarjan).

    Component ids are assigned in order of each component's smallest vertex.
    """
    n = d.n
    succ = [[d.edges[k][1] for k in ks] for ks in d.out_edges]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    raw = [-1] * n
    counter = 0
    ncomp = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    raw[w] = ncomp
                    if w == v:
                        break
                ncomp += 1

    # relabel by smallest member
    relabel: dict[int, int] = {}
    for v in range(n):
        if raw[v] not in relabel:
            relabel[raw[v]] = len(relabel)
    return SccPartition(tuple(relabel[raw[v]] for v in range(n)), ncomp)


def is_strongly_connected(d: Multidigraph) -> bool:
    if d.n == 1:
        return True
    return scc(d).count == 1


def _shortest_dipath(d: Multidigraph, src: int, dst: int) -> list[int] | None:
    # BFS over out-edges in id order; returns edge ids
    via: dict[int, int | None] = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for k in d.out_edges[v]:
            w = d.edges[k][1]
            if w not in via:
                via[w] = k
                queue.append(w)
    if dst not in via:
        return None
    path = []
    v = dst
    while via[v] is not None:
        k = via[v]
        path.append(k)
        v = d.edges[k][0]
    path.reverse()
    return path


def common_dicircuit(d: Multidigraph, x: int, y: int) -> DicircuitWitness | None:
    """Closed walk x→…→y→…→x built from two shortest dipaths, or None."""
    if x == y:
        raise GraphError("common_dicircuit needs two distinct vertices")
    for v in (x, y):
        if not 0 <= v < d.n:
            raise GraphError(f"vertex {v} outside 0..{d.n - 1}")
    there = _shortest_dipath(d, x, y)
    if there is None:
        return None
    back = _shortest_dipath(d, y, x)
    if back is None:
        return None
    edges = tuple(there + back)
    vertices = (x,) + tuple(d.edges[k][1] for k in edges)
    return DicircuitWitness(edges, vertices)
