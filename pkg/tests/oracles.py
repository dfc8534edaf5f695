"""Slow, obviously-correct reference computations used only by the tests."""

import random
from itertools import product

from multieuler.core import Multidigraph


def trails_from(d: Multidigraph, start: int):
    """Yield every all-edge trail leaving ``start`` (plain backtracking)."""
    used = [False] * d.m
    seq = []

    def go(v):
        if len(seq) == d.m:
            yield tuple(seq)
            return
        for k, (a, b) in enumerate(d.edges):
            if a == v and not used[k]:
                used[k] = True
                seq.append(k)
                yield from go(b)
                seq.pop()
                used[k] = False

    yield from go(start)


def closed_trails_from(d, start):
    return [t for t in trails_from(d, start) if d.edges[t[-1]][1] == start]


def brute_counts(d: Multidigraph):
    """(cyclic, {v: fixed-start count}, all-rotations) by raw enumeration."""
    fixed = {v: len(closed_trails_from(d, v)) for v in range(d.n)}
    linear = sum(fixed.values())
    cyclic = sum(1 for t in closed_trails_from(d, d.edges[0][0]) if t[0] == 0) if d.m else 0
    return cyclic, fixed, linear


def reachability(d: Multidigraph):
    """Reflexive-transitive closure by Floyd-Warshall."""
    n = d.n
    r = [[i == j for j in range(n)] for i in range(n)]
    for a, b in d.edges:
        r[a][b] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return r


def arborescences(d: Multidigraph, root: int, vertices=None):
    """Count in-arborescences by choosing one out-edge per non-root vertex."""
    vs = list(range(d.n)) if vertices is None else list(vertices)
    others = [v for v in vs if v != root]
    choices = [[k for k, (a, b) in enumerate(d.edges) if a == v and b != v and b in vs]
               for v in others]
    total = 0
    for pick in product(*choices):
        parent = {v: d.edges[k][1] for v, k in zip(others, pick)}
        ok = True
        for v in others:
            seen = set()
            while v != root:
                if v in seen:
                    ok = False
                    break
                seen.add(v)
                v = parent[v]
            if not ok:
                break
        total += ok
    return total


def random_circuit_eulerian(rng: random.Random, max_n: int = 5, max_m: int = 10) -> Multidigraph:
    """Union of random closed walks glued at shared vertices, edges shuffled."""
    n = rng.randint(1, max_n)
    target = rng.randint(1, max_m)
    edges = []
    touched = [rng.randrange(n)]
    while len(edges) < target:
        length = rng.randint(1, min(4, max_m - len(edges)))
        start = rng.choice(touched)
        walk = [start] + [rng.randrange(n) for _ in range(length - 1)] + [start]
        edges.extend(zip(walk, walk[1:]))
        touched.extend(walk)
    rng.shuffle(edges)
    return Multidigraph(n, tuple(edges))


def random_multigraph_edges(rng: random.Random, n: int, m: int):
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
