"""Brute-force oracles over the exhaustive small universe.

Nothing here consults degrees or connectivity: Eulerian trails are found by
plain backtracking, so the checks are independent of :func:`classify`.
"""

from __future__ import annotations

from typing import Iterator

from .core import Multidigraph, from_count_matrix, is_valid_trail
from .eulerian import Verdict, classify, find_euler_circuit, find_euler_path


def all_count_matrices(n: int, max_m: int, min_m: int = 1) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every n×n nonnegative integer matrix with entry sum in [min_m, max_m]."""
    cells = n * n

    def compositions(total: int, slots: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, slots - 1):
                yield (first,) + rest

    for m in range(min_m, max_m + 1):
        for flat in compositions(m, cells):
            yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def universe(max_n: int = 3, max_m: int = 5) -> Iterator[Multidigraph]:
    for n in range(1, max_n + 1):
        for mat in all_count_matrices(n, max_m):
            yield from_count_matrix(mat)


def all_euler_trails(d: Multidigraph) -> list[tuple[int, ...]]:
    """Every edge sequence that chains and uses each edge exactly once."""
    found: list[tuple[int, ...]] = []
    used = [False] * d.m
    seq: list[int] = []

    def extend(v: int):
        if len(seq) == d.m:
            found.append(tuple(seq))
            return
        for k, (a, b) in enumerate(d.edges):
            if a == v and not used[k]:
                used[k] = True
                seq.append(k)
                extend(b)
                seq.pop()
                used[k] = False

    for start in range(d.n):
        extend(start)
    return found


def oracle_verdict(d: Multidigraph) -> tuple[Verdict, set[tuple[int, int]]]:
    """Verdict from brute force, plus the (begin, end) pairs of open trails."""
    closed = False
    ends = set()
    for t in all_euler_trails(d):
        a = d.edges[t[0]][0]
        z = d.edges[t[-1]][1]
        if a == z:
            closed = True
        else:
            ends.add((a, z))
    if closed:
        return Verdict.CIRCUIT, ends
    if ends:
        return Verdict.PATH, ends
    return Verdict.NONE, ends


def check_universe(max_n: int = 3, max_m: int = 5) -> tuple[int, list[str]]:
    """Compare classify and trail extraction with brute force on every graph."""
    failures = []
    checked = 0
    for d in universe(max_n, max_m):
        checked += 1
        got = classify(d)
        want, ends = oracle_verdict(d)
        if got.verdict is not want:
            failures.append(f"{d!r}: classify={got}, oracle={want.value}")
            continue
        if want is Verdict.PATH and ends != {(got.b, got.e)}:
            failures.append(f"{d!r}: {got} but brute-force trails run {sorted(ends)}")
        if want is Verdict.CIRCUIT:
            t = find_euler_circuit(d)
            if not is_valid_trail(d, t.edges, closed=True, eulerian=True):
                failures.append(f"{d!r}: bad circuit {t.edges}")
        if want is Verdict.PATH:
            t = find_euler_path(d)
            vs = t.vertices(d)
            if not is_valid_trail(d, t.edges, eulerian=True) or (vs[0], vs[-1]) != (got.b, got.e):
                failures.append(f"{d!r}: bad path {t.edges}")
    return checked, failures
