"""Independent reference implementations used only by the tests.

Nothing here imports the canonicalization or enumeration machinery it is
used to check: isomorphism is decided by trying all vertex permutations,
matrix mutation is the classical skew-symmetric rule, and class sizes come
from breadth-first searches deduplicated by those brute-force checks.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from colourq.quiver import ColouredQuiver, gabriel, mutate


def fz_mutate(B: np.ndarray, k: int) -> np.ndarray:
    """Skew-symmetric matrix mutation at index k.

    Entries are exact Python integers (dtype=object): multiplicities in wild
    classes outgrow int64 within a few dozen steps.
    """
    B = np.asarray(B, dtype=object)
    n = B.shape[0]
    Bp = B.copy()
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                Bp[i, j] = -B[i, j]
            else:
                Bp[i, j] = B[i, j] + (abs(B[i, k]) * B[k, j] + B[i, k] * abs(B[k, j])) // 2
    return Bp


def gabriel_matrix(q: ColouredQuiver) -> np.ndarray:
    """Colour-0 multiplicities as an exact integer matrix."""
    g = gabriel(q)
    out = np.zeros((q.n, q.n), dtype=object)
    for i, j, r in g.arrows():
        out[i, j] = r
    return out


def skew_matrix(q: ColouredQuiver) -> np.ndarray:
    """Skew-symmetric matrix of the colour-0 subquiver (b_ij = #(i->j) - #(j->i))."""
    g = gabriel_matrix(q)
    return g - g.T


def brute_force_isomorphic(q1: ColouredQuiver, q2: ColouredQuiver) -> bool:
    """Try every vertex permutation."""
    if q1.m != q2.m or q1.n != q2.n:
        return False
    for perm in itertools.permutations(range(q1.n)):
        if all(
            q2.mult(perm[i], perm[j], c) == r
            for (i, j, c), r in q1._mult.items()
        ) and all(
            q1.mult(i, j, c) == q2.mult(perm[i], perm[j], c)
            for i in range(q1.n)
            for j in range(q1.n)
            for c in range(q1.m + 1)
        ):
            return True
    return False


def brute_key(q: ColouredQuiver) -> tuple:
    """Minimum over all permutations of the dense multiplicity table."""
    best = None
    for perm in itertools.permutations(range(q.n)):
        table = tuple(
            q.mult(a, b, c)
            for a in perm
            for b in perm
            for c in range(q.m + 1)
        )
        if best is None or table < best:
            best = table
    return (q.m, q.n) + best


def matrix_key(B: np.ndarray) -> tuple:
    """Minimum over simultaneous row/column permutations."""
    n = B.shape[0]
    best = None
    for perm in itertools.permutations(range(n)):
        table = tuple(int(B[a, b]) for a in perm for b in perm)
        if best is None or table < best:
            best = table
    return best


def matrix_class(B0: np.ndarray, cap: int = 100000) -> set[tuple]:
    """All matrices reachable by matrix mutation, up to permutation."""
    seen = {matrix_key(B0): B0}
    queue = deque([B0])
    n = B0.shape[0]
    while queue:
        B = queue.popleft()
        for k in range(n):
            child = fz_mutate(B, k)
            key = matrix_key(child)
            if key not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"matrix class exceeded cap {cap}")
                seen[key] = child
                queue.append(child)
    return set(seen)


def brute_class_size(seed: ColouredQuiver, cap: int = 100000) -> int:
    """Mutation-class size deduplicated by brute-force permutation keys."""
    seen = {brute_key(seed)}
    queue = deque([seed])
    while queue:
        q = queue.popleft()
        for j in range(q.n):
            child = mutate(q, j)
            key = brute_key(child)
            if key not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"class exceeded cap {cap}")
                seen.add(key)
                queue.append(child)
    return len(seen)


def edge_multiset_key(n: int, edges: list[tuple[int, int]]) -> tuple:
    """Undirected-graph key up to relabeling: minimum edge multiset."""
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = sorted(
            (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in edges
        )
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return (n,) + best


def dynkin_extended_table(max_n: int = 10) -> dict[tuple, str]:
    """Every Dynkin / extended Dynkin graph with at most max_n vertices,
    keyed by brute-force graph key, valued by its label."""

    def path(k):
        return k, [(i, i + 1) for i in range(k - 1)]

    def star_arms(arms):
        edges = []
        v = 1
        for arm in arms:
            prev = 0
            for _ in range(arm):
                edges.append((prev, v))
                prev = v
                v += 1
        return v, edges

    table: dict[tuple, str] = {}

    def put(n, edges, label):
        if n <= max_n:
            table[edge_multiset_key(n, edges)] = label

    for k in range(1, max_n + 1):
        put(*path(k), f"DynkinA({k})")
    for k in range(4, max_n + 1):
        put(*star_arms([1, 1, k - 3]), f"DynkinD({k})")
    put(*star_arms([1, 2, 2]), "DynkinE(6)")
    put(*star_arms([1, 2, 3]), "DynkinE(7)")
    put(*star_arms([1, 2, 4]), "DynkinE(8)")
    put(2, [(0, 1), (0, 1)], "ExtendedA(1)")
    for k in range(2, max_n):
        cycle = [(i, i + 1) for i in range(k)] + [(0, k)]
        put(k + 1, cycle, f"ExtendedA({k})")
    put(*star_arms([1, 1, 1, 1]), "ExtendedD(4)")
    for k in range(5, max_n):
        # two forks joined by a path: vertices 0,1 | 2 .. k-2 | k-1, k
        n = k + 1
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
        put(n, edges, f"ExtendedD({k})")
    put(*star_arms([2, 2, 2]), "ExtendedE(6)")
    put(*star_arms([1, 3, 3]), "ExtendedE(7)")
    put(*star_arms([1, 2, 5]), "ExtendedE(8)")
    return table
