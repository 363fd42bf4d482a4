"""Construction of seed quivers from named graph shapes.

Supported families: A (path), D (forked path), E (6/7/8), and their
one-node extensions Atilde (cycle; rank 1 is the doubled edge), Dtilde,
Etilde.  An orientation turns the shape into an acyclic colour-0 quiver.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .quiver import DirectedMultigraph

FAMILIES = ("A", "D", "E", "Atilde", "Dtilde", "Etilde")
ORIENTATIONS = ("linear", "alternating", "spec")


def shape_edges(family: str, rank: int) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and undirected edge list (with repeats for multi-edges)."""
    if family == "A":
        if rank < 1:
            raise ValueError("family A needs rank >= 1")
        return rank, [(i, i + 1) for i in range(rank - 1)]
    if family == "D":
        if rank < 4:
            raise ValueError("family D needs rank >= 4")
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, rank - 1)]
        return rank, edges
    if family == "E":
        if rank not in (6, 7, 8):
            raise ValueError("family E needs rank in {6, 7, 8}")
        # centre 0 with three paths; arm lengths (1, 2, rank - 4)
        arms = [1, 2, rank - 4]
        edges = []
        v = 1
        for arm in arms:
            prev = 0
            for _ in range(arm):
                edges.append((prev, v))
                prev = v
                v += 1
        return v, edges
    if family == "Atilde":
        if rank < 1:
            raise ValueError("family Atilde needs rank >= 1")
        if rank == 1:
            return 2, [(0, 1), (0, 1)]
        n = rank + 1
        return n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if family == "Dtilde":
        if rank < 4:
            raise ValueError("family Dtilde needs rank >= 4")
        if rank == 4:
            return 5, [(0, 4), (1, 4), (2, 4), (3, 4)]
        n = rank + 1
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
        return n, edges
    if family == "Etilde":
        if rank not in (6, 7, 8):
            raise ValueError("family Etilde needs rank in {6, 7, 8}")
        arms = {6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}[rank]
        edges = []
        v = 1
        for arm in arms:
            prev = 0
            for _ in range(arm):
                edges.append((prev, v))
                prev = v
                v += 1
        return v, edges
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _bfs_depths(n: int, edges: list[tuple[int, int]]) -> list[int]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    depth = [-1] * n
    for start in range(n):
        if depth[start] != -1:
            continue
        depth[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if depth[w] == -1:
                    depth[w] = depth[v] + 1
                    queue.append(w)
    return depth


def orient(family: str, rank: int, orientation: str = "linear",
           arrows: Optional[Sequence[tuple[int, int]]] = None) -> DirectedMultigraph:
    """Acyclic orientation of a named shape.

    linear: every edge from the smaller to the larger vertex index.
    alternating: edges run from even to odd breadth-first depth, so vertices
    alternate between sources and sinks along paths; ties fall back to the
    linear rule.
    spec: use the given arrow list, which must orient each shape edge
    exactly once.
    """
    n, edges = shape_edges(family, rank)
    if orientation == "linear":
        directed = [(min(i, j), max(i, j)) for i, j in edges]
    elif orientation == "alternating":
        depth = _bfs_depths(n, edges)
        directed = []
        for i, j in edges:
            if depth[i] % 2 == 0 and depth[j] % 2 == 1:
                directed.append((i, j))
            elif depth[j] % 2 == 0 and depth[i] % 2 == 1:
                directed.append((j, i))
            else:
                directed.append((min(i, j), max(i, j)))
    elif orientation == "spec":
        if arrows is None:
            raise ValueError("orientation 'spec' requires an explicit arrow list")
        want = sorted(tuple(sorted(e)) for e in edges)
        got = sorted(tuple(sorted(a)) for a in arrows)
        if want != got:
            raise ValueError(
                f"arrow list does not orient the {family}{rank} shape: "
                f"expected edges {want}, got {got}"
            )
        directed = [tuple(a) for a in arrows]
    else:
        raise ValueError(f"unknown orientation {orientation!r}; expected one of {ORIENTATIONS}")
    mult: dict[tuple[int, int], int] = {}
    for i, j in directed:
        mult[(i, j)] = mult.get((i, j), 0) + 1
    return DirectedMultigraph(n, mult)
