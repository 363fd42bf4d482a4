"""Shared fixture loading and random quiver generators for the tests."""

from __future__ import annotations

import itertools
import json
import os
import random

from colourq import ColouredQuiver, DirectedMultigraph, from_gabriel
from colourq.documents import doc_to_quiver
from colourq.seeds import shape_edges

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def fixture_text(name: str) -> str:
    with open(fixture_path(name), encoding="utf-8") as fh:
        return fh.read()


def load_fixture(name: str) -> ColouredQuiver:
    return doc_to_quiver(json.loads(fixture_text(name)))


def random_valid_quiver(rng: random.Random, n: int | None = None,
                        m: int | None = None, max_mult: int = 3) -> ColouredQuiver:
    """Random quiver satisfying all three structural properties.

    Each unordered vertex pair independently gets no arrows or a single
    colour-c bundle one way with its colour-(m-c) mirror.
    """
    if n is None:
        n = rng.randint(1, 5)
    if m is None:
        m = rng.randint(0, 3)
    mult: dict[tuple[int, int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                continue
            a, b = (i, j) if rng.random() < 0.5 else (j, i)
            c = rng.randint(0, m)
            r = rng.randint(1, max_mult)
            mult[(a, b, c)] = mult.get((a, b, c), 0) + r
            mult[(b, a, m - c)] = mult.get((b, a, m - c), 0) + r
    return ColouredQuiver(m, n, mult)


def random_acyclic_seed(rng: random.Random, m: int, n: int | None = None,
                        edge_prob: float = 0.5) -> ColouredQuiver:
    """Seed quiver of a random connected DAG with single-multiplicity arrows."""
    if n is None:
        n = rng.randint(2, 5)
    while True:
        arrows: dict[tuple[int, int], int] = {}
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < edge_prob:
                    arrows[(i, j)] = 1
        g = DirectedMultigraph(n, arrows)
        reach = _connected(g)
        if reach:
            return from_gabriel(g, m)


def _connected(g: DirectedMultigraph) -> bool:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for i, j, _ in g.arrows():
        adj[i].add(j)
        adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def acyclic_orientations_up_to_iso(family: str, rank: int) -> list[DirectedMultigraph]:
    """All acyclic orientations of a shape, one per isomorphism class.

    Deduplication is by brute-force minimum over vertex permutations, so
    this helper stays independent of the canonical-form machinery.
    """
    n, edges = shape_edges(family, rank)
    reps: dict[tuple, DirectedMultigraph] = {}
    for mask in range(1 << len(edges)):
        arrows: dict[tuple[int, int], int] = {}
        for idx, (i, j) in enumerate(edges):
            a, b = (i, j) if mask & (1 << idx) else (j, i)
            arrows[(a, b)] = arrows.get((a, b), 0) + 1
        g = DirectedMultigraph(n, arrows)
        if not g.is_acyclic():
            continue
        key = min(
            tuple(sorted((perm[i], perm[j], r) for i, j, r in g.arrows()))
            for perm in itertools.permutations(range(n))
        )
        reps.setdefault((n,) + key, g)
    return list(reps.values())
