"""Acceptance suite.

Each test implements one acceptance criterion at its stated tolerance and
prints a single PASS/FAIL line (run with -s to see them on success).
Expected class sizes other than the size-7 census are cross-checked live
against the brute-force oracle, not asserted from any external source.
"""

import functools
import itertools
import random
import time

import numpy as np

import acceptance_log

from colourq import (
    EnumerationConfig,
    Status,
    canonical_form,
    enumerate_class,
    from_gabriel,
    mutate,
    predict_finiteness,
    validate,
)
from colourq.documents import emit_quiver
from colourq.quiver import ColouredQuiver, DirectedMultigraph
from helpers import (
    acyclic_orientations_up_to_iso,
    fixture_text,
    load_fixture,
    random_acyclic_seed,
    random_valid_quiver,
)
from oracles import (
    brute_class_size,
    brute_force_isomorphic,
    fz_mutate,
    gabriel_matrix,
    skew_matrix,
)


def criterion(name):
    """Record one PASS/FAIL line per criterion; the conftest summary hook
    prints them after the run, outside pytest's output capture."""

    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                acceptance_log.results.append((name, "FAIL"))
                raise
            acceptance_log.results.append((name, "PASS"))
            return result

        return wrapper

    return decorate


def linear_seed(n, m):
    return from_gabriel(DirectedMultigraph(n, {(i, i + 1): 1 for i in range(n - 1)}), m)


@criterion("worked mutation example reproduced byte-exactly in under 1 ms")
def test_worked_example_reproduction():
    seed = load_fixture("a3_m2_seed.json")
    expect_once = fixture_text("a3_m2_mut0.json")
    expect_twice = fixture_text("a3_m2_mut00.json")

    def reproduce():
        first = mutate(seed, 0)
        second = mutate(first, 0)
        return emit_quiver(first), emit_quiver(second)

    got_once, got_twice = reproduce()
    assert got_once == expect_once
    assert got_twice == expect_twice
    best = min(
        (-time.perf_counter() + (reproduce() and time.perf_counter()) for _ in range(5))
    )
    assert best < 0.001, f"took {best * 1000:.3f} ms"


@criterion("size-7 class census reproduced in under 1 s")
def test_class_census_reproduction():
    start = time.perf_counter()
    result = enumerate_class(linear_seed(3, 2), EnumerationConfig(max_quivers=1000))
    elapsed = time.perf_counter() - start
    assert result.status is Status.COMPLETE
    assert result.size == 7
    fixtures = [load_fixture(f"a3_m2_class_{i}.json") for i in range(7)]
    for fixture in fixtures:
        matches = [rep for rep in result.representatives
                   if brute_force_isomorphic(fixture, rep)]
        assert len(matches) == 1
    assert elapsed < 1.0, f"took {elapsed:.3f} s"


def _walks(m, walk_count=500, max_len=20, rng_seed=8191):
    """Random mutation walks from acyclic seeds (n <= 5); yields
    (visited quivers, per-step vertices) per walk."""
    rng = random.Random(rng_seed + m)
    for _ in range(walk_count):
        q = random_acyclic_seed(rng, m)
        visited = [q]
        steps = []
        for _ in range(rng.randint(1, max_len)):
            j = rng.randrange(q.n)
            q = mutate(q, j)
            steps.append(j)
            visited.append(q)
        yield visited, steps


WALK_CACHE: dict[int, list[list[ColouredQuiver]]] = {}


def _visited(m):
    if m not in WALK_CACHE:
        WALK_CACHE[m] = [visited for visited, _ in _walks(m)]
    return WALK_CACHE[m]


@criterion("colour-0 part of every m=1 mutation matches matrix mutation (500 walks)")
def test_matrix_mutation_agreement():
    rng = random.Random(8191 + 1)
    mismatches = 0
    for _ in range(500):
        q = random_acyclic_seed(rng, 1)
        B = skew_matrix(q)
        for _ in range(rng.randint(1, 20)):
            j = rng.randrange(q.n)
            q = mutate(q, j)
            B = fz_mutate(B, j)
            g = gabriel_matrix(q)
            if not (np.array_equal(g - g.T, B) and np.array_equal(g, np.where(B > 0, B, 0))):
                mismatches += 1
    assert mismatches == 0


@criterion("m+1 mutations at any vertex restore every walk quiver (m in 1..3)")
def test_mutation_periodicity():
    failures = 0
    for m in (1, 2, 3):
        for visited in _visited(m):
            for q in visited:
                for j in range(q.n):
                    p = q
                    for _ in range(m + 1):
                        p = mutate(p, j)
                    if p != q:
                        failures += 1
    assert failures == 0


@criterion("structural properties hold after every mutation in the walk suites")
def test_invariants_preserved_on_walks():
    for m in (1, 2, 3):
        for visited in _visited(m):
            for q in visited:
                assert validate(q) == []


@criterion("finiteness verdicts agree with bounded enumeration at desk scale")
def test_finiteness_cross_check():
    start = time.perf_counter()
    finite_cfg = EnumerationConfig(max_quivers=100000)
    recorded = []
    for family, rank in [("A", 2), ("A", 3), ("A", 4), ("D", 4),
                         ("Atilde", 2), ("Atilde", 3)]:
        for g in acyclic_orientations_up_to_iso(family, rank):
            for m in (1, 2):
                q = from_gabriel(g, m)
                verdict = predict_finiteness(q, finite_cfg)
                assert verdict.tag == "Finite", (family, rank, m, verdict)
                result = enumerate_class(q, finite_cfg)
                assert result.status is Status.COMPLETE
                assert result.size == brute_class_size(q)
                recorded.append((family, rank, m, sorted(g.arrows()), result.size))
    # the one externally exhibited size
    assert any(f == "A" and r == 3 and m == 2 and size == 7
               for f, r, m, _, size in recorded)
    wild = DirectedMultigraph(3, {(0, 1): 3, (1, 2): 3})
    wild_cfg = EnumerationConfig(max_quivers=10000)
    for m in (1, 2):
        q = from_gabriel(wild, m)
        verdict = predict_finiteness(q, wild_cfg)
        assert verdict.tag == "Infinite", (m, verdict)
        result = enumerate_class(q, wild_cfg)
        assert result.status is Status.BOUND_EXCEEDED
    elapsed = time.perf_counter() - start
    print(f"  recorded class sizes ({len(recorded)} seeds):")
    for family, rank, m, arrows, size in recorded:
        print(f"    {family}{rank} m={m} {arrows}: {size}")
    assert elapsed < 300, f"took {elapsed:.0f} s"


@criterion("canonical-form agreement coincides with brute-force isomorphism (1000 quivers)")
def test_canonical_soundness():
    rng = random.Random(40961)
    quivers = []
    while len(quivers) < 1000:
        base = random_valid_quiver(rng, n=rng.randint(1, 5), m=rng.randint(0, 3))
        quivers.append(base)
        for _ in range(2):
            if len(quivers) < 1000:
                image = list(range(base.n))
                rng.shuffle(image)
                quivers.append(base.relabel(image))
    groups: dict[bytes, list[int]] = {}
    for idx, q in enumerate(quivers):
        groups.setdefault(canonical_form(q), []).append(idx)
    mismatches = 0
    # equal canonical forms must be isomorphic: check every within-group pair
    for members in groups.values():
        for a, b in itertools.combinations(members, 2):
            if not brute_force_isomorphic(quivers[a], quivers[b]):
                mismatches += 1
    # distinct canonical forms must not be isomorphic: sample cross pairs
    keys = sorted(groups)
    for first, second in zip(keys, keys[1:]):
        if brute_force_isomorphic(quivers[groups[first][0]], quivers[groups[second][0]]):
            mismatches += 1
    for _ in range(500):
        first, second = rng.sample(keys, 2)
        if brute_force_isomorphic(quivers[groups[first][0]], quivers[groups[second][0]]):
            mismatches += 1
    assert mismatches == 0


@criterion("random two-vertex quivers are Finite with Complete enumerations")
def test_two_vertex_rule():
    rng = random.Random(1297)
    for _ in range(20):
        q = random_valid_quiver(rng, n=2, m=rng.randint(0, 3))
        verdict = predict_finiteness(q)
        assert verdict.tag == "Finite"
        result = enumerate_class(q)
        assert result.status is Status.COMPLETE


@criterion("[secondary] HTTP mutate agrees byte-for-byte with the CLI on all fixtures")
def test_service_cli_agreement():
    import io

    from fastapi.testclient import TestClient

    from colourq.cli import run
    from colourq.documents import doc_to_quiver, quiver_to_doc
    from colourq.service import create_app
    from helpers import fixture_path

    client = TestClient(create_app())
    names = ["a3_m2_seed.json", "a3_m2_mut0.json", "a3_m2_mut00.json"] + [
        f"a3_m2_class_{i}.json" for i in range(7)
    ]
    for name in names:
        q = load_fixture(name)
        for j in range(q.n):
            resp = client.post("/api/mutate",
                               json={"quiver": quiver_to_doc(q), "vertex": j})
            assert resp.status_code == 200
            via_http = emit_quiver(doc_to_quiver(resp.json()["result"]["quiver"]))
            out = io.StringIO()
            assert run(["mutate", fixture_path(name), "--at", str(j)], out=out) == 0
            assert out.getvalue() == via_http
