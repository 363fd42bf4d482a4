"""Coloured quivers and their mutation.

A coloured quiver on n vertices with colour bound m is a directed multigraph
whose arrows carry a colour in {0, ..., m}.  The valid objects satisfy three
structural properties:

  (1) no loops;
  (2) for each ordered vertex pair, all arrows share a single colour;
  (3) r arrows i -> j of colour c force r arrows j -> i of colour m - c.

Mutation at a vertex j is the three-step rewrite: compose arrows through j
along colour 0, cancel mixed colours pairwise, then shift colours mod m + 1
on every arrow touching j.  All operations here are pure: quivers are value
objects and are never modified in place.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    CyclicGraphError,
    InvalidQuiverError,
    MutationError,
    VertexRangeError,
)


class Violation(NamedTuple):
    """One failed structural property at a single (source, target, colour)."""

    prop: int
    source: int
    target: int
    colour: int

    def __str__(self) -> str:
        names = {1: "loop", 2: "mixed colours", 3: "colour symmetry"}
        return (
            f"property ({self.prop}) [{names[self.prop]}] violated at "
            f"({self.source}, {self.target}, {self.colour})"
        )


class ColouredQuiver:
    """Immutable coloured quiver: (m, n, multiplicity map).

    Only strictly positive multiplicities are stored.  The constructor checks
    well-formedness (index and colour ranges, integer multiplicities) but not
    the three structural properties; use :func:`validate` for those.
    """

    __slots__ = ("m", "n", "_mult", "_hash")

    def __init__(self, m: int, n: int, mult: Mapping[tuple[int, int, int], int] | Iterable[tuple[tuple[int, int, int], int]] = ()):
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"colour bound m must be a non-negative integer, got {m!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count n must be a positive integer, got {n!r}")
        items = mult.items() if isinstance(mult, Mapping) else mult
        store: dict[tuple[int, int, int], int] = {}
        for (i, j, c), r in items:
            if not (isinstance(i, int) and isinstance(j, int) and isinstance(c, int)):
                raise ValueError(f"arrow key must be integer triple, got {(i, j, c)!r}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"vertex out of range in arrow {(i, j, c)!r} for n={n}")
            if not 0 <= c <= m:
                raise ValueError(f"colour out of range in arrow {(i, j, c)!r} for m={m}")
            if not isinstance(r, int) or r < 0:
                raise ValueError(f"multiplicity must be a non-negative integer, got {r!r}")
            if r > 0:
                store[(i, j, c)] = store.get((i, j, c), 0) + r
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_mult", store)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ColouredQuiver is immutable")

    def mult(self, i: int, j: int, c: int) -> int:
        return self._mult.get((i, j, c), 0)

    def arrows(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (source, target, colour, multiplicity), sorted."""
        for (i, j, c) in sorted(self._mult):
            yield i, j, c, self._mult[(i, j, c)]

    def colours_used(self) -> set[int]:
        return {c for (_, _, c) in self._mult}

    def arrow_count(self) -> int:
        """Total arrow multiplicity."""
        return sum(self._mult.values())

    def relabel(self, image: Sequence[int]) -> "ColouredQuiver":
        """Apply a vertex permutation; image[v] is the new label of v."""
        if sorted(image) != list(range(self.n)):
            raise ValueError(f"not a permutation of 0..{self.n - 1}: {image!r}")
        return ColouredQuiver(
            self.m,
            self.n,
            {(image[i], image[j], c): r for (i, j, c), r in self._mult.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColouredQuiver):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self._mult == other._mult

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash((self.m, self.n, frozenset(self._mult.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self) -> str:
        arrows = ", ".join(f"{i}->{j}({c})x{r}" for i, j, c, r in self.arrows())
        return f"ColouredQuiver(m={self.m}, n={self.n}, [{arrows}])"


class DirectedMultigraph:
    """Directed multigraph with integer edge multiplicities (the colour-0 view)."""

    __slots__ = ("n", "_mult")

    def __init__(self, n: int, mult: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count n must be a positive integer, got {n!r}")
        items = mult.items() if isinstance(mult, Mapping) else mult
        store: dict[tuple[int, int], int] = {}
        for (i, j), r in items:
            if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n):
                raise ValueError(f"vertex out of range in arrow {(i, j)!r} for n={n}")
            if not isinstance(r, int) or r < 0:
                raise ValueError(f"multiplicity must be a non-negative integer, got {r!r}")
            if r > 0:
                store[(i, j)] = store.get((i, j), 0) + r
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_mult", store)

    def __setattr__(self, name, value):
        raise AttributeError("DirectedMultigraph is immutable")

    def mult(self, i: int, j: int) -> int:
        return self._mult.get((i, j), 0)

    def arrows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (source, target, multiplicity), sorted."""
        for (i, j) in sorted(self._mult):
            yield i, j, self._mult[(i, j)]

    def has_loop(self) -> bool:
        return any(i == j for (i, j) in self._mult)

    def is_acyclic(self) -> bool:
        """Kahn's algorithm; a loop counts as a cycle."""
        indeg = [0] * self.n
        out: list[list[int]] = [[] for _ in range(self.n)]
        for (i, j) in self._mult:
            if i == j:
                return False
            out[i].append(j)
            indeg[j] += 1
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen == self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedMultigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._mult.items())))

    def __repr__(self) -> str:
        arrows = ", ".join(f"{i}->{j}x{r}" for i, j, r in self.arrows())
        return f"DirectedMultigraph(n={self.n}, [{arrows}])"


def from_gabriel(g: DirectedMultigraph, m: int) -> ColouredQuiver:
    """Seed quiver of an acyclic colour-0 quiver.

    Every arrow of g becomes a colour-0 arrow, and the reverse arrow of
    colour m is added with the same multiplicity.  Rejects loops and
    directed cycles.
    """
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"colour bound m must be a non-negative integer, got {m!r}")
    if g.has_loop():
        raise CyclicGraphError("colour-0 quiver has a loop")
    if not g.is_acyclic():
        raise CyclicGraphError("colour-0 quiver has a directed cycle")
    mult: dict[tuple[int, int, int], int] = {}
    for i, j, r in g.arrows():
        mult[(i, j, 0)] = mult.get((i, j, 0), 0) + r
        mult[(j, i, m)] = mult.get((j, i, m), 0) + r
    return ColouredQuiver(m, g.n, mult)


def validate(q: ColouredQuiver) -> list[Violation]:
    """Check the three structural properties; empty list means valid."""
    violations: list[Violation] = []
    m = q.m
    entries = sorted(q._mult.items())
    # (1) no loops
    for (i, j, c), r in entries:
        if i == j:
            violations.append(Violation(1, i, j, c))
    # (2) one colour per ordered pair
    by_pair: dict[tuple[int, int], list[int]] = {}
    for (i, j, c), r in entries:
        by_pair.setdefault((i, j), []).append(c)
    for (i, j), colours in sorted(by_pair.items()):
        if len(colours) > 1:
            for c in sorted(colours)[1:]:
                violations.append(Violation(2, i, j, c))
    # (3) colour symmetry
    for (i, j, c), r in entries:
        if q.mult(j, i, m - c) != r:
            violations.append(Violation(3, i, j, c))
    return violations


def gabriel(q: ColouredQuiver) -> DirectedMultigraph:
    """The colour-0 subquiver.  May be disconnected, may contain cycles."""
    return DirectedMultigraph(
        q.n, {(i, j): r for (i, j, c), r in q._mult.items() if c == 0}
    )


def _require_valid(q: ColouredQuiver) -> None:
    violations = validate(q)
    if violations:
        detail = "; ".join(str(v) for v in violations[:4])
        raise InvalidQuiverError(
            f"quiver violates structural properties: {detail}", violations
        )


def mutate(q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Mutation of q at vertex j.

    Step 1 composes every colour-c arrow i -> j with every colour-0 arrow
    j -> k (i != k), adding i -> k of colour c and k -> i of colour m - c,
    all counted from the input quiver (snapshot semantics).  Step 2 cancels
    arrows of distinct colours on each ordered pair, smallest colour pair
    first, until one colour remains.  Step 3 adds one (mod m + 1) to the
    colour of every arrow into j and subtracts one from every arrow out
    of j.  The result is re-validated; failure raises MutationError.
    """
    _require_valid(q)
    if not isinstance(j, int) or not 0 <= j < q.n:
        raise VertexRangeError(f"vertex {j!r} out of range for n={q.n}")
    m = q.m
    work: dict[tuple[int, int, int], int] = dict(q._mult)

    # step 1: all additions computed from the input quiver, applied at once
    into_j = [(i, c, r) for (i, jj, c), r in q._mult.items() if jj == j and i != j]
    out_j0 = [(k, r) for (jj, k, c), r in q._mult.items() if jj == j and c == 0 and k != j]
    for i, c, r1 in into_j:
        for k, r2 in out_j0:
            if i == k:
                continue
            work[(i, k, c)] = work.get((i, k, c), 0) + r1 * r2
            work[(k, i, m - c)] = work.get((k, i, m - c), 0) + r1 * r2

    # step 2: per ordered pair, cancel distinct colours pairwise, least pair first
    by_pair: dict[tuple[int, int], dict[int, int]] = {}
    for (i, k, c), r in work.items():
        if r > 0:
            by_pair.setdefault((i, k), {})[c] = r
    result: dict[tuple[int, int, int], int] = {}
    for (i, k), counts in by_pair.items():
        while True:
            positive = sorted(c for c, r in counts.items() if r > 0)
            if len(positive) <= 1:
                break
            c1, c2 = positive[0], positive[1]
            d = min(counts[c1], counts[c2])
            counts[c1] -= d
            counts[c2] -= d
        positive = [c for c, r in counts.items() if r > 0]
        assert len(positive) <= 1, f"cancellation left mixed colours on {(i, k)}"
        for c in positive:
            result[(i, k, c)] = counts[c]

    # step 3: shift colours on arrows touching j
    shifted: dict[tuple[int, int, int], int] = {}
    for (i, k, c), r in result.items():
        if k == j:
            c = (c + 1) % (m + 1)
        elif i == j:
            c = (c - 1) % (m + 1)
        shifted[(i, k, c)] = shifted.get((i, k, c), 0) + r

    out = ColouredQuiver(m, q.n, shifted)
    violations = validate(out)
    if violations:
        detail = "; ".join(str(v) for v in violations[:4])
        raise MutationError(
            f"mutation at {j} produced an invalid quiver: {detail}", violations
        )
    return out


def mutate_seq(q: ColouredQuiver, js: Iterable[int]) -> ColouredQuiver:
    """Left-to-right fold of mutate; errors report the failing position."""
    current = q
    for pos, j in enumerate(js):
        try:
            current = mutate(current, j)
        except (InvalidQuiverError, VertexRangeError, MutationError) as exc:
            cls = type(exc)
            err = cls(f"at position {pos} (vertex {j}): {exc}")
            if hasattr(exc, "violations"):
                err.violations = exc.violations
            raise err from exc
    return current


def is_bicoloured_acyclic(q: ColouredQuiver) -> bool:
    """True iff every arrow has colour 0 or m and the colour-0 subquiver is acyclic."""
    if any(c not in (0, q.m) for c in q.colours_used()):
        return False
    return gabriel(q).is_acyclic()
