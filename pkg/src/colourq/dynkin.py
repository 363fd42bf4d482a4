"""Recognition of simply-laced Dynkin and extended Dynkin graphs, and the
finiteness verdict for a coloured quiver's mutation class.

A mutation class is finite exactly when the quiver has at most two vertices
or is mutation equivalent to a member whose arrows all have colour 0 or m
and whose colour-0 subquiver has Dynkin or extended Dynkin underlying graph.
The verdict searches for such a member within configurable bounds, so a
third outcome Unknown exists when the bounds are exhausted first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .enumeration import EnumerationConfig, find_bicoloured_acyclic_member
from .errors import DisconnectedGraphError, InvalidQuiverError
from .quiver import ColouredQuiver, DirectedMultigraph, gabriel, validate


class UndirectedMultigraph:
    """Undirected multigraph; edges keyed by vertex pair (i, j) with i < j."""

    __slots__ = ("n", "_mult")

    def __init__(self, n: int, edge_mult: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count n must be a positive integer, got {n!r}")
        items = edge_mult.items() if isinstance(edge_mult, Mapping) else edge_mult
        store: dict[tuple[int, int], int] = {}
        for (i, j), r in items:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"vertex out of range in edge {(i, j)!r} for n={n}")
            if i == j:
                raise ValueError(f"loop at vertex {i} not allowed")
            if not isinstance(r, int) or r < 0:
                raise ValueError(f"multiplicity must be a non-negative integer, got {r!r}")
            if r > 0:
                key = (i, j) if i < j else (j, i)
                store[key] = store.get(key, 0) + r
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_mult", store)

    def __setattr__(self, name, value):
        raise AttributeError("UndirectedMultigraph is immutable")

    def edge_mult(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        return self._mult.get(key, 0)

    def edges(self) -> list[tuple[int, int, int]]:
        """(i, j, multiplicity) with i < j, sorted."""
        return [(i, j, self._mult[(i, j)]) for (i, j) in sorted(self._mult)]

    def degree(self, v: int) -> int:
        return sum(r for (i, j), r in self._mult.items() if v in (i, j))

    def neighbours(self, v: int) -> list[int]:
        out = {j if i == v else i for (i, j) in self._mult if v in (i, j)}
        return sorted(out)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbours(v):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: list[int]) -> "UndirectedMultigraph":
        """Subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
        pos = {v: p for p, v in enumerate(sorted(vertices))}
        keep = {
            (pos[i], pos[j]): r
            for (i, j), r in self._mult.items()
            if i in pos and j in pos
        }
        return UndirectedMultigraph(len(vertices), keep)

    def __repr__(self) -> str:
        edges = ", ".join(f"{i}-{j}x{r}" for i, j, r in self.edges())
        return f"UndirectedMultigraph(n={self.n}, [{edges}])"


@dataclass(frozen=True)
class GraphClass:
    """Recognised shape of a connected multigraph.

    family is one of "A", "D", "E", "Atilde", "Dtilde", "Etilde", "other";
    rank is None exactly for "other".
    """

    family: str
    rank: Optional[int] = None

    @property
    def is_dynkin(self) -> bool:
        return self.family in ("A", "D", "E")

    @property
    def is_extended_dynkin(self) -> bool:
        return self.family in ("Atilde", "Dtilde", "Etilde")

    def label(self) -> str:
        names = {
            "A": "DynkinA", "D": "DynkinD", "E": "DynkinE",
            "Atilde": "ExtendedA", "Dtilde": "ExtendedD", "Etilde": "ExtendedE",
        }
        if self.family == "other":
            return "Other"
        return f"{names[self.family]}({self.rank})"


@dataclass(frozen=True)
class FinitenessVerdict:
    tag: str  # "Finite" | "Infinite" | "Unknown"
    reason: str
    witness: Optional[ColouredQuiver] = None

    def __post_init__(self):
        if self.tag not in ("Finite", "Infinite", "Unknown"):
            raise ValueError(f"bad verdict tag {self.tag!r}")
        if not self.reason:
            raise ValueError("verdict reason must be nonempty")


def underlying_graph(g: DirectedMultigraph) -> UndirectedMultigraph:
    """Forget directions; opposite arrows stack onto one edge."""
    edges: dict[tuple[int, int], int] = {}
    for i, j, r in g.arrows():
        if i == j:
            raise ValueError(f"loop at vertex {i} has no underlying edge")
        key = (i, j) if i < j else (j, i)
        edges[key] = edges.get(key, 0) + r
    return UndirectedMultigraph(g.n, edges)


def _arm_lengths(u: UndirectedMultigraph, centre: int) -> Optional[list[int]]:
    """Lengths of the simple paths hanging off the unique branch vertex.

    Returns None if any arm itself branches (cannot happen for a tree with a
    single vertex of degree >= 3, but guards misuse).
    """
    arms = []
    for first in u.neighbours(centre):
        length = 1
        prev, cur = centre, first
        while True:
            nxt = [w for w in u.neighbours(cur) if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def classify_graph(u: UndirectedMultigraph) -> GraphClass:
    """Exact simply-laced recognition of a connected multigraph."""
    if len(u.components()) != 1:
        raise DisconnectedGraphError("graph is disconnected; classify components separately")
    n = u.n
    edges = u.edges()
    if any(r >= 2 for _, _, r in edges):
        if n == 2 and len(edges) == 1 and edges[0][2] == 2:
            return GraphClass("Atilde", 1)
        return GraphClass("other")
    e = len(edges)
    degrees = [u.degree(v) for v in range(n)]
    if e == n - 1:  # tree
        branch = [v for v in range(n) if degrees[v] >= 3]
        if not branch:
            return GraphClass("A", n)
        if len(branch) == 1:
            centre = branch[0]
            arms = _arm_lengths(u, centre)
            if arms is None:
                return GraphClass("other")
            if degrees[centre] == 3:
                a, b, c = arms
                if a == 1 and b == 1:
                    return GraphClass("D", n)
                if arms == [1, 2, 2]:
                    return GraphClass("E", 6)
                if arms == [1, 2, 3]:
                    return GraphClass("E", 7)
                if arms == [1, 2, 4]:
                    return GraphClass("E", 8)
                if arms == [2, 2, 2]:
                    return GraphClass("Etilde", 6)
                if arms == [1, 3, 3]:
                    return GraphClass("Etilde", 7)
                if arms == [1, 2, 5]:
                    return GraphClass("Etilde", 8)
                return GraphClass("other")
            if degrees[centre] == 4 and arms == [1, 1, 1, 1]:
                return GraphClass("Dtilde", 4)
            return GraphClass("other")
        if len(branch) == 2 and all(degrees[v] == 3 for v in branch):
            # two forks joined by a path: every leaf sits on a fork
            for v in branch:
                leaf_neighbours = [w for w in u.neighbours(v) if degrees[w] == 1]
                if len(leaf_neighbours) != 2:
                    return GraphClass("other")
            return GraphClass("Dtilde", n - 1)
        return GraphClass("other")
    if e == n:  # exactly one cycle
        if all(d == 2 for d in degrees):
            return GraphClass("Atilde", n - 1)
        return GraphClass("other")
    return GraphClass("other")


def predict_finiteness(q: ColouredQuiver, cfg: EnumerationConfig = EnumerationConfig(),
                       *, time_budget: Optional[float] = None) -> FinitenessVerdict:
    """Decide whether the mutation class of q is finite.

    Two-vertex quivers are always Finite.  Otherwise search the class for a
    member with arrows only of colour 0 and m and acyclic colour-0 subquiver;
    its underlying colour-0 components decide the verdict.  If the search
    bounds are exhausted first the verdict is Unknown.
    """
    violations = validate(q)
    if violations:
        detail = "; ".join(str(v) for v in violations[:4])
        raise InvalidQuiverError(f"quiver is invalid: {detail}", violations)
    if q.n <= 2:
        return FinitenessVerdict("Finite", "at most two vertices")
    member = find_bicoloured_acyclic_member(q, cfg, time_budget=time_budget)
    if member is None:
        return FinitenessVerdict(
            "Unknown",
            f"no bicoloured acyclic member found within max_quivers={cfg.max_quivers}",
        )
    u = underlying_graph(gabriel(member))
    classes = [classify_graph(u.induced(comp)) for comp in u.components()]
    labels = " + ".join(c.label() for c in classes)
    if all(c.is_dynkin or c.is_extended_dynkin for c in classes):
        return FinitenessVerdict("Finite", labels, member)
    if len(classes) == 1:
        return FinitenessVerdict("Infinite", "component Other", member)
    return FinitenessVerdict("Infinite", f"component Other: {labels}", member)
