"""Breadth-first enumeration of mutation classes up to isomorphism.

The BFS mutates every representative at every vertex, deduplicating by
canonical form.  A Complete result certifies closure: every single mutation
of every representative lands back in the class.  BoundExceeded means the
cap (distinct quivers, depth, or time) was hit first; it never claims the
class is infinite.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .canon import canonical_form
from .errors import InvalidQuiverError
from .quiver import ColouredQuiver, is_bicoloured_acyclic, mutate, validate

DEFAULT_MAX_QUIVERS = 100000


class Status(Enum):
    COMPLETE = "Complete"
    BOUND_EXCEEDED = "BoundExceeded"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EnumerationConfig:
    """Caps for the breadth-first search."""

    max_quivers: int = DEFAULT_MAX_QUIVERS
    max_depth: Optional[int] = None

    def __post_init__(self):
        if self.max_quivers < 1:
            raise ValueError("max_quivers must be at least 1")
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError("max_depth must be at least 1 when given")


@dataclass
class EnumerationResult:
    status: Status
    size: int
    representatives: list[ColouredQuiver]
    depth_reached: int
    canonical_forms: list[bytes] = field(default_factory=list)

    def sorted_by_canonical(self) -> list[tuple[bytes, ColouredQuiver]]:
        """(canonical bytes, representative) pairs in canonical-byte order."""
        return sorted(zip(self.canonical_forms, self.representatives))


class _Exploration:
    """One BFS run; shared by full enumeration and early-exit searches."""

    def __init__(self, seed: ColouredQuiver, cfg: EnumerationConfig,
                 time_budget: Optional[float] = None):
        violations = validate(seed)
        if violations:
            detail = "; ".join(str(v) for v in violations[:4])
            raise InvalidQuiverError(f"seed quiver is invalid: {detail}", violations)
        self.cfg = cfg
        self.reps: list[ColouredQuiver] = []
        self.keys: list[bytes] = []
        self.depths: list[int] = []
        self.index: dict[bytes, int] = {}
        self.status = Status.COMPLETE
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self._add(seed, 0)

    def _add(self, q: ColouredQuiver, depth: int) -> bool:
        key = canonical_form(q)
        if key in self.index:
            return False
        if len(self.reps) >= self.cfg.max_quivers:
            self.status = Status.BOUND_EXCEEDED
            return False
        self.index[key] = len(self.reps)
        self.reps.append(q)
        self.keys.append(key)
        self.depths.append(depth)
        return True

    def run(self, stop: Optional[Callable[[ColouredQuiver], bool]] = None
            ) -> Optional[ColouredQuiver]:
        """Run the BFS; with a stop predicate, return the first matching
        representative (in discovery order) and halt there."""
        if stop is not None and stop(self.reps[0]):
            return self.reps[0]
        queue = deque([0])
        while queue:
            if self.status is Status.BOUND_EXCEEDED:
                return None
            if self.deadline is not None and time.monotonic() > self.deadline:
                self.status = Status.BOUND_EXCEEDED
                return None
            idx = queue.popleft()
            depth = self.depths[idx]
            if self.cfg.max_depth is not None and depth >= self.cfg.max_depth:
                # unexpanded frontier: closure cannot be certified
                self.status = Status.BOUND_EXCEEDED
                return None
            q = self.reps[idx]
            for j in range(q.n):
                child = mutate(q, j)
                before = len(self.reps)
                if self._add(child, depth + 1):
                    queue.append(before)
                    if stop is not None and stop(child):
                        return child
                elif self.status is Status.BOUND_EXCEEDED:
                    return None
        return None

    def result(self) -> EnumerationResult:
        return EnumerationResult(
            status=self.status,
            size=len(self.reps),
            representatives=list(self.reps),
            depth_reached=max(self.depths, default=0),
            canonical_forms=list(self.keys),
        )


def enumerate_class(seed: ColouredQuiver, cfg: EnumerationConfig = EnumerationConfig(),
                    *, time_budget: Optional[float] = None) -> EnumerationResult:
    """Enumerate the mutation class of seed up to isomorphism, within caps."""
    ex = _Exploration(seed, cfg, time_budget)
    ex.run()
    return ex.result()


def find_bicoloured_acyclic_member(
    seed: ColouredQuiver, cfg: EnumerationConfig = EnumerationConfig(),
    *, time_budget: Optional[float] = None,
) -> Optional[ColouredQuiver]:
    """First class member (BFS discovery order) whose arrows all have colour
    0 or m and whose colour-0 subquiver is acyclic; None if none found
    within the caps."""
    ex = _Exploration(seed, cfg, time_budget)
    return ex.run(stop=is_bicoloured_acyclic)
