"""Canonical forms and isomorphism of coloured quivers.

Isomorphism here means vertex relabeling only: colours and arrow directions
are fixed.  The canonical form is a byte string, so mutation-class
enumeration can deduplicate by exact equality.

Serialization layout (unsigned LEB128 varints): m, n, then all n*n*(m+1)
multiplicities in row-major (source, target, colour) order.  The canonical
form is the lexicographically least byte string over all vertex orderings
compatible with the equitable degree partition; since that partition and its
cell order are computed from relabeling-invariant data, the minimum is
itself relabeling-invariant.
"""

from __future__ import annotations

from typing import Sequence

from .quiver import ColouredQuiver

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "canonical_permutation",
    "canonical_relabel",
]


def _varint(value: int, out: bytearray) -> None:
    while value >= 0x80:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)


def serialize(q: ColouredQuiver, order: Sequence[int] | None = None) -> bytes:
    """Byte form of q with vertices read in the given order (default identity).

    order[p] is the original vertex placed at position p.
    """
    if order is None:
        order = range(q.n)
    out = bytearray()
    _varint(q.m, out)
    _varint(q.n, out)
    for a in order:
        for b in order:
            for c in range(q.m + 1):
                _varint(q.mult(a, b, c), out)
    return bytes(out)


def _initial_partition(q: ColouredQuiver) -> list[list[int]]:
    """Group vertices by per-colour out/in total multiplicity vectors."""
    totals = {}
    for v in range(q.n):
        out_vec = [0] * (q.m + 1)
        in_vec = [0] * (q.m + 1)
        for (i, j, c), r in q._mult.items():
            if i == v:
                out_vec[c] += r
            if j == v:
                in_vec[c] += r
        totals[v] = (tuple(out_vec), tuple(in_vec))
    cells: dict[tuple, list[int]] = {}
    for v in range(q.n):
        cells.setdefault(totals[v], []).append(v)
    return [sorted(cells[key]) for key in sorted(cells)]


def _signature(q: ColouredQuiver, v: int, cell: list[int]) -> tuple:
    """Degree profile of v towards a cell, per colour, in and out."""
    out_vec = [0] * (q.m + 1)
    in_vec = [0] * (q.m + 1)
    for w in cell:
        for c in range(q.m + 1):
            out_vec[c] += q.mult(v, w, c)
            in_vec[c] += q.mult(w, v, c)
    return (tuple(out_vec), tuple(in_vec))


def _refine(q: ColouredQuiver, partition: list[list[int]]) -> list[list[int]]:
    """Split cells by degree signatures against every cell until stable.

    Split children are ordered by signature, so the refined cell order
    depends only on the quiver's structure, never on vertex labels.
    """
    cells = [list(c) for c in partition]
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            for idx, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    groups.setdefault(_signature(q, v, splitter), []).append(v)
                if len(groups) > 1:
                    cells[idx : idx + 1] = [sorted(groups[s]) for s in sorted(groups)]
                    changed = True
                    break
            if changed:
                break
    return cells


def _search(q: ColouredQuiver, partition: list[list[int]], best: list) -> None:
    """Backtrack over individualizations; keep the lex-least serialization."""
    target = None
    for idx, cell in enumerate(partition):
        if len(cell) > 1:
            target = idx
            break
    if target is None:
        order = [cell[0] for cell in partition]
        blob = serialize(q, order)
        if best[0] is None or blob < best[0]:
            best[0] = blob
            best[1] = order
        return
    cell = partition[target]
    for v in cell:
        child = partition[:target] + [[v], [w for w in cell if w != v]] + partition[target + 1 :]
        _search(q, _refine(q, child), best)


def _canonical(q: ColouredQuiver) -> tuple[bytes, list[int]]:
    best: list = [None, None]
    _search(q, _refine(q, _initial_partition(q)), best)
    return best[0], best[1]


def canonical_form(q: ColouredQuiver) -> bytes:
    """Relabeling-invariant byte fingerprint; equal iff quivers are isomorphic."""
    return _canonical(q)[0]


def canonical_permutation(q: ColouredQuiver) -> list[int]:
    """Permutation realizing the canonical form; entry i is the image of vertex i."""
    order = _canonical(q)[1]
    image = [0] * q.n
    for pos, v in enumerate(order):
        image[v] = pos
    return image


def canonical_relabel(q: ColouredQuiver) -> ColouredQuiver:
    """q relabeled into canonical vertex order."""
    return q.relabel(canonical_permutation(q))


def are_isomorphic(q1: ColouredQuiver, q2: ColouredQuiver) -> bool:
    """True iff some vertex relabeling carries q1 onto q2 exactly."""
    if q1.m != q2.m or q1.n != q2.n:
        return False
    stats1 = sorted((c, r) for (_, _, c), r in q1._mult.items())
    stats2 = sorted((c, r) for (_, _, c), r in q2._mult.items())
    if stats1 != stats2:
        return False
    return canonical_form(q1) == canonical_form(q2)
