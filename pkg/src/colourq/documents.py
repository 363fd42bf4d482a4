"""JSON documents for quivers, colour-0 quivers, verdicts, and archives.

The quiver document is::

    {"m": 2, "vertices": 3, "arrows": [[0, 1, 0, 1], [1, 0, 2, 1], ...]}

Arrow entries are [source, target, colour, multiplicity].  Unknown keys
(such as a "source" comment) are ignored on input.  Emission is canonical:
keys in the order m, vertices, arrows; arrows sorted by (source, target,
colour); compact separators; single trailing newline.  Parsing an emitted
document always round-trips to an equal quiver.
"""

from __future__ import annotations

import json
import os
from typing import Any

from .canon import canonical_form
from .dynkin import FinitenessVerdict
from .enumeration import EnumerationResult
from .errors import DocumentError, InvalidQuiverError
from .quiver import ColouredQuiver, DirectedMultigraph, validate


def quiver_to_doc(q: ColouredQuiver) -> dict[str, Any]:
    return {
        "m": q.m,
        "vertices": q.n,
        "arrows": [[i, j, c, r] for i, j, c, r in q.arrows()],
    }


def doc_to_quiver(doc: Any, *, permissive: bool = False, where: str = "document") -> ColouredQuiver:
    """Build a quiver from a parsed JSON value, checking the schema.

    Unless permissive, the three structural properties are enforced too.
    """
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected a JSON object, got {type(doc).__name__}")
    for key in ("m", "vertices", "arrows"):
        if key not in doc:
            raise DocumentError(f"{where}: missing required field '{key}'")
    m, n, arrows = doc["m"], doc["vertices"], doc["arrows"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DocumentError(f"{where}.m: expected a non-negative integer, got {m!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"{where}.vertices: expected a positive integer, got {n!r}")
    if not isinstance(arrows, list):
        raise DocumentError(f"{where}.arrows: expected a list")
    mult: dict[tuple[int, int, int], int] = {}
    for idx, entry in enumerate(arrows):
        path = f"{where}.arrows[{idx}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise DocumentError(f"{path}: expected [from, to, colour, mult]")
        i, j, c, r = entry
        for name, value in (("from", i), ("to", j), ("colour", c), ("mult", r)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise DocumentError(f"{path}.{name}: expected an integer, got {value!r}")
        if not (0 <= i < n and 0 <= j < n):
            raise DocumentError(f"{path}: vertex out of range for vertices={n}")
        if not 0 <= c <= m:
            raise DocumentError(f"{path}: colour {c} out of range for m={m}")
        if r < 1:
            raise DocumentError(f"{path}: mult must be >= 1, got {r}")
        if (i, j, c) in mult:
            raise DocumentError(f"{path}: duplicate arrow entry ({i}, {j}, {c})")
        mult[(i, j, c)] = r
    q = ColouredQuiver(m, n, mult)
    if not permissive:
        violations = validate(q)
        if violations:
            detail = "; ".join(str(v) for v in violations[:6])
            raise InvalidQuiverError(f"{where}: {detail}", violations)
    return q


def parse_quiver(text: str | bytes, *, permissive: bool = False) -> ColouredQuiver:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"document is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return doc_to_quiver(doc, permissive=permissive)


def emit_quiver(q: ColouredQuiver) -> str:
    return json.dumps(quiver_to_doc(q), separators=(",", ":")) + "\n"


def gabriel_to_doc(g: DirectedMultigraph) -> dict[str, Any]:
    return {"vertices": g.n, "arrows": [[i, j, r] for i, j, r in g.arrows()]}


def emit_gabriel(g: DirectedMultigraph) -> str:
    return json.dumps(gabriel_to_doc(g), separators=(",", ":")) + "\n"


def verdict_to_doc(v: FinitenessVerdict) -> dict[str, Any]:
    return {
        "tag": v.tag,
        "reason": v.reason,
        "witness": None if v.witness is None else quiver_to_doc(v.witness),
    }


def emit_verdict(v: FinitenessVerdict) -> str:
    return json.dumps(verdict_to_doc(v), separators=(",", ":")) + "\n"


def archive_docs(result: EnumerationResult) -> list[dict[str, Any]]:
    """Representative documents sorted by canonical bytes, each carrying its
    canonical form as a hex string."""
    docs = []
    for key, q in result.sorted_by_canonical():
        doc = quiver_to_doc(q)
        doc["canonical"] = key.hex()
        docs.append(doc)
    return docs


def save_archive(path: str, result: EnumerationResult) -> None:
    """Write representatives to a single JSON file (path ends in .json) or
    one file per quiver inside a directory."""
    docs = archive_docs(result)
    summary = {
        "status": str(result.status),
        "size": result.size,
        "depth_reached": result.depth_reached,
    }
    if path.endswith(".json"):
        payload = dict(summary)
        payload["quivers"] = docs
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, separators=(",", ":"))
            fh.write("\n")
        return
    os.makedirs(path, exist_ok=True)
    names = []
    for idx, doc in enumerate(docs):
        name = f"q{idx:05d}.json"
        names.append(name)
        with open(os.path.join(path, name), "w", encoding="utf-8") as fh:
            json.dump(doc, fh, separators=(",", ":"))
            fh.write("\n")
    index = dict(summary)
    index["files"] = names
    with open(os.path.join(path, "index.json"), "w", encoding="utf-8") as fh:
        json.dump(index, fh, separators=(",", ":"))
        fh.write("\n")


def load_archive(path: str) -> list[ColouredQuiver]:
    """Re-load archived representatives (either layout)."""
    if os.path.isdir(path):
        with open(os.path.join(path, "index.json"), encoding="utf-8") as fh:
            index = json.load(fh)
        quivers = []
        for name in index["files"]:
            with open(os.path.join(path, name), encoding="utf-8") as fh:
                quivers.append(doc_to_quiver(json.load(fh)))
        return quivers
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    return [doc_to_quiver(doc) for doc in payload["quivers"]]


def canonical_hex(q: ColouredQuiver) -> str:
    return canonical_form(q).hex()
