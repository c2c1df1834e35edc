"""Canonical JSON coloring documents: ``{"n": <int>, "red_edges": [[u, v], ...]}``.

Writers emit pairs with u < v in lexicographic order; readers accept any
order, either orientation and duplicates.
"""

from __future__ import annotations

import json

from .errors import Malformed, OutOfRange, SelfLoop
from .graph import CompleteColoring, make_coloring


def coloring_to_doc(c: CompleteColoring) -> dict:
    return {"n": c.n, "red_edges": [list(p) for p in c.red_pairs()]}


def dump_coloring(c: CompleteColoring) -> str:
    return json.dumps(coloring_to_doc(c), separators=(",", ":")) + "\n"


def parse_coloring(data: bytes | str) -> CompleteColoring:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise Malformed("document is not UTF-8", exc.start) from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise Malformed(exc.msg, exc.pos) from exc
    return coloring_from_doc(doc)


def coloring_from_doc(doc) -> CompleteColoring:
    if not isinstance(doc, dict) or "n" not in doc or "red_edges" not in doc:
        raise Malformed('expected an object with keys "n" and "red_edges"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise Malformed('"n" must be a positive integer')
    edges = doc["red_edges"]
    if not isinstance(edges, list):
        raise Malformed('"red_edges" must be a list')
    pairs = []
    for i, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise Malformed(f"red_edges[{i}] must be a pair of integers")
        u, v = e
        if u == v:
            raise SelfLoop(f"red_edges[{i}] = [{u}, {v}] is a loop")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"red_edges[{i}] = [{u}, {v}] has an endpoint outside 0..{n - 1}")
        pairs.append((u, v))
    return make_coloring(n, pairs)
