"""Immutable graphs, two-colorings of complete graphs, partitions and witnesses.

Adjacency is stored as one Python ``int`` per vertex (bit ``w`` of ``rows[v]``
set iff ``vw`` is an edge).  Python integers are unbounded, so there is no
64-vertex ceiling; the desk-scale instances (N <= 48) fit in a machine word
anyway.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import EmptySet, NotAPartition, OutOfRange, SelfLoop


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _canonical_pair(n: int, u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise SelfLoop(f"pair ({u}, {v}) is a loop")
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRange(f"pair ({u}, {v}) has an endpoint outside 0..{n - 1}")
    return (u, v) if u < v else (v, u)


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            u, v = _canonical_pair(n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        return max(r.bit_count() for r in self.rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph on ``vertices`` relabeled by ascending original label.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        order = sorted(set(vertices))
        for v in order:
            self._check(v)
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            rows.append(to_mask(pos[w] for w in bits(self.rows[v]) if w in pos))
        return Graph(len(order), tuple(rows)), order

    def union(self, other: "Graph") -> "Graph":
        if other.n != self.n:
            raise ValueError("graphs differ in order")
        return Graph(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside 0..{self.n - 1}")


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return g.min_degree()


def max_degree(g: Graph) -> int:
    return g.max_degree()


@dataclass(frozen=True)
class CompleteColoring:
    """Red/blue coloring of every edge of K_n; blue is whatever is not red."""

    n: int
    red_rows: tuple[int, ...]

    @cached_property
    def red(self) -> Graph:
        return Graph(self.n, self.red_rows)

    @cached_property
    def blue(self) -> Graph:
        return self.red.complement()

    def graph(self, color: Color) -> Graph:
        return self.red if color is Color.RED else self.blue

    def color(self, u: int, v: int) -> Color:
        _canonical_pair(self.n, u, v)
        return Color.RED if self.red_rows[u] >> v & 1 else Color.BLUE

    def red_pairs(self) -> list[tuple[int, int]]:
        return self.red.edges()

    def flip(self, u: int, v: int) -> "CompleteColoring":
        u, v = _canonical_pair(self.n, u, v)
        rows = list(self.red_rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return CompleteColoring(self.n, tuple(rows))


def make_coloring(n: int, red_pairs: Iterable[Sequence[int]]) -> CompleteColoring:
    if n < 1:
        raise OutOfRange("a coloring needs at least one vertex")
    return CompleteColoring(n, Graph.from_edges(n, red_pairs).rows)


def color_of(c: CompleteColoring, u: int, v: int) -> Color:
    return c.color(u, v)


def monochromatic_graph(c: CompleteColoring, color: Color) -> Graph:
    return c.graph(color)


def induced(c: CompleteColoring, vertices: Iterable[int]) -> tuple[CompleteColoring, list[int]]:
    """Restrict ``c`` to ``vertices``; returns the coloring and new->old label map."""
    vertices = set(vertices)
    if not vertices:
        raise EmptySet("cannot induce on an empty vertex set")
    sub, order = c.red.induced(vertices)
    return CompleteColoring(sub.n, sub.rows), order


@dataclass(frozen=True)
class Partition:
    """Ordered, labeled vertex partition (``U0..U3`` for the stability result)."""

    classes: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"U{i}" for i in range(len(self.classes))))
        if len(self.labels) != len(self.classes):
            raise NotAPartition("one label per class required")

    @classmethod
    def of(cls, n: int, classes: Iterable[Iterable[int]], labels: Sequence[str] = ()) -> "Partition":
        frozen = tuple(frozenset(c) for c in classes)
        seen: set[int] = set()
        for cls_ in frozen:
            if seen & cls_:
                raise NotAPartition(f"classes overlap in {sorted(seen & cls_)}")
            seen |= cls_
        if seen != set(range(n)):
            missing = sorted(set(range(n)) - seen)
            extra = sorted(seen - set(range(n)))
            raise NotAPartition(f"classes do not cover 0..{n - 1} (missing {missing}, extra {extra})")
        return cls(frozen, tuple(labels))

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.classes[i]

    def to_json(self) -> dict[str, list[int]]:
        return {label: sorted(cls_) for label, cls_ in zip(self.labels, self.classes)}


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def to_json(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def validate(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))

    def to_json(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class WheelWitness:
    hub: int
    rim: CycleWitness

    def validate(self, g: Graph) -> bool:
        if self.hub in self.rim.vertices or not 0 <= self.hub < g.n:
            return False
        return self.rim.validate(g) and all(g.has_edge(self.hub, v) for v in self.rim.vertices)

    def to_json(self) -> dict:
        return {"hub": self.hub, "rim": self.rim.to_json()}


@dataclass(frozen=True)
class Monochromatic:
    """A witness that lives in one color class of a coloring."""

    color: Color
    witness: CycleWitness | WheelWitness

    def validate(self, c: CompleteColoring) -> bool:
        return self.witness.validate(c.graph(self.color))

    def to_json(self) -> dict:
        kind = "wheel" if isinstance(self.witness, WheelWitness) else "cycle"
        return {"color": self.color.value, "kind": kind, "witness": self.witness.to_json()}


@dataclass(frozen=True)
class Bipartition:
    parts: tuple[frozenset[int], frozenset[int]]

    def validate(self, g: Graph) -> bool:
        a, b = self.parts
        if a & b or (a | b) != frozenset(range(g.n)):
            return False
        return not any(g.has_edge(u, v) for part in (a, b) for u in part for v in part)


@dataclass(frozen=True)
class Separator:
    """Vertex set whose removal disconnects the graph (empty if already disconnected)."""

    vertices: frozenset[int] = field(default_factory=frozenset)
