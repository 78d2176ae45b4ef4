"""Immutable simple graphs and complete multipartite constructors."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INFINITY = math.inf

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is kept sorted with ``u < v`` in every pair, and ``adjacency``
    holds sorted neighbour tuples. Use :meth:`from_edges` to build one.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            ce = canonical_edge(u, v)
            if ce in seen:
                raise ValueError(f"duplicate edge {ce}")
            seen.add(ce)
        ordered = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, ordered, tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    @property
    def edge_set(self) -> frozenset[Edge]:
        # cached on first access; the dataclass is frozen so bypass __setattr__
        cached = self.__dict__.get("_edge_set")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", cached)
        return cached

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        return cls.from_edges(int(data["n"]), data["edges"])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MultipartiteSpec:
    part_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.part_sizes)
        if not sizes:
            raise ValueError("a multipartite spec needs at least one part")
        if any(s < 1 for s in sizes):
            raise ValueError(f"part sizes must be positive, got {list(sizes)}")
        object.__setattr__(self, "part_sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> MultipartiteSpec:
        """Parse ``"2,2,4"`` style input."""
        try:
            sizes = [int(tok) for tok in text.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"cannot parse part sizes from {text!r}") from None
        return cls(tuple(sizes))

    @property
    def m(self) -> int:
        return len(self.part_sizes)

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes)

    @property
    def edge_count(self) -> int:
        total = self.vertex_count
        # sum_{i<j} s_i s_j = (total^2 - sum s_i^2) / 2
        return (total * total - sum(s * s for s in self.part_sizes)) // 2

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for s in self.part_sizes:
            out.append(acc)
            acc += s
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self.part_sizes))


@dataclass(frozen=True)
class VertexPartition:
    parts: tuple[tuple[int, ...], ...]

    def part_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def check(self, n: int) -> None:
        flat = [v for part in self.parts for v in part]
        if sorted(flat) != list(range(n)):
            raise ValueError("parts must be disjoint and cover every vertex")


def complete_multipartite(spec: MultipartiteSpec | Sequence[int]) -> tuple[Graph, VertexPartition]:
    """Build K_{s1,...,sm} with parts laid out as consecutive index blocks."""
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    parts = []
    for off, size in zip(spec.offsets(), spec.part_sizes):
        parts.append(tuple(range(off, off + size)))
    edges = []
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            edges.extend((u, v) for u in a for v in b)
    return Graph.from_edges(spec.vertex_count, edges), VertexPartition(tuple(parts))


def girth(g: Graph) -> float | int:
    """Length of the shortest cycle, or ``INFINITY`` for a forest.

    BFS from every vertex; a non-tree edge (x, y) seen from root r closes a
    closed walk of length dist[x] + dist[y] + 1 which contains a cycle no
    longer than that, and the minimum over all roots is exact.
    """
    best = INFINITY
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, coloring)`` with a proper 0/1 coloring, else ``(False, None)``."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False, None
    return True, color


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for {g.n} vertices")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(keep), edges)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(connected_components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and len(connected_components(g)) == 1
