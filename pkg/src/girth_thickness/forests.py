"""Partition a graph's edges into k forests by matroid-union augmentation.

Edges are inserted one at a time in canonical order. If the new edge cannot go
straight into some forest, a breadth-first search over exchanges looks for a
chain e -> f1 -> f2 -> ... where each edge enters a forest and pushes out an
edge on the cycle it would close there, ending with an edge that fits into a
forest without closing a cycle. BFS yields a shortest chain, which keeps every
forest acyclic after the swaps. If the search dies out, the edges processed so
far already need more than k forests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bounds import ceil_div
from .graph_core import Edge, Graph


@dataclass(frozen=True)
class ForestDecomposition:
    base_graph: Graph
    classes: tuple[tuple[Edge, ...], ...]
    # parent[v] within each class, -1 at component roots (lowest vertex of each tree)
    certificates: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_graph(self, i: int) -> Graph:
        return Graph.from_edges(self.base_graph.n, self.classes[i])

    def to_dict(self) -> dict:
        return {"k": self.k, "classes": [[list(e) for e in cls] for cls in self.classes]}


class _Forest:
    def __init__(self, n: int) -> None:
        self.adj: list[set[int]] = [set() for _ in range(n)]

    def add(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def path(self, s: int, t: int) -> list[Edge] | None:
        """Edges of the tree path from s to t, or None if they lie in different trees."""
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for y in sorted(self.adj[x]):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            return None
        out = []
        x = t
        while parent[x] != -1:
            p = parent[x]
            out.append((p, x) if p < x else (x, p))
            x = p
        out.reverse()
        return out


def _parent_array(n: int, edges: tuple[Edge, ...]) -> tuple[int, ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-2] * n
    for root in range(n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if parent[y] == -2:
                    parent[y] = x
                    queue.append(y)
    return tuple(parent)


def check_parent_array(n: int, edges: tuple[Edge, ...], parent: tuple[int, ...]) -> bool:
    """True if ``parent`` is a rooted spanning forest whose tree edges are exactly ``edges``."""
    if len(parent) != n:
        return False
    tree_edges = set()
    for v, p in enumerate(parent):
        if p == -1:
            continue
        if not 0 <= p < n or p == v:
            return False
        tree_edges.add((p, v) if p < v else (v, p))
    if tree_edges != set(edges) or len(tree_edges) != n - parent.count(-1):
        return False
    # every vertex must reach a root without revisiting
    for v in range(n):
        seen = set()
        x = v
        while parent[x] != -1:
            if x in seen:
                return False
            seen.add(x)
            x = parent[x]
    return True


def decompose_into_forests(g: Graph, k: int) -> ForestDecomposition | None:
    """Split E(g) into exactly k forests, or return None when k < arboricity."""
    if k < 1:
        raise ValueError("k must be at least 1")
    forests = [_Forest(g.n) for _ in range(k)]
    owner: dict[Edge, int] = {}

    for e in g.edges:
        chain = _augmenting_chain(e, forests, owner)
        if chain is None:
            return None
        # chain: [(edge, target forest), ...]; apply from the free end backwards
        for edge, target in reversed(chain):
            src = owner.get(edge)
            if src is not None:
                forests[src].remove(*edge)
            forests[target].add(*edge)
            owner[edge] = target

    classes = [[] for _ in range(k)]
    for edge in g.edges:
        classes[owner[edge]].append(edge)
    classes_t = tuple(tuple(c) for c in classes)
    certs = tuple(_parent_array(g.n, c) for c in classes_t)
    return ForestDecomposition(g, classes_t, certs)


def _augmenting_chain(e: Edge, forests: list[_Forest], owner: dict[Edge, int]):
    # label[f] = (previous edge in chain, forest that f is pushed out of)
    label: dict[Edge, tuple[Edge | None, int]] = {e: (None, -1)}
    queue = deque([e])
    while queue:
        f = queue.popleft()
        cur = owner.get(f)
        for i, forest in enumerate(forests):
            if i == cur:
                continue
            path = forest.path(*f)
            if path is None:
                chain = [(f, i)]
                x = f
                while label[x][0] is not None:
                    prev, via = label[x]
                    chain.append((prev, via))
                    x = prev
                chain.reverse()
                return chain
            for h in path:
                if h not in label:
                    label[h] = (f, i)
                    queue.append(h)
    return None


def arboricity_with_witness(g: Graph) -> tuple[int, ForestDecomposition]:
    """Smallest k admitting a k-forest partition, with the partition itself.

    Starts from ceil(|E| / (|V| - 1)), which no graph can beat. An edgeless
    graph gets k = 0 and no classes.
    """
    if g.edge_count == 0:
        return 0, ForestDecomposition(g, (), ())
    k = ceil_div(g.edge_count, g.n - 1)
    while True:
        dec = decompose_into_forests(g, k)
        if dec is not None:
            return k, dec
        k += 1
