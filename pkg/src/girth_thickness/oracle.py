"""Exhaustive oracles for tiny graphs.

``exact_girth_thickness`` finds the fewest planar classes of girth >= g that
partition the edges, by backtracking over restricted-growth strings.
``brute_force_is_planar`` decides planarity by searching for a K5 or K3,3
minor directly, as a cross-check for the linear-time test.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .bounds import planar_girth_edge_bound
from .graph_core import INFINITY, Edge, Graph
from .verify.planarity import is_planar

MAX_ORACLE_EDGES = 20
MAX_BRUTE_PLANARITY_VERTICES = 12


class _Sentinel(enum.Enum):
    EXCEEDED = "EXCEEDED"

    def __repr__(self) -> str:
        return self.value


EXCEEDED = _Sentinel.EXCEEDED


@dataclass(frozen=True)
class OracleResult:
    count: int | _Sentinel
    witness: tuple[tuple[Edge, ...], ...] | None
    nodes: int


def _check_girth_req(girth_req) -> None:
    if girth_req != INFINITY and (not float(girth_req).is_integer() or girth_req < 3):
        raise ValueError(f"girth requirement must be an integer >= 3 or INFINITY, got {girth_req}")


class _Search:
    def __init__(self, g: Graph, girth_req, k: int) -> None:
        self.g = g
        self.girth_req = girth_req
        self.k = k
        self.edges = g.edges
        self.adj: list[list[set[int]]] = [[set() for _ in range(g.n)] for _ in range(k)]
        self.size = [0] * k
        self.touched = [0] * k
        self.assign = [-1] * len(self.edges)
        self.nodes = 0

    def closes_short_cycle(self, c: int, a: int, b: int) -> bool:
        adj = self.adj[c]
        if self.girth_req == 4:
            return not adj[a].isdisjoint(adj[b])
        if self.girth_req == 3:
            return False
        # a cycle through the new edge has length dist(a, b) + 1 in the class
        limit = INFINITY if self.girth_req == INFINITY else self.girth_req - 2
        dist = {a: 0}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if dist[x] >= limit:
                continue
            for y in adj[x]:
                if y == b:
                    return True
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return False

    def fits(self, c: int, a: int, b: int) -> bool:
        if self.closes_short_cycle(c, a, b):
            return False
        adj = self.adj[c]
        verts = self.touched[c] + (not adj[a]) + (not adj[b])
        return self.size[c] + 1 <= planar_girth_edge_bound(verts, self.girth_req)

    def add(self, c: int, a: int, b: int) -> None:
        adj = self.adj[c]
        self.touched[c] += (not adj[a]) + (not adj[b])
        adj[a].add(b)
        adj[b].add(a)
        self.size[c] += 1

    def remove(self, c: int, a: int, b: int) -> None:
        adj = self.adj[c]
        adj[a].discard(b)
        adj[b].discard(a)
        self.touched[c] -= (not adj[a]) + (not adj[b])
        self.size[c] -= 1

    def classes(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in range(self.k)]
        for e, c in zip(self.edges, self.assign):
            out[c].append(e)
        return out

    def leaf_ok(self) -> bool:
        return all(is_planar(Graph.from_edges(self.g.n, cls)) for cls in self.classes())

    def run(self, i: int = 0, used: int = 0) -> bool:
        self.nodes += 1
        if i == len(self.edges):
            return self.leaf_ok()
        a, b = self.edges[i]
        # restricted growth: edge i may open at most one new class
        for c in range(min(used + 1, self.k)):
            if not self.fits(c, a, b):
                continue
            self.add(c, a, b)
            self.assign[i] = c
            if self.run(i + 1, max(used, c + 1)):
                return True
            self.remove(c, a, b)
            self.assign[i] = -1
        return False


def search_girth_thickness(g: Graph, girth_req=4, max_classes: int | None = None) -> OracleResult:
    """Smallest class count with its first-found witness partition."""
    _check_girth_req(girth_req)
    if g.edge_count > MAX_ORACLE_EDGES:
        raise ValueError(f"oracle handles at most {MAX_ORACLE_EDGES} edges, got {g.edge_count}")
    if g.edge_count == 0:
        return OracleResult(0, (), 0)
    if max_classes is None:
        max_classes = g.edge_count
    nodes = 0
    for k in range(1, max_classes + 1):
        s = _Search(g, girth_req, k)
        found = s.run()
        nodes += s.nodes
        if found:
            witness = tuple(tuple(c) for c in s.classes())
            return OracleResult(k, witness, nodes)
    return OracleResult(EXCEEDED, None, nodes)


def exact_girth_thickness(g: Graph, girth_req=4, max_classes: int | None = None) -> int | _Sentinel:
    return search_girth_thickness(g, girth_req, max_classes).count


# brute-force planarity via Wagner's theorem

def _reduce(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    """Strip vertices of degree <= 2 (smoothing degree 2); planarity is unchanged."""
    adj = {x: set(ys) for x, ys in adj.items()}
    stack = [x for x, ys in adj.items() if len(ys) <= 2]
    while stack:
        x = stack.pop()
        if x not in adj or len(adj[x]) > 2:
            continue
        ys = adj.pop(x)
        for y in ys:
            adj[y].discard(x)
        if len(ys) == 2:
            a, b = ys
            adj[a].add(b)
            adj[b].add(a)
        stack.extend(y for y in ys if len(adj[y]) <= 2)
    return adj


def _has_k33(adj: dict[int, set[int]]) -> bool:
    vs = sorted(adj)
    first = vs[0]
    for side in combinations(vs[1:], 2):
        a = (first, *side)
        b = [v for v in vs if v not in a]
        if all(y in adj[x] for x in a for y in b):
            return True
    return False


def _contains_kuratowski_minor(adj: dict[int, set[int]], memo: dict) -> bool:
    adj = _reduce(adj)
    nv = len(adj)
    ne = sum(len(ys) for ys in adj.values()) // 2
    if nv <= 4:
        return False
    if ne > 3 * nv - 6:
        return True
    if nv == 5:
        # only K5 itself would be non-planar, and it fails the edge count above
        return False
    key = frozenset((x, y) for x, ys in adj.items() for y in ys if x < y)
    if key in memo:
        return memo[key]
    memo[key] = False
    found = nv == 6 and _has_k33(adj)
    if not found:
        for x in sorted(adj):
            sub = {y: zs - {x} for y, zs in adj.items() if y != x}
            if _contains_kuratowski_minor(sub, memo):
                found = True
                break
    if not found:
        for x, y in sorted(key):
            # contract y into x
            sub = {z: set(ws) for z, ws in adj.items() if z != y}
            for w in adj[y]:
                if w == x:
                    continue
                sub[w].discard(y)
                sub[w].add(x)
                sub[x].add(w)
            sub[x].discard(y)
            if _contains_kuratowski_minor(sub, memo):
                found = True
                break
    memo[key] = found
    return found


def brute_force_is_planar(g: Graph) -> bool:
    """Planar iff no K5 or K3,3 minor, found by exhaustive deletion/contraction."""
    if g.n > MAX_BRUTE_PLANARITY_VERTICES:
        raise ValueError(f"brute-force planarity is limited to {MAX_BRUTE_PLANARITY_VERTICES} vertices")
    adj = {x: set(g.adjacency[x]) for x in range(g.n)}
    return not _contains_kuratowski_minor(adj, {})
