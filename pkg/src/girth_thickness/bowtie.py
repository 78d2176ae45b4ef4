"""The doubling product G ⋈ G and explicit planar embeddings of forest ⋈ forest.

Source vertex w_i maps to u_i = i and v_i = n + i. Every source edge w_i w_j
yields the four edges u_i u_j, v_i v_j, u_i v_j, v_i u_j.

The embedding of tree ⋈ tree is built by re-adding leaves in reverse order of
a lowest-leaf-first elimination. Starting from the 4-cycle of a single edge,
re-attaching leaf w1 to w2 inserts the paths u2-v1-v2 and u2-u1-v2 right
next to the existing path u2-v3-v2, where w3 is a neighbour of w2. The
rotations keep this shape throughout:

* at u_a the neighbours come in consecutive pairs (v_j, u_j), one per tree
  neighbour w_j;
* at v_a they come in consecutive pairs (u_j, v_j).

So at v3 the darts to u2 and v2 are adjacent with u2 first, the corner
u2 -> v3 -> v2 lies on one face, and inserting [v1, u1] just before v3 at u2
and [u1, v1] just after v3 at v2 splits that face in three while keeping the
pair shape at u2 and v2.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph_core import Graph, connected_components, induced_subgraph, is_forest, is_tree


@dataclass(frozen=True)
class BowtieMap:
    source_vertex_count: int

    def u(self, i: int) -> int:
        return i

    def v(self, i: int) -> int:
        return self.source_vertex_count + i

    def source_of(self, x: int) -> tuple[str, int]:
        n = self.source_vertex_count
        return ("u", x) if x < n else ("v", x - n)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order around every vertex."""

    rotations: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotations)

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(x, y), max(x, y)) for x, rot in enumerate(self.rotations) for y in rot})

    def relabel(self, mapping: list[int], n: int) -> RotationSystem:
        out: list[tuple[int, ...]] = [()] * n
        for x, rot in enumerate(self.rotations):
            out[mapping[x]] = tuple(mapping[y] for y in rot)
        return RotationSystem(tuple(out))

    def to_dict(self) -> dict:
        return {"rotations": [list(r) for r in self.rotations]}

    @classmethod
    def from_dict(cls, data: dict) -> RotationSystem:
        return cls(tuple(tuple(int(y) for y in r) for r in data["rotations"]))


def bowtie_product(g: Graph) -> tuple[Graph, BowtieMap]:
    n = g.n
    edges = []
    for i, j in g.edges:
        edges += [(i, j), (n + i, n + j), (i, n + j), (n + i, j)]
    return Graph.from_edges(2 * n, edges), BowtieMap(n)


def leaf_elimination_order(t: Graph) -> list[tuple[int, int]]:
    """Repeatedly strip the lowest-indexed leaf until one edge remains.

    Returns ``(leaf, neighbour)`` pairs in removal order followed by the
    surviving edge as its last entry.
    """
    deg = [t.degree(v) for v in range(t.n)]
    alive = [True] * t.n
    heap = [v for v in range(t.n) if deg[v] == 1]
    heapq.heapify(heap)
    order = []
    remaining = t.n
    while remaining > 2:
        leaf = heapq.heappop(heap)
        if not alive[leaf] or deg[leaf] != 1:
            continue
        nb = next(y for y in t.adjacency[leaf] if alive[y])
        order.append((leaf, nb))
        alive[leaf] = False
        remaining -= 1
        deg[nb] -= 1
        if deg[nb] == 1:
            heapq.heappush(heap, nb)
    a, b = (v for v in range(t.n) if alive[v])
    order.append((a, b))
    return order


def tree_bowtie_embedding(t: Graph) -> RotationSystem:
    if t.n < 2 or not is_tree(t):
        raise ValueError("tree_bowtie_embedding needs a tree with at least 2 vertices")
    n = t.n
    order = leaf_elimination_order(t)
    a, b = order[-1]
    rot: list[list[int]] = [[] for _ in range(2 * n)]
    # base 4-cycle u_a u_b v_a v_b; degree-2 rotations need no care
    rot[a] = [n + b, b]
    rot[b] = [n + a, a]
    rot[n + a] = [b, n + b]
    rot[n + b] = [a, n + a]
    present = [[] for _ in range(n)]  # current tree neighbours
    present[a].append(b)
    present[b].append(a)

    for w1, w2 in reversed(order[:-1]):
        w3 = min(present[w2])
        u1, v1, u2, v2, v3 = w1, n + w1, w2, n + w2, n + w3
        at_u2 = rot[u2]
        k = at_u2.index(v3)
        at_u2[k:k] = [v1, u1]
        at_v2 = rot[v2]
        k = at_v2.index(v3) + 1
        at_v2[k:k] = [u1, v1]
        rot[u1] = [v2, u2]
        rot[v1] = [u2, v2]
        present[w2].append(w1)
        present[w1].append(w2)
    return RotationSystem(tuple(tuple(r) for r in rot))


def forest_bowtie_embedding(f: Graph) -> RotationSystem:
    """Embed forest ⋈ forest as a disjoint union of per-tree embeddings.

    Isolated source vertices become isolated u/v vertices with empty rotations.
    """
    if not is_forest(f):
        raise ValueError("forest_bowtie_embedding needs an acyclic graph")
    n = f.n
    rot: list[tuple[int, ...]] = [()] * (2 * n)
    for comp in connected_components(f):
        if len(comp) < 2:
            continue
        local = tree_bowtie_embedding(induced_subgraph(f, comp))
        # local u_i = i, v_i = len(comp) + i  ->  global u = comp[i], v = n + comp[i]
        mapping = comp + [n + x for x in comp]
        for x, r in enumerate(local.rotations):
            rot[mapping[x]] = tuple(mapping[y] for y in r)
    return RotationSystem(tuple(rot))
