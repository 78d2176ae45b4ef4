"""Counting bounds for girth-thickness and arboricity. Integer arithmetic only."""

from __future__ import annotations

from typing import Sequence

from .graph_core import INFINITY, Graph, MultipartiteSpec

NASH_WILLIAMS_MAX_VERTICES = 20


def ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def planar_girth_edge_bound(num_vertices: int, g: float | int) -> int:
    """Maximum edge count of a planar graph on ``num_vertices`` vertices with girth >= g.

    Acyclic graphs (``g`` infinite, or too few vertices to host a cycle of
    length ``g``) have at most n - 1 edges; otherwise the face-counting bound
    floor(g (n - 2) / (g - 2)) applies.
    """
    if num_vertices < 1:
        raise ValueError("num_vertices must be at least 1")
    if g != INFINITY and (not float(g).is_integer() or g < 3):
        raise ValueError(f"girth requirement must be an integer >= 3 or INFINITY, got {g}")
    n = num_vertices
    if g == INFINITY or n < g:
        return n - 1
    g = int(g)
    return (g * (n - 2)) // (g - 2)


def theta4_lower_bound(graph: Graph) -> int:
    n, e = graph.n, graph.edge_count
    if e == 0:
        return 0
    if n >= 4:
        return ceil_div(e, 2 * (n - 2))
    return ceil_div(e, n - 1)


def arboricity_formula(n: int, e: int) -> int:
    if n < 2:
        raise ValueError("the arboricity formula needs at least 2 vertices")
    return ceil_div(e, n - 1)


def multipartite_arboricity(spec: MultipartiteSpec | Sequence[int]) -> int:
    """ceil(e / (n - 1)) for K_{n1,...,nm}."""
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    return arboricity_formula(spec.vertex_count, spec.edge_count)


def nash_williams_exact(graph: Graph) -> int:
    """Exhaustive max of ceil(|E(H)| / (|V(H)| - 1)) over induced subgraphs H.

    Visits all 2^n vertex subsets, so only meant as an oracle on small graphs.
    """
    n = graph.n
    if n > NASH_WILLIAMS_MAX_VERTICES:
        raise ValueError(
            f"nash_williams_exact is an oracle for at most {NASH_WILLIAMS_MAX_VERTICES} vertices, got {n}"
        )
    adj = [0] * n
    for u, v in graph.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    size = 1 << n
    # edge count of the subgraph induced by each mask, built from mask minus its lowest vertex
    edges_in = [0] * size
    best = 0
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        e = edges_in[rest] + (adj[v] & rest).bit_count()
        edges_in[mask] = e
        k = mask.bit_count()
        if k >= 2 and e:
            best = max(best, ceil_div(e, k - 1))
    return best

