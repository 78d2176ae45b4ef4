from itertools import combinations

import pytest
from conftest import graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from girth_thickness.bounds import (
    multipartite_arboricity,
    nash_williams_exact,
    planar_girth_edge_bound,
    theta4_lower_bound,
)
from girth_thickness.graph_core import INFINITY, Graph, complete_multipartite


def naive_nash_williams(g):
    """Same maximum, by listing vertex subsets with itertools instead of bitmask DP."""
    best = 0
    for k in range(2, g.n + 1):
        for subset in combinations(range(g.n), k):
            s = set(subset)
            e = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, -(-e // (k - 1)))
    return best


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestPlanarGirthEdgeBound:
    def test_girth4_eight_vertices(self):
        assert planar_girth_edge_bound(8, 4) == 12

    def test_girth4_three_vertices(self):
        assert planar_girth_edge_bound(3, 4) == 2

    def test_acyclic(self):
        assert planar_girth_edge_bound(10, INFINITY) == 9

    def test_triangulation_count(self):
        assert planar_girth_edge_bound(6, 3) == 12

    def test_rejects_small_girth(self):
        with pytest.raises(ValueError):
            planar_girth_edge_bound(5, 2)

    @given(st.integers(4, 60), st.integers(3, 20))
    def test_monotone_in_girth(self, n, g):
        assert planar_girth_edge_bound(n, g + 1) <= planar_girth_edge_bound(n, g)
        assert planar_girth_edge_bound(n, INFINITY) <= planar_girth_edge_bound(n, g)

    def test_tight_examples(self):
        # C_4 meets the girth-4 bound, K_4 the girth-3 bound, K_{2,3} the girth-4 bound
        assert planar_girth_edge_bound(4, 4) == 4
        assert planar_girth_edge_bound(4, 3) == 6
        assert planar_girth_edge_bound(5, 4) == 6


class TestTheta4LowerBound:
    def test_k44(self):
        g, _ = complete_multipartite([4, 4])
        assert theta4_lower_bound(g) == 2

    def test_c4(self):
        g, _ = complete_multipartite([2, 2])
        assert theta4_lower_bound(g) == 1

    def test_edgeless(self):
        assert theta4_lower_bound(Graph.empty(5)) == 0

    def test_small_graphs_use_forest_bound(self):
        assert theta4_lower_bound(complete(3)) == 2
        assert theta4_lower_bound(complete(2)) == 1


class TestMultipartiteArboricity:
    def test_triangle(self):
        assert multipartite_arboricity([1, 1, 1]) == 2
        assert naive_nash_williams(complete(3)) == 2

    def test_k5(self):
        assert multipartite_arboricity([1, 1, 1, 1, 1]) == 3

    def test_k33(self):
        assert multipartite_arboricity([3, 3]) == 2

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            multipartite_arboricity([1])


class TestNashWilliamsExact:
    # values frozen from naive_nash_williams
    @pytest.mark.parametrize(
        "graph,expected",
        [
            (complete(5), 3),
            (complete_multipartite([3, 3])[0], 2),
            (complete_multipartite([2, 2, 2])[0], 3),
        ],
    )
    def test_frozen_values(self, graph, expected):
        assert naive_nash_williams(graph) == expected
        assert nash_williams_exact(graph) == expected

    def test_tree(self):
        path = Graph.from_edges(6, [(i, i + 1) for i in range(5)])
        assert nash_williams_exact(path) == 1

    def test_size_cap(self):
        with pytest.raises(ValueError):
            nash_williams_exact(Graph.empty(21))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8))
    def test_matches_naive(self, g):
        assert nash_williams_exact(g) == naive_nash_williams(g)

    @pytest.mark.parametrize(
        "sizes", [[1, 1], [2, 3], [1, 1, 1, 1], [2, 2, 2], [1, 2, 3], [4, 4], [2, 2, 2, 2], [3, 3, 3], [1, 1, 5, 5]]
    )
    def test_matches_multipartite_formula(self, sizes):
        g, _ = complete_multipartite(sizes)
        assert nash_williams_exact(g) == multipartite_arboricity(sizes)
