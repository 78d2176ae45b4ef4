import random

import pytest
from conftest import graphs, random_tree, trees
from hypothesis import given, settings

from girth_thickness.bowtie import (
    BowtieMap,
    bowtie_product,
    forest_bowtie_embedding,
    leaf_elimination_order,
    tree_bowtie_embedding,
)
from girth_thickness.decomposer import doubled_to_target, halve_spec
from girth_thickness.graph_core import INFINITY, Graph, complete_multipartite, girth, is_bipartite
from girth_thickness.verify import is_planar, validate_embedding


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


class TestProduct:
    def test_single_edge_is_c4(self):
        d, bmap = bowtie_product(Graph.from_edges(2, [(0, 1)]))
        # u1=0, u2=1, v1=2, v2=3: u1u2, v1v2, u1v2, v1u2
        assert d.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert girth(d) == 4
        assert bmap == BowtieMap(2) and bmap.v(1) == 3 and bmap.source_of(3) == ("v", 1)

    def test_edgeless(self):
        d, _ = bowtie_product(Graph.empty(3))
        assert (d.n, d.edge_count) == (6, 0)

    def test_triangle_gives_k222(self):
        k3, _ = complete_multipartite([1, 1, 1])
        d, _ = bowtie_product(k3)
        assert d.edge_count == 12
        mapping = doubled_to_target(halve_spec([2, 2, 2]))
        relabeled = {tuple(sorted((mapping[u], mapping[v]))) for u, v in d.edges}
        assert relabeled == set(complete_multipartite([2, 2, 2])[0].edges)

    def test_triangle_product_keeps_triangles(self):
        k3, _ = complete_multipartite([1, 1, 1])
        assert girth(bowtie_product(k3)[0]) == 3

    @given(graphs())
    def test_counts_and_degrees(self, g):
        d, bmap = bowtie_product(g)
        assert d.n == 2 * g.n
        assert d.edge_count == 4 * g.edge_count
        for i in range(g.n):
            assert d.degree(bmap.u(i)) == d.degree(bmap.v(i)) == 2 * g.degree(i)

    @given(graphs())
    def test_bipartite_preserved(self, g):
        if is_bipartite(g)[0]:
            assert is_bipartite(bowtie_product(g)[0])[0]

    @given(graphs())
    def test_girth_of_forest_product(self, g):
        if girth(g) == INFINITY and g.edge_count:
            assert girth(bowtie_product(g)[0]) == 4


class TestTreeEmbedding:
    def test_leaf_elimination_order(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert leaf_elimination_order(star) == [(1, 0), (2, 0), (0, 3)]

    def test_k2(self):
        t = Graph.from_edges(2, [(0, 1)])
        d, _ = bowtie_product(t)
        report = validate_embedding(d, tree_bowtie_embedding(t))
        assert report.ok and report.face_count == 2
        assert report.components == [(4, 4, 2)]

    def test_p3(self):
        t = path(3)
        d, _ = bowtie_product(t)
        report = validate_embedding(d, tree_bowtie_embedding(t))
        assert report.ok
        assert (d.n, d.edge_count, report.face_count) == (6, 8, 4)

    def test_star(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        d, _ = bowtie_product(star)
        assert d.edge_count == 2 * (2 * 4 - 2) == 12
        assert validate_embedding(d, tree_bowtie_embedding(star)).ok

    @pytest.mark.parametrize(
        "g", [Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), Graph.from_edges(4, [(0, 1), (2, 3)]), Graph.empty(1)]
    )
    def test_rejects_non_trees(self, g):
        with pytest.raises(ValueError):
            tree_bowtie_embedding(g)

    @settings(max_examples=100, deadline=None)
    @given(trees(max_n=40))
    def test_tree_product_properties(self, t):
        d, _ = bowtie_product(t)
        assert d.edge_count == 2 * (2 * t.n - 2)
        assert is_bipartite(d)[0]
        rot = tree_bowtie_embedding(t)
        assert validate_embedding(d, rot).ok
        assert is_planar(d)

    def test_rotation_pair_shape(self):
        t = random_tree(random.Random(4), 25)
        rot = tree_bowtie_embedding(t).rotations
        n = t.n
        for a in range(n):
            at_u, at_v = rot[a], rot[n + a]
            # at u_a: (v_j, u_j) pairs; at v_a: (u_j, v_j) pairs
            for k in range(0, len(at_u), 2):
                assert at_u[k] == n + at_u[k + 1]
            for k in range(0, len(at_v), 2):
                assert at_v[k + 1] == n + at_v[k]


class TestForestEmbedding:
    def test_two_disjoint_edges(self):
        f = Graph.from_edges(4, [(0, 1), (2, 3)])
        d, _ = bowtie_product(f)
        report = validate_embedding(d, forest_bowtie_embedding(f))
        assert d.edge_count == 8
        assert report.ok and report.components == [(4, 4, 2), (4, 4, 2)]

    def test_single_tree_matches_tree_embedding(self):
        t = random_tree(random.Random(2), 9)
        assert forest_bowtie_embedding(t) == tree_bowtie_embedding(t)

    def test_isolated_vertex(self):
        f = Graph.from_edges(3, [(0, 1)])
        rot = forest_bowtie_embedding(f)
        assert rot.rotations[2] == () and rot.rotations[5] == ()
        assert validate_embedding(bowtie_product(f)[0], rot).ok

    def test_rejects_cycles(self):
        with pytest.raises(ValueError):
            forest_bowtie_embedding(complete_multipartite([2, 2])[0])

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=10))
    def test_any_forest(self, g):
        if girth(g) != INFINITY:
            return
        d, _ = bowtie_product(g)
        assert validate_embedding(d, forest_bowtie_embedding(g)).ok
