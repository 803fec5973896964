"""Chamber membership, adjacency graphs, Newton skeletons, graph algebra."""

import random
from fractions import Fraction

import pytest

from cpmax import (
    UnknownTerm,
    VertexSetMismatch,
    adjacency_graph,
    adjacency_test,
    cartesian_product,
    chamber_membership,
    complement_relabel,
    complete_graph,
    degree_sequence,
    gen_fnk,
    graph_equal,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    interior_point,
    is_complete,
    is_subgraph,
    make_graph,
    make_poly,
    newton_edge_test,
    newton_skeleton,
    product,
    relabel_vertices,
)
from cpmax.serialize import dumps, loads

from gen import rand_antichain, rand_homogeneous
from oracles import adjacency_by_sampling

FIG2_TERMS = [{1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 6}, {2, 5}]


def fig2_poly():
    return make_poly(6, FIG2_TERMS)


def zigzag(n):
    return make_poly(n, [{i, i + 1} for i in range(1, n)])


class TestChamberMembership:
    def test_interior(self):
        loc = chamber_membership(gen_fnk(3, 1), [2, 1, 1])
        assert loc.kind == "interior"
        assert loc.terms == (frozenset({1}),)

    def test_wall(self):
        loc = chamber_membership(gen_fnk(3, 1), [2, 2, 1])
        assert loc.kind == "wall"
        assert set(loc.terms) == {frozenset({1}), frozenset({2})}

    def test_indicator_points_are_interior(self):
        rng = random.Random(3)
        for _ in range(50):
            poly = rand_antichain(rng)
            for term in poly.support:
                point = [1 if i in term else 0 for i in range(1, poly.n + 1)]
                loc = chamber_membership(poly, point)
                assert loc == ("interior", (term,))


class TestAdjacency:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_parallel_is_complete(self, n):
        graph = adjacency_graph(gen_fnk(n, 1))
        assert graph_equal(graph, complete_graph(n, gen_fnk(n, 1).support))

    @pytest.mark.parametrize("n,k", [(4, 2), (4, 3), (5, 2), (5, 3)])
    def test_uniform_intersection_law(self, n, k):
        poly = gen_fnk(n, k)
        for i, a in enumerate(poly.support):
            for b in poly.support[i + 1:]:
                assert adjacency_test(poly, a, b) == (len(a & b) == k - 1)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_zigzag_complete(self, n):
        poly = zigzag(n)
        graph = adjacency_graph(poly)
        assert graph_equal(graph, complete_graph(n, poly.support))
        assert is_complete(graph)

    def test_figure_named_pairs(self):
        poly = fig2_poly()
        assert adjacency_test(poly, {1, 4, 6}, {2, 3, 6})
        assert adjacency_test(poly, {1, 4, 6}, {1, 4, 5})
        assert not adjacency_test(poly, {1, 4, 6}, {2, 5})

    def test_figure_graph_golden(self):
        graph = adjacency_graph(fig2_poly())
        # Vertex order: {1,3,6} {1,4,5} {1,4,6} {2,3,6} {2,5}
        assert graph.sorted_edges() == [
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4),
        ]
        assert degree_sequence(graph) == (4, 4, 3, 3, 2)

    def test_unknown_term(self):
        with pytest.raises(UnknownTerm):
            adjacency_test(gen_fnk(3, 1), {1}, {1, 2})

    def test_agrees_with_sampling_oracle(self):
        rng = random.Random(59)
        checked = 0
        while checked < 30:
            poly = rand_antichain(rng, n=rng.randint(2, 4), max_terms=4)
            if len(poly.support) < 2:
                continue
            terms = list(poly.support)
            a, b = rng.sample(terms, 2)
            got = adjacency_test(poly, a, b)
            sampled = adjacency_by_sampling(poly, a, b, random.Random(checked))
            assert got == sampled, (poly.to_text(), sorted(a), sorted(b))
            checked += 1


class TestNewton:
    def test_simplex_support_all_edges(self):
        graph = newton_skeleton(gen_fnk(3, 1))
        assert is_complete(graph)

    def test_pairs_of_three_triangle(self):
        graph = newton_skeleton(gen_fnk(3, 2))
        assert is_complete(graph)
        assert len(graph.edges) == 3

    def test_figure_strictly_larger_than_adjacency(self):
        poly = fig2_poly()
        adj = adjacency_graph(poly)
        newt = newton_skeleton(poly)
        assert is_subgraph(adj, newt)
        assert not graph_equal(adj, newt)
        assert is_complete(newt)  # five affinely independent exponent points
        extra = newt.edges - adj.edges
        assert frozenset({frozenset({1, 3, 6}), frozenset({2, 5})}) in extra
        assert frozenset({frozenset({1, 4, 6}), frozenset({2, 5})}) in extra

    def test_subgraph_law_random(self):
        rng = random.Random(61)
        for _ in range(25):
            poly = rand_antichain(rng, max_terms=5)
            adj = adjacency_graph(poly)
            newt = newton_skeleton(poly)
            assert set(adj.vertices) == set(newt.vertices)
            assert is_subgraph(adj, newt)

    def test_homogeneous_equality_random(self):
        rng = random.Random(67)
        for _ in range(25):
            poly = rand_homogeneous(rng, max_terms=5)
            assert graph_equal(adjacency_graph(poly), newton_skeleton(poly))


class TestDuality:
    def test_homogeneous_dual_same_graph(self):
        rng = random.Random(71)
        for _ in range(20):
            poly = rand_homogeneous(rng, max_terms=5)
            relabeled = complement_relabel(adjacency_graph(poly))
            assert graph_equal(relabeled, adjacency_graph(poly.dual()))

    @pytest.mark.parametrize("n,k", [(4, 1), (4, 2), (5, 2)])
    def test_uniform_duality(self, n, k):
        left = complement_relabel(adjacency_graph(gen_fnk(n, k)))
        right = adjacency_graph(gen_fnk(n, n - k))
        assert graph_equal(left, right)


class TestProductLaw:
    def test_square(self):
        k2 = adjacency_graph(gen_fnk(2, 1))
        square = cartesian_product(k2, k2)
        assert len(square.vertices) == 4
        assert len(square.edges) == 4  # a 4-cycle
        assert degree_sequence(square) == (2, 2, 2, 2)

    def test_cube(self):
        k2 = adjacency_graph(gen_fnk(2, 1))
        cube = cartesian_product(cartesian_product(k2, k2), k2)
        assert len(cube.vertices) == 8
        assert len(cube.edges) == 12

    def test_unit(self):
        g = adjacency_graph(gen_fnk(3, 1))
        unit = make_graph(1, [frozenset({1})], [])
        prod = cartesian_product(g, unit)
        shifted = relabel_vertices(prod, lambda v: frozenset(i for i in v if i <= 3))
        assert graph_equal(shifted, g)

    def test_product_polynomial_matches_graph_product(self):
        rng = random.Random(73)
        for _ in range(12):
            f1 = rand_antichain(rng, n=rng.randint(1, 3), max_terms=3)
            f2 = rand_antichain(rng, n=rng.randint(1, 3), max_terms=3)
            left = adjacency_graph(product(f1, f2))
            right = cartesian_product(adjacency_graph(f1), adjacency_graph(f2))
            assert graph_equal(left, right)


class TestIndependentVariable:
    def test_private_variable_connects_to_all(self):
        rng = random.Random(79)
        seen = 0
        while seen < 15:
            poly = rand_antichain(rng, max_terms=5)
            if len(poly.support) < 2:
                continue
            counts = {}
            for term in poly.support:
                for i in term:
                    counts[i] = counts.get(i, 0) + 1
            private = [
                (term, i)
                for term in poly.support
                for i in term
                if counts[i] == 1
            ]
            if not private:
                continue
            graph = adjacency_graph(poly)
            for term, _ in private:
                assert graph.degree(term) == len(poly.support) - 1
            seen += 1


class TestUniqueCriticalPathSampling:
    def test_interior_perturbations_keep_argmax(self):
        rng = random.Random(83)
        for _ in range(25):
            poly = rand_antichain(rng)
            n = poly.n
            for term in poly.support:
                base = interior_point(poly, term)
                for _ in range(10):
                    # Total perturbation below the 1/2 margin of the base point.
                    delta = [
                        Fraction(rng.randint(0, 9), 40 * n) for _ in range(n)
                    ]
                    point = [b + d for b, d in zip(base, delta)]
                    loc = chamber_membership(poly, point)
                    assert loc == ("interior", (term,))


class TestGraphPredicates:
    def test_vertex_set_mismatch(self):
        g1 = complete_graph(2, [{1}, {2}])
        g2 = complete_graph(2, [{1}, {1, 2}])
        with pytest.raises(VertexSetMismatch):
            graph_equal(g1, g2)
        with pytest.raises(VertexSetMismatch):
            is_subgraph(g1, g2)

    def test_degree_sequence_sorted(self):
        poly = fig2_poly()
        seq = degree_sequence(adjacency_graph(poly))
        assert seq == tuple(sorted(seq, reverse=True))

    def test_json_roundtrip(self):
        graph = adjacency_graph(fig2_poly())
        obj = graph_to_json(graph)
        assert obj["vertices"][0] == [1, 3, 6]
        again = graph_from_json(loads(dumps(obj)), n=6)
        assert graph_equal(graph, again)

    def test_dot_output(self):
        dot = graph_to_dot(adjacency_graph(gen_fnk(2, 1)))
        assert '"1" -- "2";' in dot
