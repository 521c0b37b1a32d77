"""
Tests for the qplanar.planarity module.
"""
import ddt
from django.test import TestCase

from qplanar.exceptions import GraphPreconditionError
from qplanar.graphs import (
    Graph,
    build_H,
    complete,
    complete_bipartite,
    cycle,
    fan,
    icosahedron,
    join,
    octahedron,
    path,
)
from qplanar.planarity import (
    RotationEmbedding,
    check_outerplanar_degree_sum,
    faces,
    gap_profile,
    is_maximal_outer_planar,
    is_maximal_planar,
    is_outer_planar,
    is_planar,
    link_cycle,
)


def polygon_triangulations(n):
    """
    Yield every triangulation of the polygon 0-1-...-(n-1) as an edge list.
    """
    def chords(polygon):
        if len(polygon) <= 3:
            yield []
            return
        first, last = polygon[0], polygon[-1]
        for i in range(1, len(polygon) - 1):
            apex = polygon[i]
            for left in chords(polygon[: i + 1]):
                for right in chords(polygon[i:]):
                    extra = []
                    if i > 1:
                        extra.append((first, apex))
                    if i < len(polygon) - 2:
                        extra.append((apex, last))
                    yield left + right + extra

    boundary = [(i, (i + 1) % n) for i in range(n)]
    for inner in chords(list(range(n))):
        yield boundary + inner


@ddt.ddt
class TestIsPlanar(TestCase):
    """
    Tests for is_planar and the returned embedding.
    """

    def test_k4(self):
        embedding = is_planar(complete(4))

        self.assertIsNotNone(embedding)
        self.assertEqual(4, len(faces(embedding)))
        self.assertTrue(all(len(face) == 3 for face in faces(embedding)))

    @ddt.data(complete(5), complete_bipartite(3, 3))
    def test_non_planar(self, graph):
        self.assertIsNone(is_planar(graph))

    @ddt.data(build_H(9), icosahedron(), octahedron(), cycle(7), fan(6), path(5), complete(4))
    def test_euler_formula(self, graph):
        embedding = is_planar(graph)

        self.assertEqual(2, embedding.euler_characteristic())
        self.assertEqual(graph, embedding.graph())

    def test_rotation_lists_every_neighbor(self):
        graph = icosahedron()
        embedding = is_planar(graph)

        for v in range(graph.n):
            self.assertEqual(set(graph.adj[v]), set(embedding.rotation[v]))

    def test_isolated_vertex(self):
        embedding = is_planar(Graph.from_edges(3, [(0, 1)]))

        self.assertEqual((), embedding.rotation[2])

    def test_embedding_json(self):
        self.assertEqual({"rotation": [[1], [0]]}, RotationEmbedding(rotation=[[1], [0]]).to_json_data())


@ddt.ddt
class TestMaximality(TestCase):
    """
    Tests for the maximal planar and outer-planar predicates.
    """

    @ddt.data(
        (build_H(7), True),
        (cycle(6), False),
        (octahedron(), True),
        (icosahedron(), True),
        (complete(3), True),
        (path(2), False),
    )
    @ddt.unpack
    def test_is_maximal_planar(self, graph, expected):
        self.assertEqual(expected, is_maximal_planar(graph))

    @ddt.data(4, 5, 6, 10, 40)
    def test_h_is_maximal_planar_with_triangular_faces(self, n):
        graph = build_H(n)
        embedding = is_planar(graph)

        self.assertTrue(is_maximal_planar(graph))
        self.assertTrue(all(len(face) == 3 for face in embedding.faces()))

    @ddt.data(
        (path(5), True),
        (complete(4), False),
        (fan(7), True),
        (cycle(8), True),
        (complete_bipartite(2, 3), False),
    )
    @ddt.unpack
    def test_is_outer_planar(self, graph, expected):
        self.assertEqual(expected, is_outer_planar(graph))

    def test_fans_are_maximal_outer_planar(self):
        for n in range(3, 12):
            self.assertTrue(is_maximal_outer_planar(fan(n)))

    def test_maximal_outer_planar_edge_count(self):
        self.assertTrue(is_maximal_outer_planar(path(2)))
        self.assertFalse(is_maximal_outer_planar(cycle(5)))
        self.assertFalse(is_maximal_outer_planar(join(complete(1), cycle(4))))

    def test_open_neighborhood_of_a_hub_is_maximal_outer_planar(self):
        graph = build_H(6)
        opened, _ = graph.induced_subgraph(graph.adj[0])

        self.assertTrue(is_maximal_outer_planar(opened))


@ddt.ddt
class TestLinkCycle(TestCase):
    """
    Tests for link_cycle and gap_profile.
    """

    def test_h6_hub(self):
        self.assertEqual((1, 2, 3, 4, 5), link_cycle(build_H(6), None, 0))

    @ddt.data(0, 1, 2, 3)
    def test_k4(self, u):
        self.assertEqual(tuple(v for v in range(4) if v != u), link_cycle(complete(4), None, u))

    @ddt.data(build_H(12), octahedron(), icosahedron())
    def test_cycle_visits_each_neighbor_once(self, graph):
        embedding = is_planar(graph)
        for u in range(graph.n):
            cycle_order = link_cycle(graph, embedding, u)
            self.assertEqual(sorted(graph.adj[u]), sorted(cycle_order))
            self.assertEqual(min(cycle_order), cycle_order[0])
            self.assertLess(cycle_order[1], cycle_order[-1])
            for i, v in enumerate(cycle_order):
                self.assertTrue(graph.has_edge(v, cycle_order[(i + 1) % len(cycle_order)]))

    def test_octahedron_link_is_a_4_cycle(self):
        self.assertEqual(4, len(link_cycle(octahedron(), None, 0)))

    def test_errors(self):
        with self.assertRaises(GraphPreconditionError):
            link_cycle(build_H(6), None, 9)
        with self.assertRaises(GraphPreconditionError):
            link_cycle(cycle(6), None, 0)

    def test_gap_profile(self):
        graph = build_H(8).remove_edge(1, 4)
        graph = graph.add_edge(3, 5)

        self.assertEqual([1], gap_profile(graph, 0, 1))
        self.assertEqual([], gap_profile(build_H(8), 0, 1))


@ddt.ddt
class TestOuterplanarDegreeSum(TestCase):
    """
    Tests for check_outerplanar_degree_sum.
    """

    def test_fan_apex(self):
        self.assertTrue(check_outerplanar_degree_sum(fan(5), 0))

    @ddt.data(0, 1)
    def test_single_edge_equality(self, u):
        self.assertTrue(check_outerplanar_degree_sum(path(2), u))

    def test_rejects_non_maximal(self):
        with self.assertRaises(GraphPreconditionError):
            check_outerplanar_degree_sum(cycle(5), 0)

    @ddt.data(3, 4, 5, 6, 7, 8)
    def test_every_maximal_outer_planar_graph(self, n):
        count = 0
        for edges in polygon_triangulations(n):
            graph = Graph.from_edges(n, edges)
            self.assertTrue(is_maximal_outer_planar(graph))
            for u in range(n):
                self.assertTrue(check_outerplanar_degree_sum(graph, u))
            count += 1
        self.assertEqual({3: 1, 4: 2, 5: 5, 6: 14, 7: 42, 8: 132}[n], count)
