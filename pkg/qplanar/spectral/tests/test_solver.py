"""
Tests for the qplanar.spectral solver.
"""
import ddt
import numpy as np
from django.test import TestCase
from django.test.utils import override_settings

from qplanar.exceptions import GraphPreconditionError, NonConvergenceError
from qplanar.graphs import Graph, build_H, complete, path, star
from qplanar.spectral import assemble_Q, q_max, quadratic_form, rayleigh_quotient, standard_vector
from qplanar.testing import SeededRandomMixin, random_connected_graph


@ddt.ddt
class TestAssembleQ(TestCase):
    """
    Tests for assemble_Q.
    """

    def test_k2(self):
        np.testing.assert_array_equal([[1, 1], [1, 1]], assemble_Q(complete(2)))

    def test_p3(self):
        matrix = assemble_Q(path(3))

        np.testing.assert_array_equal([1, 2, 1], np.diag(matrix))
        np.testing.assert_array_equal([2, 4, 2], matrix.sum(axis=1))

    def test_empty_graph(self):
        np.testing.assert_array_equal(np.zeros((3, 3)), assemble_Q(Graph.from_edges(3, [])))


@ddt.ddt
class TestQMax(SeededRandomMixin, TestCase):
    """
    Tests for q_max.
    """

    @ddt.data(2, 3, 4, 7, 12)
    def test_complete_graph(self, n):
        self.assertAlmostEqual(2 * n - 2, q_max(complete(n)).q, places=9)

    def test_star_attains_lower_bound(self):
        self.assertAlmostEqual(5, q_max(star(4)).q, places=9)

    def test_h5_against_dense_eigensolver(self):
        result = q_max(build_H(5))

        self.assertGreater(result.q, 7)
        self.assertAlmostEqual(np.linalg.eigvalsh(assemble_Q(build_H(5)))[-1], result.q, places=9)

    def test_residual_certificate(self):
        graph = build_H(30)
        result = q_max(graph, tol=1e-11)
        matrix = assemble_Q(graph)

        self.assertLessEqual(np.max(np.abs(matrix @ result.perron - result.q * result.perron)), 1e-11)
        self.assertAlmostEqual(1.0, float(np.linalg.norm(result.perron)), places=12)
        self.assertTrue(np.all(result.perron > 0))
        self.assertTrue(result.connected)

    def test_deterministic(self):
        first, second = q_max(build_H(17)), q_max(build_H(17))

        self.assertEqual(first.q, second.q)
        self.assertEqual(first.iterations, second.iterations)

    def test_disconnected_graph_is_flagged(self):
        result = q_max(Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)]))

        self.assertFalse(result.connected)
        self.assertAlmostEqual(np.linalg.eigvalsh(assemble_Q(path(3)))[-1], result.q, places=8)

    def test_empty_edge_set(self):
        self.assertEqual(0.0, q_max(Graph.from_edges(3, [])).q)

    def test_no_vertices(self):
        with self.assertRaises(GraphPreconditionError):
            q_max(Graph.from_edges(0, []))

    def test_non_convergence_carries_best_iterate(self):
        with self.assertRaises(NonConvergenceError) as context:
            q_max(path(9), tol=1e-14, max_iter=3)

        self.assertEqual(3, context.exception.iterations)
        self.assertIsNotNone(context.exception.best)
        self.assertEqual(context.exception.residual, context.exception.best.residual)

    @override_settings(QPLANAR_DENSE_LIMIT=5)
    def test_matrix_free_multiply(self):
        graph = build_H(40)

        self.assertAlmostEqual(np.linalg.eigvalsh(assemble_Q(graph))[-1], q_max(graph).q, places=8)

    def test_standard_vector_sums_to_one(self):
        self.assertAlmostEqual(1.0, float(standard_vector(q_max(build_H(9))).sum()), places=12)

    def test_lower_bound_sandwich_on_random_graphs(self):
        for _ in range(200):
            graph = random_connected_graph(self.rng, self.rng.randint(2, 14))
            self.assertGreaterEqual(q_max(graph).q, max(graph.degrees()) + 1 - 1e-8)

    def test_rayleigh_quotient_is_a_lower_bound(self):
        for _ in range(100):
            graph = random_connected_graph(self.rng, self.rng.randint(2, 12))
            y = [self.rng.uniform(0.01, 1.0) for _ in range(graph.n)]
            self.assertLessEqual(rayleigh_quotient(graph, y), q_max(graph).q + 1e-9)
            self.assertAlmostEqual(float(np.dot(y, assemble_Q(graph) @ y)), quadratic_form(graph, y), places=9)

    def test_rayleigh_quotient_rejects_zero_vector(self):
        with self.assertRaises(GraphPreconditionError):
            rayleigh_quotient(path(3), [0, 0, 0])

    def test_edge_monotonicity(self):
        checked = 0
        while checked < 500:
            graph = random_connected_graph(self.rng, self.rng.randint(3, 12))
            missing = graph.non_edges()
            if not missing:
                continue
            u, v = self.rng.choice(missing)
            self.assertGreater(q_max(graph.add_edge(u, v)).q - q_max(graph).q, 1e-9)
            checked += 1

    def test_to_json_data(self):
        data = q_max(complete(3)).to_json_data()

        self.assertEqual(4.0, data["q"])
        self.assertEqual(3, len(data["perron"]))
        self.assertTrue(data["connected"])
