"""
Tests for the exact certificate check.
"""
from fractions import Fraction

import ddt
from django.test import TestCase

from qplanar.certificates import Certificate, verify_certificate
from qplanar.certificates.verify import multiply_Q
from qplanar.exceptions import CertificateError, GraphPreconditionError
from qplanar.graphs import Graph, build_H, complete, path
from qplanar.spectral import q_max
from qplanar.testing import SeededRandomMixin, random_connected_graph


@ddt.ddt
class TestVerifyCertificate(SeededRandomMixin, TestCase):
    """
    Tests for verify_certificate.
    """

    def test_all_ones_with_twice_max_degree(self):
        for _ in range(50):
            graph = random_connected_graph(self.rng, self.rng.randint(2, 20))
            certificate = Certificate(lemma_tag="ones", x=[1] * graph.n, r=2 * max(graph.degrees()))

            self.assertTrue(verify_certificate(graph, certificate).passed)

    def test_k4_equality(self):
        verdict = verify_certificate(complete(4), Certificate(lemma_tag="ones", x=[1] * 4, r=6))

        self.assertTrue(verdict.passed)
        self.assertEqual(0, verdict.worst_slack)
        self.assertEqual("PASS", verdict.label)

    def test_rationalized_perron_vector_below_q_fails(self):
        graph = build_H(20)
        x = [Fraction(value).limit_denominator(10 ** 12) for value in q_max(graph).perron]

        verdict = verify_certificate(graph, Certificate(lemma_tag="perron", x=x, r=Fraction("21.9")))

        self.assertFalse(verdict.passed)
        self.assertLess(verdict.worst_slack, 0)

    @ddt.data((36, True), (35, False))
    @ddt.unpack
    def test_polynomial(self, r, expected):
        certificate = Certificate(lemma_tag="square", x=[1] * 4, r=r, poly=[0, 0, 1])

        self.assertEqual(expected, verify_certificate(complete(4), certificate).passed)

    def test_polynomial_with_constant_term(self):
        # (Q^2 - 2Q + 3) 1 on K4 is 36 - 12 + 3 = 27 in every row.
        certificate = Certificate(lemma_tag="poly", x=[1] * 4, r=27, poly=[3, -2, 1])

        self.assertEqual(0, verify_certificate(complete(4), certificate).worst_slack)

    def test_dimension_mismatch(self):
        with self.assertRaises(CertificateError):
            verify_certificate(path(3), Certificate(lemma_tag="short", x=[1, 1], r=4))

    def test_disconnected_graph_is_an_error(self):
        with self.assertRaises(GraphPreconditionError):
            verify_certificate(Graph.from_edges(4, [(0, 1), (2, 3)]), Certificate(lemma_tag="ones", x=[1] * 4, r=2))

    @ddt.data(
        {"x": [1, -1], "r": 1},
        {"x": [0, 0], "r": 1},
        {"x": [1, 1], "r": 1, "poly": [0, 0, 0, 0, 0, 1]},
        {"x": [1, 1], "r": 1, "poly": []},
    )
    def test_invalid_certificates(self, fields):
        with self.assertRaises(CertificateError):
            Certificate(lemma_tag="bad", **fields)

    def test_soundness(self):
        violations = 0
        for _ in range(1000):
            graph = random_connected_graph(self.rng, self.rng.randint(2, 30), extra_edges=self.rng.randint(0, 40))
            x = [Fraction(self.rng.randint(1, 1000), self.rng.randint(1, 1000)) for _ in range(graph.n)]
            ratio = max(y / xi for y, xi in zip(multiply_Q(graph, x), x))
            r = ratio * Fraction(self.rng.randint(900, 1100), 1000)
            verdict = verify_certificate(graph, Certificate(lemma_tag="random", x=x, r=r))
            if verdict.passed and q_max(graph).q > r + Fraction(1, 10 ** 8):
                violations += 1
        self.assertEqual(0, violations)

    def test_completeness_at_the_perron_vector(self):
        for _ in range(30):
            graph = random_connected_graph(self.rng, self.rng.randint(2, 25))
            result = q_max(graph, tol=1e-12)
            x = [Fraction(value) for value in result.perron]
            r = max(y / xi for y, xi in zip(multiply_Q(graph, x), x))

            self.assertTrue(verify_certificate(graph, Certificate(lemma_tag="perron", x=x, r=r)).passed)
            self.assertLess(abs(float(r) - result.q), 1e-6)

    def test_json_round_trip(self):
        certificate = Certificate(lemma_tag="t", x=[1, Fraction(4, 7)], r=Fraction(9, 2))
        data = certificate.to_json_data()

        self.assertEqual(["1/1", "4/7"], data["x"])
        self.assertEqual("9/2", data["r"])
        self.assertEqual(certificate, Certificate.from_json_data(data))

    def test_verdict_json(self):
        data = verify_certificate(path(2), Certificate(lemma_tag="ones", x=[1, 1], r=3)).to_json_data()

        self.assertEqual("PASS", data["verdict"])
        self.assertEqual("1/1", data["worst_slack"])
