"""
Tests for the degree census of dominating-vertex triangulations.
"""
from fractions import Fraction

import ddt
from django.test import TestCase

from qplanar.certificates import band_thresholds, build_fixture, classify, regime_of
from qplanar.exceptions import GraphPreconditionError
from qplanar.graphs import build_H, icosahedron


@ddt.ddt
class TestClassify(TestCase):
    """
    Tests for band thresholds and classify.
    """

    @ddt.data(
        (120, "n-2", Fraction(21), Fraction(59)),
        (700, "n-1", Fraction(719, 7), Fraction(625)),
    )
    @ddt.unpack
    def test_band_thresholds(self, n, regime, low, high):
        self.assertEqual((low, high), band_thresholds(n, regime))

    def test_unknown_regime(self):
        with self.assertRaises(GraphPreconditionError):
            band_thresholds(100, "n-3")

    @ddt.data(
        (build_H(10), "n-1"),
        (icosahedron(), None),
    )
    @ddt.unpack
    def test_regime_of(self, graph, expected):
        self.assertEqual(expected, regime_of(graph))

    def test_h_has_its_second_hub_above_the_band(self):
        structure = classify(build_H(500), "n-1")

        self.assertEqual(0, structure.k_mid)
        self.assertEqual(1, structure.above_band)
        self.assertEqual(499, structure.delta_second)
        self.assertEqual((0, 1), structure.hub_vertices)

    def test_near_wheel(self):
        structure = classify(build_fixture("near_wheel", 500), "n-2")

        self.assertEqual(498, structure.delta_max)
        self.assertEqual(0, structure.k_mid)
        self.assertEqual(0, structure.above_band)

    def test_mid_band_members(self):
        graph = build_fixture("mid_band", 500, k=3)
        structure = classify(graph, "n-1")

        self.assertEqual(3, structure.k_mid)
        low, high = structure.band
        for v in structure.band_members:
            self.assertTrue(low <= graph.degree(v) <= high)

    def test_regime_mismatch(self):
        with self.assertRaises(GraphPreconditionError):
            classify(build_H(500), "n-2")

    def test_not_a_triangulation(self):
        with self.assertRaises(GraphPreconditionError):
            classify(build_H(20).remove_edge(2, 3), "n-1")

    def test_json(self):
        data = classify(build_H(100), "n-1").to_json_data()

        self.assertEqual(0, data["k_mid"])
        self.assertEqual("25/1", data["band"][1])
