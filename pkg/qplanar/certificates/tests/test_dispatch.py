"""
Tests for the certificate constructions and certify_upper.
"""
from fractions import Fraction

import ddt
from django.test import TestCase

from qplanar.certificates import (
    MAX_DEGREE_TAG,
    CertificateLemma,
    build_fixture,
    build_vector,
    certify_upper,
    verify_certificate,
)
from qplanar.exceptions import CertificateError, GraphPreconditionError
from qplanar.graphs import build_H, icosahedron
from qplanar.spectral import q_max


@ddt.ddt
class TestBuildVector(TestCase):
    """
    Tests for the construction vectors.
    """

    def test_registry(self):
        tags = {lemma.lemma_tag for lemma in CertificateLemma.all_lemmas()}

        self.assertEqual(
            {"sparse-n-2", "band-n-2", "second-hub-n-2", "sparse-n-1", "band-n-1", "second-hub-n-1"}, tags
        )
        self.assertEqual("<CertificateLemma: band-n-1>", repr(CertificateLemma.get_lemma_by_tag("band-n-1")))

    def test_unknown_tag(self):
        with self.assertRaises(CertificateError):
            CertificateLemma.get_lemma_by_tag("band-n-3")

    def test_sparse_n_minus_2_vector(self):
        graph = build_fixture("near_wheel", 500)
        certificate = build_vector(graph, "sparse-n-2")

        self.assertEqual(Fraction(502), certificate.r)
        self.assertEqual(Fraction(1), certificate.x[0])
        self.assertEqual({Fraction(4, 499)}, set(certificate.x[1:]))

    def test_second_hub_n_minus_1_vector(self):
        graph = build_fixture("two_hub", 500, gap=9)
        certificate = build_vector(graph, "second-hub-n-1")

        self.assertEqual(Fraction(4, 7), certificate.x[1])
        self.assertEqual(Fraction(17, 7 * 498), certificate.x[2])

    def test_band_vector(self):
        graph = build_fixture("mid_band", 500, k=2)
        certificate = build_vector(graph, "band-n-1")

        self.assertEqual(Fraction(1, 3), max(certificate.x[1:]))
        self.assertEqual(Fraction(7, 3 * 497), min(certificate.x))

    @ddt.data(
        ("near_wheel", {}, "sparse-n-2"),
        ("wheel", {}, "sparse-n-1"),
        ("two_hub", {"gap": 9}, "second-hub-n-1"),
        ("two_hub", {"gap": 9, "regime": "n-2"}, "second-hub-n-2"),
        ("mid_band", {"k": 2}, "band-n-1"),
        ("mid_band", {"k": 2, "regime": "n-2"}, "band-n-2"),
    )
    @ddt.unpack
    def test_vector_proves_n_plus_2(self, kind, params, lemma_tag):
        graph = build_fixture(kind, 500, **params)
        verdict = verify_certificate(graph, build_vector(graph, lemma_tag))

        self.assertTrue(verdict.passed)
        self.assertLessEqual(q_max(graph).q, 502 + 1e-8)

    def test_unmet_hypothesis_names_threshold(self):
        with self.assertRaises(CertificateError) as context:
            build_vector(build_H(500), "second-hub-n-1")

        self.assertIn("n - 4", str(context.exception))

    def test_small_order(self):
        with self.assertRaises(CertificateError) as context:
            build_vector(build_fixture("wheel", 100), "second-hub-n-1")

        self.assertIn("n >= 461", str(context.exception))

    def test_wrong_regime(self):
        with self.assertRaises(GraphPreconditionError):
            build_vector(build_H(500), "sparse-n-2")


@ddt.ddt
class TestCertifyUpper(TestCase):
    """
    Tests for certify_upper.
    """

    def test_max_degree_at_most_n_minus_3(self):
        report = certify_upper(icosahedron())

        self.assertTrue(report.certified)
        self.assertEqual(MAX_DEGREE_TAG, report.lemma_tag)
        self.assertIsNone(report.verdict)

    def test_tower(self):
        self.assertEqual(MAX_DEGREE_TAG, certify_upper(build_fixture("tower", 500)).lemma_tag)

    def test_h_is_uncertified(self):
        report = certify_upper(build_H(500))

        self.assertFalse(report.certified)
        self.assertEqual("uncertified", report.status)
        self.assertEqual(["skipped"] * 3, [attempt.outcome for attempt in report.attempts])
        self.assertEqual([], report.gaps)

    def test_near_wheel(self):
        report = certify_upper(build_fixture("near_wheel", 500))

        self.assertEqual("sparse-n-2", report.lemma_tag)
        self.assertEqual(Fraction(502), report.bound)
        self.assertTrue(report.verdict.passed)

    def test_wheel(self):
        self.assertEqual("sparse-n-1", certify_upper(build_fixture("wheel", 500)).lemma_tag)

    @ddt.data(3, 9, 60)
    def test_two_hub(self, gap):
        report = certify_upper(build_fixture("two_hub", 500, gap=gap))

        self.assertEqual("second-hub-n-1", report.lemma_tag)
        self.assertEqual([gap], report.gaps)
        self.assertEqual(["skipped", "skipped", "pass"], [attempt.outcome for attempt in report.attempts])

    def test_two_hub_n_minus_2(self):
        self.assertEqual(
            "second-hub-n-2", certify_upper(build_fixture("two_hub", 500, gap=9, regime="n-2")).lemma_tag
        )

    @ddt.data(("n-1", "band-n-1"), ("n-2", "band-n-2"))
    @ddt.unpack
    def test_mid_band(self, regime, lemma_tag):
        report = certify_upper(build_fixture("mid_band", 500, k=2, regime=regime))

        self.assertEqual(lemma_tag, report.lemma_tag)
        self.assertEqual("certified", report.to_json_data()["status"])

    def test_not_maximal_planar(self):
        with self.assertRaises(GraphPreconditionError):
            certify_upper(build_H(20).remove_edge(2, 3))

    def test_json(self):
        data = certify_upper(build_fixture("near_wheel", 100)).to_json_data()

        self.assertEqual("PASS", data["verdict"]["verdict"])
        self.assertEqual("102/1", data["bound"])
        self.assertEqual("sparse-n-2", data["attempts"][0]["lemma_tag"])
