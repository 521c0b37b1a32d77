"""
Tests for the qplanar management command.
"""
import io
import json
import os
import re
import tempfile
from unittest.mock import patch

import ddt
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from qplanar.certificates import Attempt, CertificationReport
from qplanar.enumeration import Census, SearchResult
from qplanar.graphs import icosahedron, write_edge_list
from qplanar.reports import read_avro

VERIFY_H_LINE = re.compile(r"^(\d+) (\S+) q>n\+2:true identities:pass$")


def run_command(*argv):
    out = io.StringIO()
    call_command("qplanar", *argv, stdout=out)
    return out.getvalue()


@ddt.ddt
class TestQPlanarCommand(TestCase):
    """
    Tests for the subcommands and their reports.
    """

    def setUp(self):
        super().setUp()
        self.tmp = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        self.addCleanup(self.tmp.cleanup)

    def assertExitCode(self, code, *argv):  # pylint: disable=invalid-name
        with self.assertRaises(CommandError) as context:
            run_command(*argv)
        self.assertEqual(code, context.exception.returncode)
        return context.exception

    def test_spectral(self):
        report = json.loads(run_command("spectral", "h6"))

        self.assertGreater(report["q"], 8)
        self.assertEqual(6, len(report["perron"]))
        self.assertTrue(report["connected"])

    def test_bound_text(self):
        text = run_command("bound", "icosahedron", "--format", "text")

        self.assertIn("'case_tag': 'iii'", text)
        self.assertIn("'case_bound': 14", text)

    def test_bound_from_edge_list_file(self):
        path = os.path.join(self.tmp.name, "icosahedron.edges")
        with open(path, "w", encoding="utf-8") as stream:
            stream.write(write_edge_list(icosahedron()))

        report = json.loads(run_command("bound", path))

        self.assertEqual(14.0, report["case_bound"])
        self.assertAlmostEqual(12.4, report["planar_bound"])
        self.assertLessEqual(report["q"], 14.0)

    def test_certify(self):
        report = json.loads(run_command("certify", "icosahedron"))

        self.assertEqual("certified", report["status"])
        self.assertEqual("max-degree-n-3", report["lemma_tag"])

    def test_uncertified_is_not_a_failure(self):
        report = json.loads(run_command("certify", "h500"))

        self.assertEqual("uncertified", report["status"])

    @patch("qplanar.management.commands.qplanar.certify_upper")
    def test_failed_certificate(self, mock_certify):
        mock_certify.return_value = CertificationReport(
            n=500,
            m=1494,
            delta_max=498,
            delta_second=7,
            certified=False,
            attempts=[Attempt(lemma_tag="sparse-n-2", outcome="fail", reason="-1/3")],
        )

        error = self.assertExitCode(2, "certify", "near_wheel:500")

        self.assertIn("sparse-n-2", str(error))

    def test_not_maximal_planar(self):
        self.assertExitCode(1, "certify", "c8")

    def test_swap_demo(self):
        report = json.loads(run_command("swap-demo", "single", "15", "7"))

        self.assertTrue(report["passed"])
        self.assertTrue(report["result_is_H"])
        self.assertEqual([5, 7], report["plan"]["remove"])

    def test_swap_demo_apart(self):
        report = json.loads(run_command("swap-demo", "apart", "20", "5", "15"))

        self.assertTrue(report["passed"])
        self.assertFalse(report["result_is_H"])

    def test_swap_demo_out_of_range(self):
        self.assertExitCode(1, "swap-demo", "near", "15", "4")

    def test_gen_csv(self):
        lines = run_command("gen", "6", "--format", "csv").splitlines()

        self.assertEqual("index,n,m,degrees", lines[0])
        self.assertEqual(3, len(lines))

    @patch("qplanar.management.commands.qplanar.census")
    def test_census_mismatch(self, mock_census):
        mock_census.return_value = Census(n=6, count=1, expected=2)

        self.assertExitCode(2, "gen", "6")

    def test_search(self):
        report = json.loads(run_command("search", "6"))

        self.assertEqual(2, report["count"])
        self.assertTrue(report["is_H"])
        self.assertNotIn("q_values", report)

    @patch("qplanar.management.commands.qplanar.extremal_search")
    def test_search_without_h(self, mock_search):
        mock_search.return_value = SearchResult(
            n=5, count=1, best=icosahedron(), best_q=1.0, is_H=False, maximizers=[0], q_values=[1.0]
        )

        self.assertExitCode(2, "search", "5")

    def test_verify_h_text(self):
        lines = run_command("verify-h", "5", "12").splitlines()

        self.assertEqual(8, len(lines))
        for n, line in zip(range(5, 13), lines):
            match = VERIFY_H_LINE.match(line)
            self.assertIsNotNone(match, line)
            self.assertEqual(str(n), match.group(1))
            self.assertGreater(float(match.group(2)), n + 2)

    def test_verify_h_json(self):
        checks = json.loads(run_command("verify-h", "5", "7", "--format", "json"))

        self.assertEqual([5, 6, 7], [check["n"] for check in checks])
        self.assertTrue(all(check["passed"] for check in checks))

    @ddt.data(("8", "5"), ("3", "6"))
    @ddt.unpack
    def test_verify_h_bad_range(self, n_min, n_max):
        self.assertExitCode(1, "verify-h", n_min, n_max)

    @ddt.data(
        ("bound", "dodecahedron"),
        ("spectral", "k4", "--tol", "-1"),
        ("search", "6", "--format", "avro"),
        ("gen", "3"),
        ("search", "6", "--file", "/nonexistent/classes.pc"),
        ("spectral",),
        ("spectral", "k4", "--bogus"),
        ("teleport", "k4"),
    )
    def test_usage_errors(self, argv):
        self.assertExitCode(1, *argv)

    def test_avro_output(self):
        path = os.path.join(self.tmp.name, "search.avro")

        self.assertEqual("", run_command("search", "6", "--format", "avro", "--output", path))
        with open(path, "rb") as stream:
            [record] = read_avro(stream)
        self.assertEqual(2, record["count"])
        self.assertEqual(2, len(record["q_values"]))

    def test_json_output_file(self):
        path = os.path.join(self.tmp.name, "gen.json")

        run_command("gen", "7", "--output", path)
        with open(path, encoding="utf-8") as stream:
            report = json.load(stream)
        self.assertEqual(5, report["count"])
        self.assertTrue(report["matches"])

    def test_reports_are_deterministic(self):
        self.assertEqual(run_command("gen", "7"), run_command("gen", "7", "--jobs", "2"))
        self.assertEqual(
            run_command("spectral", "random:12:10", "--seed", "7"),
            run_command("spectral", "random:12:10", "--seed", "7"),
        )
