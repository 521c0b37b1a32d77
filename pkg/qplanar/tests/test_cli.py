"""
Tests for the stand-alone entry point and its helpers.
"""
import io
import json
import os
import random
import tempfile
from unittest.mock import patch

import ddt
from django.test import TestCase

from qplanar.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, RunConfig, resolve_graph, run
from qplanar.exceptions import ConfigurationError, GraphConstructionError
from qplanar.graphs import build_H, complete, cycle, write_edge_list
from qplanar.spectral import BoundReport


@ddt.ddt
class TestResolveGraph(TestCase):
    """
    Tests for the graph names accepted on the command line.
    """

    @ddt.data(
        ("k5", 5, 10),
        ("p4", 4, 3),
        ("c6", 6, 6),
        ("h9", 9, 21),
        ("icosahedron", 12, 30),
        ("octahedron", 6, 12),
        ("fan:6", 6, 9),
        ("star:5", 5, 4),
        ("near_wheel:36", 36, 102),
        ("wheel:36", 36, 102),
        ("tower:36", 36, 102),
        ("two_hub:500:9", 500, 1494),
        ("mid_band:600:4:n-2", 600, 1794),
        ("random:10:0", 10, 9),
    )
    @ddt.unpack
    def test_names(self, name, n, m):
        graph = resolve_graph(name)

        self.assertEqual(n, graph.n)
        self.assertEqual(m, graph.m)

    def test_sized_names(self):
        self.assertEqual(build_H(9), resolve_graph("h9"))
        self.assertEqual(complete(4), resolve_graph("k4"))
        self.assertEqual(cycle(7), resolve_graph("c7"))

    def test_random_graphs_replay(self):
        first = resolve_graph("random:15", random.Random(3))
        second = resolve_graph("random:15", random.Random(3))

        self.assertEqual(first, second)
        self.assertTrue(first.is_connected())

    def test_edge_list_file(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "c5.edges")
            with open(path, "w", encoding="utf-8") as stream:
                stream.write(write_edge_list(cycle(5)))

            self.assertEqual(cycle(5), resolve_graph(path))

    @ddt.data("dodecahedron", "k", "fan:x", "tower:36:3", "two_hub", "near_wheel:30", "star:1:2")
    def test_invalid_names(self, name):
        with self.assertRaises(GraphConstructionError):
            resolve_graph(name)


@ddt.ddt
class TestRunConfig(TestCase):
    """
    Tests for the parsed command line.
    """

    @ddt.data(("verify-h", "text"), ("search", "json"), ("bound", "json"))
    @ddt.unpack
    def test_default_format(self, subcommand, output_format):
        config = RunConfig.from_options({"subcommand": subcommand})

        self.assertEqual(output_format, config.output_format)
        self.assertEqual(0, config.seed)

    def test_params(self):
        config = RunConfig.from_options({"subcommand": "gen", "n": 7, "tol": 1e-12}, ("n",))

        self.assertEqual({"n": 7}, config.params)
        self.assertEqual(1e-12, config.tol)

    def test_seeded_generator(self):
        config = RunConfig(subcommand="spectral", seed=11)

        self.assertEqual(config.rng().random(), random.Random(11).random())

    @ddt.data(
        {"subcommand": "spectral", "tol": 0.0},
        {"subcommand": "spectral", "jobs": 0},
        {"subcommand": "search", "output_format": "avro"},
    )
    def test_invalid(self, options):
        with self.assertRaises(ConfigurationError):
            RunConfig.from_options(options)


class TestRun(TestCase):
    """
    Tests for run, the console entry point.
    """

    def run_argv(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    def test_success(self):
        code, out, err = self.run_argv("search", "5")

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(1, json.loads(out)["count"])
        self.assertEqual("", err)

    def test_usage_error(self):
        code, out, err = self.run_argv("bound", "dodecahedron")

        self.assertEqual(EXIT_ERROR, code)
        self.assertEqual("", out)
        self.assertTrue(err.startswith("qplanar: GraphConstructionError"))

    def test_unknown_subcommand(self):
        code, _, err = self.run_argv("teleport")

        self.assertEqual(EXIT_ERROR, code)
        self.assertIn("teleport", err)

    @patch("qplanar.management.commands.qplanar.bound_report")
    def test_fail_outcome(self, mock_report):
        mock_report.return_value = BoundReport(n=4, m=6, q=9.0, residual=0.0, lower_delta=4, merris=6.0)

        code, out, err = self.run_argv("bound", "k4")

        self.assertEqual(EXIT_FAIL, code)
        self.assertEqual(9.0, json.loads(out)["q"])
        self.assertIn("FAIL", err)
