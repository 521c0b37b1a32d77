"""
Tests for the edge-list format.
"""
import ddt
from django.test import TestCase

from qplanar.exceptions import GraphConstructionError
from qplanar.graphs import build_H, icosahedron, read_edge_list, write_edge_list


@ddt.ddt
class TestEdgeList(TestCase):
    """
    Tests for read_edge_list and write_edge_list.
    """

    def test_write(self):
        self.assertEqual("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", write_edge_list(build_H(4)))

    def test_read_back(self):
        for graph in (build_H(9), icosahedron()):
            self.assertEqual(graph, read_edge_list(write_edge_list(graph)))

    def test_comments_and_blank_lines(self):
        graph = read_edge_list("# triangle\n3 3\n\n0 1\n1 2\n0 2\n")

        self.assertEqual(3, graph.m)

    @ddt.data(
        "",
        "3\n",
        "3 x\n",
        "3 2\n0 1\n",
        "3 1\n0 1 2\n",
        "3 1\n0 a\n",
        "3 2\n0 1\n1 0\n",
        "3 1\n0 5\n",
    )
    def test_malformed(self, text):
        with self.assertRaises(GraphConstructionError):
            read_edge_list(text)

    @ddt.data(
        ("# two triangles\n\n3 3\n0 1\n# closing edge\n1 2 0\n", "line 6: expected 'u v'"),
        ("3 2\n\n\n0 1\n\n1 b\n", "line 6: non-integer vertex"),
        ("\n# header\n3 x\n", "line 3: malformed header"),
    )
    @ddt.unpack
    def test_error_names_physical_line(self, text, expected):
        with self.assertRaises(GraphConstructionError) as context:
            read_edge_list(text)

        self.assertIn(expected, str(context.exception))
