"""
Test utilities for the qplanar toolkit.

Provides seeded random graph helpers shared by the property tests of every subpackage.
"""
import random

from qplanar.graphs import random_connected

random_connected_graph = random_connected


def random_relabeling(rng, graph):
    """
    Copy of ``graph`` under a random permutation of its vertices.
    """
    permutation = list(range(graph.n))
    rng.shuffle(permutation)
    return graph.relabel(permutation)


class SeededRandomMixin:
    """
    A mixin giving each TestCase a fresh ``random.Random`` seeded by ``seed``.
    """

    seed = 20240617

    def setUp(self):
        """
        Create the seeded generator.
        """
        super().setUp()
        self.rng = random.Random(self.seed)
