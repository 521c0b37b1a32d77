"""
Data attributes for combinatorial planar embeddings.
"""
import attr

from qplanar.data import JsonRecordMixin
from qplanar.graphs import Graph


def _to_rotation(value):
    return tuple(tuple(order) for order in value)


@attr.s(frozen=True)
class RotationEmbedding(JsonRecordMixin):
    """
    Rotation system of a plane graph.

    Attributes:
        rotation (tuple of tuple): clockwise cyclic order of the neighbors of every vertex.
    """

    rotation = attr.ib(type=tuple, converter=_to_rotation)

    @property
    def n(self):
        return len(self.rotation)

    @property
    def m(self):
        return sum(len(order) for order in self.rotation) // 2

    def graph(self):
        """
        The underlying Graph.
        """
        return Graph.from_edges(self.n, ((u, v) for u, order in enumerate(self.rotation) for v in order))

    def successor(self, v, u):
        """
        Neighbor of ``v`` following ``u`` in clockwise order.
        """
        order = self.rotation[v]
        return order[(order.index(u) + 1) % len(order)]

    def faces(self):
        """
        Face walks of the embedding.

        Every half-edge ``(u, v)`` lies on exactly one face; the walk continues
        with ``(v, w)`` where ``w`` follows ``u`` clockwise around ``v``.

        Returns:
            list of tuple: one vertex sequence per face, in discovery order.
        """
        positions = [{u: i for i, u in enumerate(order)} for order in self.rotation]
        seen = set()
        faces = []
        for start, order in enumerate(self.rotation):
            for first in order:
                if (start, first) in seen:
                    continue
                walk = []
                u, v = start, first
                while (u, v) not in seen:
                    seen.add((u, v))
                    walk.append(u)
                    around = self.rotation[v]
                    u, v = v, around[(positions[v][u] + 1) % len(around)]
                faces.append(tuple(walk))
        return faces

    def euler_characteristic(self):
        """
        ``n - m + f``; equals 2 for a connected plane graph with at least one edge.
        """
        return self.n - self.m + len(self.faces())
