"""
Data attributes for simple undirected graphs.

Graphs are immutable values: edge edits return new graphs, so instances can be
shared freely between worker processes.
"""
from collections import deque

import attr
import networkx as nx

from qplanar.data import JsonRecordMixin
from qplanar.exceptions import GraphConstructionError, GraphPreconditionError


def _to_adjacency(value):
    return tuple(frozenset(neighbors) for neighbors in value)


def _check_simple(instance, attribute, value):  # pylint: disable=unused-argument
    """
    Ensure the adjacency describes a simple undirected graph on 0..n-1.
    """
    if len(value) != instance.n:
        raise GraphConstructionError(kind="Graph", message=f"adjacency has {len(value)} rows for n={instance.n}")
    for u, neighbors in enumerate(value):
        for v in neighbors:
            if not 0 <= v < instance.n:
                raise GraphConstructionError(kind="Graph", message=f"vertex {v} out of range 0..{instance.n - 1}")
            if v == u:
                raise GraphConstructionError(kind="Graph", message=f"self-loop at vertex {u}")
            if u not in value[v]:
                raise GraphConstructionError(kind="Graph", message=f"adjacency not symmetric on edge {u}-{v}")


@attr.s(frozen=True, eq=True, hash=True, repr=False)
class Graph(JsonRecordMixin):
    """
    Simple undirected graph with vertices labeled 0..n-1.

    Attributes:
        n (int): number of vertices.
        adj (tuple of frozenset): neighbor set of every vertex.
    """

    n = attr.ib(type=int, validator=attr.validators.instance_of(int))
    adj = attr.ib(type=tuple, converter=_to_adjacency, validator=_check_simple)

    # Nested inside other records, a graph serializes as its edge list.
    serialize_as_value = True

    def __repr__(self):
        return f"<Graph n={self.n} m={self.m}>"

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a graph from an iterable of vertex pairs.

        Duplicate pairs are merged; self-loops and out-of-range vertices raise
        GraphConstructionError.
        """
        if n < 0:
            raise GraphConstructionError(kind="Graph", message=f"negative vertex count {n}")
        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphConstructionError(kind="Graph", message=f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(kind="Graph", message=f"edge {u}-{v} out of range 0..{n - 1}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n=n, adj=adjacency)

    @classmethod
    def from_networkx(cls, graph):
        """
        Build a graph from a networkx graph, relabeling its nodes to 0..n-1 in sorted order.
        """
        order = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[u], index[v]) for u, v in graph.edges()))

    @property
    def m(self):
        return sum(len(neighbors) for neighbors in self.adj) // 2

    def degree(self, v):
        return len(self.adj[v])

    def degrees(self):
        return [len(neighbors) for neighbors in self.adj]

    def neighbors(self, v):
        """
        Sorted neighbor list of ``v``.
        """
        return sorted(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj[u]

    def edges(self):
        """
        Sorted list of edges ``(u, v)`` with ``u < v``.
        """
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def non_edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if v not in self.adj[u]]

    def add_edge(self, u, v):
        """
        Return a new graph with the edge ``u-v`` added.
        """
        if self.has_edge(u, v):
            raise GraphPreconditionError(operation="add_edge", message=f"edge {u}-{v} already present")
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u, v):
        """
        Return a new graph with the edge ``u-v`` removed.
        """
        if not self.has_edge(u, v):
            raise GraphPreconditionError(operation="remove_edge", message=f"edge {u}-{v} not present")
        pair = (min(u, v), max(u, v))
        return Graph.from_edges(self.n, [edge for edge in self.edges() if edge != pair])

    def relabel(self, permutation):
        """
        Return the graph where vertex ``v`` becomes ``permutation[v]``.
        """
        if sorted(permutation) != list(range(self.n)):
            raise GraphConstructionError(kind="relabel", message="argument is not a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((permutation[u], permutation[v]) for u, v in self.edges()))

    def induced_subgraph(self, vertices):
        """
        Induced subgraph on ``vertices`` plus the label map back to this graph.

        Returns:
            (Graph, list): the subgraph on 0..k-1 and the list mapping its labels to ours.
        """
        label_map = sorted(set(vertices))
        index = {v: i for i, v in enumerate(label_map)}
        edges = [(index[u], index[v]) for u in label_map for v in self.adj[u] if v in index and u < v]
        return Graph.from_edges(len(label_map), edges), label_map

    def is_connected(self):
        """
        Whether the graph is connected (the empty graph and K1 count as connected).
        """
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def to_json_data(self):
        return {"n": self.n, "m": self.m, "edges": [list(edge) for edge in self.edges()]}


@attr.s(frozen=True)
class DegreeProfile(JsonRecordMixin):
    """
    Degree bookkeeping of a graph.

    Attributes:
        degrees (tuple of int): degrees sorted in non-increasing order.
        delta_max (int): largest degree.
        delta_second (int): second largest degree counted with multiplicity, so it
          equals delta_max when two vertices attain it.
        delta_min (int): smallest degree.
        m (int): number of edges.
    """

    degrees = attr.ib(type=tuple, converter=tuple)
    delta_max = attr.ib(type=int)
    delta_second = attr.ib(type=int)
    delta_min = attr.ib(type=int)
    m = attr.ib(type=int)

    def satisfies_maximal_planar_census(self):
        """
        Whether the degree sum is 6n-12 and every degree is at least 3.
        """
        n = len(self.degrees)
        return n >= 4 and sum(self.degrees) == 6 * n - 12 and self.delta_min >= 3


def degree_profile(graph):
    """
    Compute the DegreeProfile of ``graph``.
    """
    degrees = sorted(graph.degrees(), reverse=True)
    if not degrees:
        return DegreeProfile(degrees=(), delta_max=0, delta_second=0, delta_min=0, m=0)
    second = degrees[1] if len(degrees) > 1 else 0
    return DegreeProfile(
        degrees=degrees,
        delta_max=degrees[0],
        delta_second=second,
        delta_min=degrees[-1],
        m=graph.m,
    )


def neighborhood_subgraphs(graph, u):
    """
    Induced subgraphs on the closed and open neighborhoods of ``u``.

    Returns:
        ((Graph, list), (Graph, list)): G(u) and G°(u), each with its label map back to ``graph``.
    """
    if not 0 <= u < graph.n:
        raise GraphPreconditionError(operation="neighborhood_subgraphs", message=f"vertex {u} not in graph")
    closed = graph.induced_subgraph(graph.adj[u] | {u})
    opened = graph.induced_subgraph(graph.adj[u])
    return closed, opened
