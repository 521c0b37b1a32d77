"""
Planarity and outer-planarity tests, link cycles and the neighbor degree-sum check.
"""
import logging

import networkx as nx

from qplanar.exceptions import GraphPreconditionError
from qplanar.planarity.data import RotationEmbedding

logger = logging.getLogger(__name__)


def is_planar(graph):
    """
    Test planarity and extract a rotation system.

    Graphs with ``n >= 3`` and more than ``3n - 6`` edges are rejected before the
    embedding is attempted.

    Returns:
        RotationEmbedding or None: an embedding when the graph is planar, None otherwise.
    """
    if graph.n >= 3 and graph.m > 3 * graph.n - 6:
        return None
    planar, embedding = nx.check_planarity(graph.to_networkx())
    if not planar:
        return None
    return RotationEmbedding(
        rotation=[tuple(embedding.neighbors_cw_order(v)) if graph.degree(v) else () for v in range(graph.n)]
    )


def is_maximal_planar(graph):
    """
    Whether ``graph`` is planar with exactly ``3n - 6`` edges.

    Graphs with fewer than three vertices are never reported maximal planar.

    Raises:
        GraphPreconditionError: If a maximal planar graph on ``n >= 4`` vertices has a vertex
          of degree below 3, which would mean the planarity test is wrong.
    """
    if graph.n < 3 or graph.m != 3 * graph.n - 6:
        return False
    if is_planar(graph) is None:
        return False
    if graph.n >= 4 and min(graph.degrees()) < 3:
        raise GraphPreconditionError(
            operation="is_maximal_planar", message="maximal planar graph with minimum degree below 3"
        )
    return True


def is_outer_planar(graph):
    """
    Whether ``graph`` is outer-planar, tested by adding an apex adjacent to every vertex.
    """
    if graph.n >= 2 and graph.m > 2 * graph.n - 3:
        return False
    augmented = graph.to_networkx()
    apex = graph.n
    augmented.add_edges_from((apex, v) for v in range(graph.n))
    planar, _ = nx.check_planarity(augmented)
    return planar


def is_maximal_outer_planar(graph):
    """
    Whether ``graph`` is outer-planar with exactly ``2n - 3`` edges (n >= 2).
    """
    return graph.n >= 2 and graph.m == 2 * graph.n - 3 and is_outer_planar(graph)


def link_cycle(graph, embedding, u):
    """
    Cyclic order of the neighbors of ``u`` in a triangulation.

    The order is the Hamiltonian cycle of the open neighborhood subgraph of ``u``.
    It starts at the smallest neighbor and runs in the direction whose second entry
    is smaller.

    Arguments:
        graph (Graph): a maximal planar graph with n >= 4.
        embedding (RotationEmbedding): its embedding, or None to compute one.
        u (int): the vertex.

    Returns:
        tuple: the neighbors of ``u`` in cyclic order.

    Raises:
        GraphPreconditionError: If ``u`` is not a vertex or the graph is not maximal planar.
    """
    if not 0 <= u < graph.n:
        raise GraphPreconditionError(operation="link_cycle", message=f"vertex {u} not in graph")
    if graph.n < 4 or graph.m != 3 * graph.n - 6:
        raise GraphPreconditionError(operation="link_cycle", message="graph is not maximal planar with n >= 4")
    if embedding is None:
        embedding = is_planar(graph)
        if embedding is None:
            raise GraphPreconditionError(operation="link_cycle", message="graph is not planar")
    order = list(embedding.rotation[u])
    start = order.index(min(order))
    forward = order[start:] + order[:start]
    backward = [forward[0]] + forward[1:][::-1]
    return tuple(min(forward, backward))


def faces(embedding):
    """
    Face walks of ``embedding``.
    """
    return embedding.faces()


def check_outerplanar_degree_sum(graph, u):
    """
    Check ``sum of d(v) over v ~ u <= n + 3 d(u) - 4`` on a maximal outer-planar graph.

    Raises:
        GraphPreconditionError: If the graph is not maximal outer-planar or ``u`` is not a vertex.
    """
    if not 0 <= u < graph.n:
        raise GraphPreconditionError(operation="check_outerplanar_degree_sum", message=f"vertex {u} not in graph")
    if not is_maximal_outer_planar(graph):
        raise GraphPreconditionError(
            operation="check_outerplanar_degree_sum", message="graph is not maximal outer-planar"
        )
    neighbor_sum = sum(graph.degree(v) for v in graph.adj[u])
    return neighbor_sum <= graph.n + 3 * graph.degree(u) - 4


def gap_profile(graph, u, hub, embedding=None):
    """
    Lengths of the runs of link-cycle vertices of ``u`` that are not adjacent to ``hub``.

    ``hub`` must be a neighbor of ``u``; the runs are listed in cyclic order starting
    after ``hub``.
    """
    if not graph.has_edge(u, hub):
        raise GraphPreconditionError(operation="gap_profile", message=f"{hub} is not a neighbor of {u}")
    cycle = list(link_cycle(graph, embedding, u))
    start = cycle.index(hub)
    walk = cycle[start + 1:] + cycle[:start]
    runs = []
    current = 0
    for v in walk:
        if graph.has_edge(hub, v):
            if current:
                runs.append(current)
            current = 0
        else:
            current += 1
    if current:
        runs.append(current)
    return runs
