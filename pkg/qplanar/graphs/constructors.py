"""
Standard graph constructors, the join operator and the extremal graph H.

Labels v1..vn used in docstrings map to vertices 0..n-1.
"""
import networkx as nx

from qplanar.exceptions import GraphConstructionError
from qplanar.graphs.data import Graph


def complete(n):
    """
    Complete graph K_n.
    """
    if n < 1:
        raise GraphConstructionError(kind="complete", message=f"K_n needs n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n):
    """
    Path P_n labeled 0-1-...-(n-1).
    """
    if n < 1:
        raise GraphConstructionError(kind="path", message=f"P_n needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n):
    """
    Cycle C_n labeled 0-1-...-(n-1)-0.
    """
    if n < 3:
        raise GraphConstructionError(kind="cycle", message=f"C_n needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(s, t):
    """
    Complete bipartite graph K_{s,t}; the part of size s is 0..s-1.
    """
    if s < 1 or t < 1:
        raise GraphConstructionError(kind="complete_bipartite", message=f"K_(s,t) needs s, t >= 1, got {s}, {t}")
    return Graph.from_edges(s + t, ((u, s + v) for u in range(s) for v in range(t)))


def star(leaves):
    """
    Star K_{1,leaves} with center 0.
    """
    return complete_bipartite(1, leaves)


def empty(n):
    if n < 1:
        raise GraphConstructionError(kind="empty", message=f"empty graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ())


def join(first, second):
    """
    Join of two graphs: disjoint union plus every edge between them.

    The vertices of ``first`` keep their labels, those of ``second`` are shifted by ``first.n``.
    """
    if first.n < 1 or second.n < 1:
        raise GraphConstructionError(kind="join", message="both graphs must be nonempty")
    shift = first.n
    edges = list(first.edges())
    edges.extend((u + shift, v + shift) for u, v in second.edges())
    edges.extend((u, shift + v) for u in range(first.n) for v in range(second.n))
    return Graph.from_edges(first.n + second.n, edges)


def build_H(n):  # pylint: disable=invalid-name
    """
    The extremal candidate K_2 join P_(n-2).

    For n >= 4 vertices 0 and 1 (v1, v2) are adjacent to each other and to every
    path vertex 2..n-1, the path running in index order. For n <= 3 this is K_n.
    """
    if n < 1:
        raise GraphConstructionError(kind="build_H", message=f"H needs n >= 1, got {n}")
    if n <= 3:
        return complete(n)
    return join(complete(2), path(n - 2))


def wheel(n):
    """
    Wheel on n vertices: hub 0 joined to the cycle 1..n-1.
    """
    if n < 4:
        raise GraphConstructionError(kind="wheel", message=f"wheel needs n >= 4, got {n}")
    return join(complete(1), cycle(n - 1))


def fan(n):
    """
    Fan K_1 join P_(n-1) with apex 0.
    """
    if n < 2:
        raise GraphConstructionError(kind="fan", message=f"fan needs n >= 2, got {n}")
    return join(complete(1), path(n - 1))


def icosahedron():
    return Graph.from_networkx(nx.icosahedral_graph())


def octahedron():
    return Graph.from_networkx(nx.octahedral_graph())


CONSTRUCTORS = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "empty": empty,
    "wheel": wheel,
    "fan": fan,
    "H": build_H,
    "icosahedron": icosahedron,
    "octahedron": octahedron,
}


def make(kind, *params):
    """
    Build a named graph.

    Arguments:
        kind (str): one of the CONSTRUCTORS keys, or ``"edges"`` for an edge-list
          literal given as ``make("edges", n, [(u, v), ...])``.
        params: the constructor's size parameters.

    Raises:
        GraphConstructionError: If the kind is unknown or the size is invalid.
    """
    if kind == "edges":
        n, edges = params
        return Graph.from_edges(n, edges)
    try:
        constructor = CONSTRUCTORS[kind]
    except KeyError as exc:
        raise GraphConstructionError(kind=kind, message=f"unknown graph kind; known: {sorted(CONSTRUCTORS)}") from exc
    try:
        return constructor(*params)
    except TypeError as exc:
        raise GraphConstructionError(kind=kind, message=f"invalid parameters {params!r}") from exc


def random_connected(rng, n, extra_edges=None):
    """
    Random connected graph on ``n`` vertices: a random spanning tree plus random extra edges.

    Arguments:
        rng (random.Random): seeded generator; equal seeds give equal graphs.
        n (int): number of vertices, at least 1.
        extra_edges (int): edges added on top of the tree; random when None.
    """
    if n < 1:
        raise GraphConstructionError(kind="random", message=f"needs n >= 1, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if extra_edges is None:
        extra_edges = rng.randint(0, len(candidates))
    edges.update(rng.sample(candidates, min(extra_edges, len(candidates))))
    return Graph.from_edges(n, edges)
